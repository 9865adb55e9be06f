#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace sforge {

struct CheckFailure {
    std::string inputs;
    std::string expected;
    std::string actual;
};

/// Outcome of sweeping an identity over a range of inputs.  Every comparison
/// increments `checked`; mismatches are kept verbatim.
struct VerificationReport {
    std::string identity_id;
    std::string range_description;
    std::uint64_t checked = 0;
    std::vector<CheckFailure> failures;

    bool passed() const { return failures.empty(); }

    template <class T>
    bool expect_equal(const std::string& inputs, const T& expected, const T& actual) {
        ++checked;
        if (expected == actual)
            return true;
        failures.push_back({inputs, render(expected), render(actual)});
        return false;
    }

    /// Folds another report's counts and failures into this one.
    void absorb(const VerificationReport& other) {
        checked += other.checked;
        for (const auto& f : other.failures)
            failures.push_back({other.identity_id + ": " + f.inputs, f.expected, f.actual});
    }

private:
    template <class T>
    static std::string render(const T& v) {
        if constexpr (requires { v.get_str(); }) {
            return v.get_str();
        } else {
            std::ostringstream os;
            os << v;
            return os.str();
        }
    }
};

}  // namespace sforge
