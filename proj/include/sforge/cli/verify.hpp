#pragma once

// Registry of identity sweeps addressed by equation-style ids ("eq10.2").

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sforge/report.hpp"

namespace sforge::cli {

struct VerifyParams {
    unsigned max = 12;     // largest index swept
    unsigned order = 16;   // series truncation order
    std::uint64_t seed = 1;
};

struct IdentityInfo {
    std::string id;
    std::string statement;
};

/// All registered ids in registry order; "all" is not included.
const std::vector<IdentityInfo>& identity_registry();

bool is_known_identity(std::string_view id);

/// Runs one sweep.  Throws std::invalid_argument for an unknown id or "all".
VerificationReport run_identity(std::string_view id, const VerifyParams& params);

/// Runs every registered sweep in registry order.
std::vector<VerificationReport> run_all_identities(const VerifyParams& params);

}  // namespace sforge::cli
