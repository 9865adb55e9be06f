#pragma once

// Subcommand implementations.  Each writes its rendering to `out` and
// returns the process exit code.  Argument validation that CLI11 cannot
// express is done here and reported on `err` with exit code 2.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "sforge/cli/verify.hpp"

namespace sforge::cli {

enum class Format { plain, json, csv };

struct TableOptions {
    std::string kind = "s2";  // s2 | s1 | s1u
    unsigned max_m = 9;
    std::string layout = "modern";  // modern | stirling
};

struct PolyOptions {
    std::string family = "phi";  // phi | omega | euler | eulerian
    unsigned n = 0;
};

struct PowerSumOptions {
    unsigned m = 0;
    unsigned n = 1;
    std::string method = "all";  // naive | bernoulli | stirling | all
};

struct ExpandOptions {
    std::string kind;  // see kExpandKinds in commands.cpp
    unsigned order = 12;
    unsigned n = 1;
    std::string x = "1";
    std::string lambda = "1";
    std::string mu = "1";
    unsigned m = 1;
    unsigned K = 3;
    std::string z = "10";
};

int cmd_table(const TableOptions& opt, Format format, std::ostream& out, std::ostream& err);
int cmd_poly(const PolyOptions& opt, Format format, std::ostream& out, std::ostream& err);
int cmd_powersum(const PowerSumOptions& opt, Format format, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& id, const VerifyParams& params, Format format,
               std::ostream& out, std::ostream& err);
int cmd_expand(const ExpandOptions& opt, Format format, std::ostream& out, std::ostream& err);

}  // namespace sforge::cli
