#include "sforge/cli/app.hpp"

#include <algorithm>
#include <map>

#include <CLI11.hpp>

#include "sforge/cli/commands.hpp"
#include "sforge/cli/verify.hpp"
#include "sforge/errors.hpp"

namespace sforge::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Stirling-number tables, polynomial families and identity checks",
                 "stirling-forge"};
    app.require_subcommand(1);
    app.fallthrough();

    Format format = Format::plain;
    const std::map<std::string, Format> formats{
        {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "Seed for randomized verification cases");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Emit a Stirling triangle");
    table_cmd->add_option("kind", table.kind, "s2 | s1 | s1u")
        ->required()
        ->check(CLI::IsMember({"s2", "s1", "s1u"}));
    table_cmd->add_option("--max-m", table.max_m, "Largest row index");
    table_cmd->add_option("--layout", table.layout, "modern | stirling")
        ->check(CLI::IsMember({"modern", "stirling"}));

    PolyOptions poly;
    auto* poly_cmd = app.add_subcommand("poly", "Print a polynomial family member");
    poly_cmd->add_option("family", poly.family, "phi | omega | euler | eulerian")
        ->required()
        ->check(CLI::IsMember({"phi", "omega", "euler", "eulerian"}));
    poly_cmd->add_option("n", poly.n, "Index")->required();

    PowerSumOptions powersum;
    auto* powersum_cmd = app.add_subcommand("powersum", "Sum of the first n m-th powers");
    powersum_cmd->add_option("m", powersum.m, "Exponent")->required();
    powersum_cmd->add_option("n", powersum.n, "Number of terms")->required();
    powersum_cmd->add_option("--method", powersum.method, "naive | bernoulli | stirling | all")
        ->check(CLI::IsMember({"naive", "bernoulli", "stirling", "all"}));

    std::string identity;
    VerifyParams verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep an identity over a range");
    verify_cmd->add_option("identity", identity, "Identity id, or 'all'")->required();
    verify_cmd->add_option("--max", verify.max, "Largest index swept");
    verify_cmd->add_option("--order", verify.order, "Series truncation order");
    std::string ids = "Identities:";
    for (const auto& info : identity_registry())
        ids += "\n  " + info.id + "  " + info.statement;
    verify_cmd->footer(ids);

    ExpandOptions expand;
    auto* expand_cmd = app.add_subcommand("expand", "Expand a generating-function oracle");
    expand_cmd->add_option("kind", expand.kind, "Series to expand")->required();
    expand_cmd->add_option("--order", expand.order, "Truncation order");
    expand_cmd->add_option("--n", expand.n, "Column index for stirling2-egf");
    expand_cmd->add_option("--x", expand.x, "Rational point for bell-egf / euler-egf");
    expand_cmd->add_option("--lambda", expand.lambda, "fermi: lambda");
    expand_cmd->add_option("--mu", expand.mu, "fermi: mu");
    expand_cmd->add_option("--m", expand.m, "inverse-factorial: m");
    expand_cmd->add_option("--K", expand.K, "inverse-factorial: number of extra terms");
    expand_cmd->add_option("--z", expand.z, "inverse-factorial: evaluation point");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*table_cmd)
            return cmd_table(table, format, out, err);
        if (*poly_cmd)
            return cmd_poly(poly, format, out, err);
        if (*powersum_cmd)
            return cmd_powersum(powersum, format, out, err);
        if (*verify_cmd) {
            verify.seed = seed;
            return cmd_verify(identity, verify, format, out, err);
        }
        if (*expand_cmd)
            return cmd_expand(expand, format, out, err);
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sforge::cli
