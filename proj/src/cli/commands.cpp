#include "sforge/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sforge/cli/app.hpp"
#include "sforge/errors.hpp"
#include "sforge/families.hpp"
#include "sforge/series.hpp"
#include "sforge/stirling.hpp"

namespace sforge::cli {

namespace {

using nlohmann::json;

constexpr unsigned kMaxPolyIndex = 100;
constexpr unsigned kMaxNaivePower = 1000;
constexpr unsigned kMaxNaiveCount = 1000000;
constexpr unsigned kMaxVerifyIndex = 100;
constexpr unsigned kMaxSeriesOrder = 200;

constexpr std::array kExpandKinds = {"exp",          "stirling2-egf", "bell-egf",
                                     "bernoulli-egf", "bernoulli-log", "euler-egf",
                                     "fermi",        "inverse-factorial"};

int usage_error(std::ostream& err, const std::string& message) {
    err << "error: " << message << '\n';
    return kExitUsage;
}

void emit_json(std::ostream& out, const std::string& command, json params, json result,
               const std::vector<std::string>& notes) {
    json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["result"] = std::move(result);
    doc["notes"] = notes;
    out << doc.dump(2) << '\n';
}

const char* format_name(Format f) {
    switch (f) {
    case Format::plain: return "plain";
    case Format::json: return "json";
    case Format::csv: return "csv";
    }
    return "plain";
}

// --- table -------------------------------------------------------------

using Grid = std::vector<std::vector<std::optional<std::string>>>;

void render_grid_plain(std::ostream& out, const Grid& grid) {
    std::vector<std::size_t> width;
    for (const auto& row : grid) {
        if (width.size() < row.size())
            width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c])
                width[c] = std::max(width[c], row[c]->size());
    }
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                line += ' ';
            const std::string cell = row[c].value_or("");
            line.append(width[c] - cell.size(), ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
}

void render_grid_csv(std::ostream& out, const Grid& grid, char column_prefix,
                     std::size_t columns) {
    for (std::size_t c = 0; c < columns; ++c)
        out << (c ? "," : "") << column_prefix << c;
    out << '\n';
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < columns; ++c) {
            if (c)
                out << ',';
            if (c < row.size() && row[c])
                out << *row[c];
        }
        out << '\n';
    }
}

std::vector<std::string> table_notes(const std::string& kind, unsigned max_m) {
    std::vector<std::string> notes;
    if (max_m < 9)
        return notes;
    if (kind == "s2")
        notes.push_back("S(9,7) = 462; Stirling's printed first table shows 461 at this "
                        "position (transcription error in the historical table)");
    else
        notes.push_back("|s(9,3)| = 118124; Stirling's printed second table shows 105056 at "
                        "this position (transcription error in the historical table)");
    return notes;
}

}  // namespace

int cmd_table(const TableOptions& opt, Format format, std::ostream& out, std::ostream& err) {
    if (opt.kind != "s2" && opt.kind != "s1" && opt.kind != "s1u")
        return usage_error(err, "table kind must be one of s2, s1, s1u");
    if (opt.layout != "modern" && opt.layout != "stirling")
        return usage_error(err, "layout must be modern or stirling");
    if (opt.max_m > kMaxTableSize)
        return usage_error(err, "--max-m must be at most " + std::to_string(kMaxTableSize));

    const Triangle t = opt.kind == "s2"    ? second_kind_table(opt.max_m)
                       : opt.kind == "s1u" ? first_kind_table(opt.max_m)
                                           : signed_first_kind_table(opt.max_m);
    const bool stirling_layout = opt.layout == "stirling";
    const unsigned size = opt.max_m + 1;

    // Modern layout: row m, column n.  Stirling layout: row n, column m.
    Grid grid(size);
    for (unsigned r = 0; r < size; ++r) {
        if (stirling_layout) {
            grid[r].resize(size);
            for (unsigned m = r; m < size; ++m)
                grid[r][m] = t.at(m, r).get_str();
        } else {
            for (unsigned n = 0; n <= r; ++n)
                grid[r].push_back(t.at(r, n).get_str());
        }
    }
    const auto notes = table_notes(opt.kind, opt.max_m);

    switch (format) {
    case Format::plain:
        render_grid_plain(out, grid);
        for (const auto& n : notes)
            out << "note: " << n << '\n';
        break;
    case Format::csv:
        render_grid_csv(out, grid, stirling_layout ? 'm' : 'n', size);
        break;
    case Format::json: {
        json rows = json::array();
        for (const auto& row : grid) {
            json jr = json::array();
            for (const auto& cell : row)
                jr.push_back(cell ? json(*cell) : json(nullptr));
            rows.push_back(std::move(jr));
        }
        json result{{"kind", opt.kind},
                    {"layout", opt.layout},
                    {"row_index", stirling_layout ? "n" : "m"},
                    {"column_index", stirling_layout ? "m" : "n"},
                    {"rows", std::move(rows)}};
        emit_json(out, "table",
                  {{"kind", opt.kind}, {"max_m", opt.max_m}, {"layout", opt.layout},
                   {"format", format_name(format)}},
                  std::move(result), notes);
        break;
    }
    }
    return kExitOk;
}

int cmd_poly(const PolyOptions& opt, Format format, std::ostream& out, std::ostream& err) {
    if (opt.n > kMaxPolyIndex)
        return usage_error(err, "n must be at most " + std::to_string(kMaxPolyIndex));
    Polynomial p;
    if (opt.family == "phi")
        p = exponential_poly(opt.n);
    else if (opt.family == "omega")
        p = geometric_poly(opt.n);
    else if (opt.family == "euler")
        p = euler_poly(opt.n);
    else if (opt.family == "eulerian")
        p = eulerian_poly(opt.n);
    else
        return usage_error(err, "family must be one of phi, omega, euler, eulerian");

    switch (format) {
    case Format::plain:
        out << format_polynomial(p) << '\n';
        break;
    case Format::csv:
        out << "power,coefficient\n";
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            out << i << ',' << p.coeffs()[i] << '\n';
        break;
    case Format::json: {
        json coeffs = json::array();
        for (const auto& c : p.coeffs())
            coeffs.push_back(c.to_string());
        emit_json(out, "poly",
                  {{"family", opt.family}, {"n", opt.n}, {"format", format_name(format)}},
                  {{"coefficients", std::move(coeffs)}, {"text", format_polynomial(p)}}, {});
        break;
    }
    }
    return kExitOk;
}

int cmd_powersum(const PowerSumOptions& opt, Format format, std::ostream& out,
                 std::ostream& err) {
    static constexpr std::array kMethods = {"naive", "bernoulli", "stirling"};
    const bool all = opt.method == "all";
    if (!all && std::find(kMethods.begin(), kMethods.end(), std::string_view(opt.method)) ==
                    kMethods.end())
        return usage_error(err, "method must be one of naive, bernoulli, stirling, all");
    if (opt.n == 0)
        return usage_error(err, "n must be at least 1");
    const bool naive = all || opt.method == "naive";
    const bool formula = all || opt.method != "naive";
    if (naive && (opt.m > kMaxNaivePower || opt.n > kMaxNaiveCount))
        return usage_error(err, "naive method requires m <= 1000 and n <= 1000000");
    if (formula && opt.m > kMaxTableSize)
        return usage_error(err, "formula methods require m <= " + std::to_string(kMaxTableSize));

    std::vector<std::pair<std::string, std::string>> values;
    if (naive)
        values.emplace_back("naive", power_sum_naive(opt.m, opt.n).get_str());
    if (all || opt.method == "bernoulli")
        values.emplace_back("bernoulli", power_sum_bernoulli(opt.m, opt.n + 1).to_string());
    if (all || opt.method == "stirling")
        values.emplace_back("stirling", power_sum_stirling(opt.m, opt.n).get_str());
    const bool agree = std::all_of(values.begin(), values.end(),
                                   [&](const auto& v) { return v.second == values[0].second; });

    switch (format) {
    case Format::plain:
        if (values.size() == 1) {
            out << values[0].second << '\n';
        } else {
            for (const auto& [k, v] : values)
                out << k << ": " << v << '\n';
            out << "agree: " << (agree ? "yes" : "no") << '\n';
        }
        break;
    case Format::csv:
        out << "method,value\n";
        for (const auto& [k, v] : values)
            out << k << ',' << v << '\n';
        break;
    case Format::json: {
        json vals = json::object();
        for (const auto& [k, v] : values)
            vals[k] = v;
        emit_json(out, "powersum",
                  {{"m", opt.m}, {"n", opt.n}, {"method", opt.method},
                   {"format", format_name(format)}},
                  {{"values", std::move(vals)}, {"agree", agree}}, {});
        break;
    }
    }
    return agree ? kExitOk : kExitFailure;
}

int cmd_verify(const std::string& id, const VerifyParams& params, Format format,
               std::ostream& out, std::ostream& err) {
    if (id != "all" && !is_known_identity(id))
        return usage_error(err, "unknown identity id '" + id + "'");
    if (params.max > kMaxVerifyIndex || params.order > kMaxVerifyIndex)
        return usage_error(err, "--max and --order must be at most " +
                                    std::to_string(kMaxVerifyIndex));

    std::vector<VerificationReport> reports;
    if (id == "all")
        reports = run_all_identities(params);
    else
        reports.push_back(run_identity(id, params));

    std::uint64_t checked = 0, failures = 0;
    for (const auto& r : reports) {
        checked += r.checked;
        failures += r.failures.size();
    }
    const bool pass = failures == 0;

    switch (format) {
    case Format::plain:
        for (const auto& r : reports) {
            out << r.identity_id << ": " << (r.passed() ? "pass" : "FAIL") << " (checked "
                << r.checked << ", failures " << r.failures.size() << ") ["
                << r.range_description << "]\n";
            for (const auto& f : r.failures)
                out << "  failure at " << f.inputs << ": expected " << f.expected << ", got "
                    << f.actual << '\n';
        }
        if (reports.size() > 1)
            out << "total: checked " << checked << ", failures " << failures << ", status "
                << (pass ? "pass" : "FAIL") << '\n';
        break;
    case Format::csv:
        out << "id,checked,failures,status\n";
        for (const auto& r : reports)
            out << r.identity_id << ',' << r.checked << ',' << r.failures.size() << ','
                << (r.passed() ? "pass" : "fail") << '\n';
        break;
    case Format::json: {
        json jr = json::array();
        for (const auto& r : reports) {
            json jf = json::array();
            for (const auto& f : r.failures)
                jf.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
            jr.push_back({{"id", r.identity_id},
                          {"range", r.range_description},
                          {"checked", r.checked},
                          {"failures", std::move(jf)},
                          {"status", r.passed() ? "pass" : "fail"}});
        }
        emit_json(out, "verify",
                  {{"identity", id}, {"max", params.max}, {"order", params.order},
                   {"seed", params.seed}, {"format", format_name(format)}},
                  {{"reports", std::move(jr)},
                   {"checked", checked},
                   {"failures", failures},
                   {"status", pass ? "pass" : "fail"}},
                  {});
        break;
    }
    }
    return pass ? kExitOk : kExitFailure;
}

int cmd_expand(const ExpandOptions& opt, Format format, std::ostream& out, std::ostream& err) {
    if (std::find(kExpandKinds.begin(), kExpandKinds.end(), std::string_view(opt.kind)) ==
        kExpandKinds.end()) {
        std::string names;
        for (const auto* k : kExpandKinds)
            names += std::string(names.empty() ? "" : ", ") + k;
        return usage_error(err, "expand kind must be one of " + names);
    }
    if (opt.order > kMaxSeriesOrder)
        return usage_error(err, "--order must be at most " + std::to_string(kMaxSeriesOrder));

    json params{{"kind", opt.kind}, {"order", opt.order}, {"format", format_name(format)}};
    std::optional<TruncatedSeries> series;
    bool egf = true;
    json extra = json::object();
    std::vector<std::pair<std::string, std::string>> extra_lines;

    try {
        if (opt.kind == "exp") {
            series = exp_series(opt.order);
        } else if (opt.kind == "stirling2-egf") {
            params["n"] = opt.n;
            series = egf_stirling2_column(opt.n, opt.order);
        } else if (opt.kind == "bell-egf") {
            params["x"] = opt.x;
            series = bell_egf(Rational::parse(opt.x), opt.order);
        } else if (opt.kind == "bernoulli-egf") {
            series = bernoulli_egf(opt.order);
        } else if (opt.kind == "bernoulli-log") {
            series = bernoulli_log_trick(opt.order);
        } else if (opt.kind == "euler-egf") {
            params["x"] = opt.x;
            series = euler_poly_egf(Rational::parse(opt.x), opt.order);
        } else if (opt.kind == "fermi") {
            params["lambda"] = opt.lambda;
            params["mu"] = opt.mu;
            series = fermi_expansion(Rational::parse(opt.lambda), Rational::parse(opt.mu),
                                     opt.order);
        } else {
            params.erase("order");
            params["m"] = opt.m;
            params["K"] = opt.K;
            params["z"] = opt.z;
            if (opt.m == 0)
                return usage_error(err, "--m must be at least 1");
            if (opt.m + opt.K > kMaxTableSize)
                return usage_error(err, "--m plus --K must be at most " +
                                            std::to_string(kMaxTableSize));
            const Rational z = Rational::parse(opt.z);
            if (z.sign() <= 0)
                return usage_error(err, "--z must be positive");
            egf = false;
            series = inverse_factorial_partial_sum(opt.m, opt.K);
            // Numeric illustration: the partial sum evaluated at z.
            const Triangle sigma = first_kind_table(opt.m + opt.K);
            Rational partial;
            Rational denom = 1;
            for (unsigned j = 0; j < opt.m; ++j)
                denom *= z + Rational(static_cast<long>(j));
            for (unsigned k = 0; k <= opt.K; ++k) {
                denom *= z + Rational(static_cast<long>(opt.m + k));
                partial += Rational(sigma.at(opt.m + k, opt.m)) / denom;
            }
            const Rational target = Rational(1) / pow(z, opt.m + 1);
            extra_lines = {{"partial_sum", partial.to_string()},
                           {"target", target.to_string()},
                           {"residual", (target - partial).to_string()}};
            for (const auto& [k, v] : extra_lines)
                extra[k] = v;
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(err, e.what());
    } catch (const ConstantTermError& e) {
        return usage_error(err, e.what());
    }

    std::vector<std::string> coeffs, scaled;
    Integer f = 1;
    for (unsigned i = 0; i <= series->order(); ++i) {
        if (i > 0)
            f *= i;
        coeffs.push_back(series->coefficient(i).to_string());
        scaled.push_back((Rational(f) * series->coefficient(i)).to_string());
    }

    switch (format) {
    case Format::plain:
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out << i << ' ' << coeffs[i];
            if (egf)
                out << ' ' << scaled[i];
            out << '\n';
        }
        for (const auto& [k, v] : extra_lines)
            out << k << ": " << v << '\n';
        break;
    case Format::csv:
        out << (egf ? "index,coefficient,egf_value\n" : "index,coefficient\n");
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out << i << ',' << coeffs[i];
            if (egf)
                out << ',' << scaled[i];
            out << '\n';
        }
        break;
    case Format::json: {
        json result = extra;
        result["coefficients"] = coeffs;
        if (egf)
            result["egf_values"] = scaled;
        emit_json(out, "expand", std::move(params), std::move(result), {});
        break;
    }
    }
    return kExitOk;
}

}  // namespace sforge::cli
