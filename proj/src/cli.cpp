#include "qpl/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpl/divisors.hpp"
#include "qpl/error.hpp"
#include "qpl/identities.hpp"
#include "qpl/numbers.hpp"
#include "qpl/partitions.hpp"
#include "qpl/partsets.hpp"
#include "qpl/report.hpp"
#include "qpl/theta.hpp"

namespace qpl::cli {

namespace {

using nlohmann::json;

constexpr const char* kCsvSchema = "# schema: 1\n";

std::string fmt_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::pair<double, double> parse_complex(const std::string& text, const char* what)
{
    const auto comma = text.find(',');
    const std::string re = text.substr(0, comma);
    const std::string im = comma == std::string::npos ? "0" : text.substr(comma + 1);
    auto to_double = [&](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size())
            throw CLI::ValidationError(std::string("--") + what, "expected RE,IM but got '" + text + "'");
        return v;
    };
    return {to_double(re), to_double(im)};
}

void parse_grid(const std::string& text, RunConfig& cfg)
{
    static const std::regex pattern(R"(k=(\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw CLI::ValidationError("--grid", "expected k=A..B but got '" + text + "'");
    cfg.k_min = std::stoll(m[1]);
    cfg.k_max = std::stoll(m[2]);
    if (cfg.k_min < 1 || cfg.k_max < cfg.k_min)
        throw CLI::ValidationError("--grid", "needs 1 <= A <= B");
}

void require_unit(int v, const char* flag)
{
    if (v != 1 && v != -1)
        throw CLI::ValidationError(flag, "must be 1 or -1");
}

void require_nonneg(std::int64_t v, const char* flag)
{
    if (v < 0)
        throw CLI::ValidationError(flag, "must be non-negative");
}

// ---------------------------------------------------------------- figurate

ExitStatus run_figurate(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const ModularParams p(c.k, c.ell);
    const auto entries = figurate_enumerate(p, c.bound);

    if (c.format == Format::json) {
        json rows = json::array();
        for (const auto& e : entries)
            rows.push_back({{"j", e.j}, {"value", e.value}});
        out << json{{"schema", 1}, {"k", c.k}, {"ell", c.ell}, {"bound", c.bound}, {"entries", rows}}.dump(2)
            << '\n';
    } else {
        out << kCsvSchema << "j,value\n";
        for (const auto& e : entries)
            out << e.j << ',' << e.value << '\n';
    }

    if (!c.check)
        return ExitStatus::ok;
    // Closed form against gnomon partial sums and the mirror relation.
    const ModularParams mirror = p.mirrored();
    for (const auto& e : entries) {
        std::int64_t partial = 0;
        for (std::int64_t i = 1; i <= std::abs(e.j); ++i)
            partial += gnomon(e.j > 0 ? p : mirror, i);
        if (partial != e.value || figurate(mirror, -e.j) != e.value) {
            err << "check failed: figurate value at j=" << e.j << " disagrees with the gnomon sum " << partial
                << '\n';
            return ExitStatus::verification_failure;
        }
    }
    err << "check: " << entries.size() << " values agree with gnomon sums\n";
    return ExitStatus::ok;
}

// -------------------------------------------------------------- partitions

CountMode mode_from(const RunConfig& c)
{
    const auto signing = c.gamma == 1 ? CountMode::Signing::plain : CountMode::Signing::length_signed;
    if (c.mode == "unrestricted")
        return CountMode::unrestricted(signing);
    if (c.mode == "distinct")
        return CountMode::distinct(signing);
    return CountMode::at_most(c.d, signing);
}

// The closed-form recursion covering (set, mode), if any.
std::optional<std::function<SequenceTable(std::int64_t)>> recursion_for(const PartSet& set, const CountMode& mode)
{
    if (set.scale() != 1 || !set.params())
        return std::nullopt;
    const ModularParams p = *set.params();
    const int g = mode.gamma();
    using M = CountMode::Multiplicity;
    switch (set.kind()) {
    case PartSet::Kind::Jbar:
        if (mode.multiplicity == M::unrestricted && g == 1)
            return [p](std::int64_t n) { return recursion_pbar(p, n); };
        if (mode.multiplicity != M::unrestricted && g == 1) {
            const std::int64_t d = mode.d;
            return [p, d](std::int64_t n) { return recursion_pdhat(p, d, n); };
        }
        break;
    case PartSet::Kind::J:
        if (mode.multiplicity == M::distinct)
            return [p, g](std::int64_t n) { return recursion_pdt_gamma(p, g, n); };
        if (mode.multiplicity == M::unrestricted)
            return [p, g](std::int64_t n) { return recursion_p_gamma(p, g, n); };
        break;
    default:
        break;
    }
    return std::nullopt;
}

void emit_table(const SequenceTable& t, Format f, std::ostream& out)
{
    if (f == Format::json) {
        json values = json::array();
        for (const auto& v : t.values)
            values.push_back(to_decimal(v));
        out << json{{"schema", 1},
                    {"descriptor", t.descriptor},
                    {"provenance", to_string(t.provenance)},
                    {"order", t.order()},
                    {"values", values}}
                   .dump(2)
            << '\n';
        return;
    }
    out << kCsvSchema << "n,value\n";
    for (std::size_t n = 0; n < t.values.size(); ++n)
        out << n << ',' << to_decimal(t.values[n]) << '\n';
}

// First index where a and b differ within [0, upto], or -1.
std::int64_t first_difference(const SequenceTable& a, const SequenceTable& b, std::int64_t upto)
{
    for (std::int64_t n = 0; n <= upto; ++n) {
        if (a.at(n) != b.at(n))
            return n;
    }
    return -1;
}

ExitStatus run_partitions(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const PartSet set = parse_part_set(c.set);
    const CountMode mode = mode_from(c);
    const auto recursion = recursion_for(set, mode);

    SequenceTable table;
    if (c.method == "oracle") {
        table = oracle_table(set, mode, c.n);
    } else if (c.method == "gf") {
        table = gf_count(set, mode, c.n);
    } else {
        if (!recursion)
            throw ParameterError("no recursion covers " + set.str() + " with mode " + mode.str() +
                                 "; recursions exist for Jbar (unrestricted or capped, gamma=1) and J "
                                 "(unrestricted or distinct)");
        table = (*recursion)(c.n);
    }
    emit_table(table, c.format, out);

    if (!c.check)
        return ExitStatus::ok;
    std::vector<std::pair<std::string, SequenceTable>> runs;
    runs.emplace_back("gf", gf_count(set, mode, c.n));
    const std::int64_t oracle_upto = std::min(c.n, oracle_bound());
    runs.emplace_back("oracle", oracle_table(set, mode, oracle_upto));
    if (recursion)
        runs.emplace_back("recursion", (*recursion)(c.n));
    for (const auto& [name, other] : runs) {
        const std::int64_t upto = std::min(table.order(), other.order());
        const std::int64_t bad = first_difference(table, other, upto);
        if (bad >= 0) {
            err << "check failed: " << c.method << " and " << name << " disagree at n=" << bad << " ("
                << to_decimal(table.at(bad)) << " vs " << to_decimal(other.at(bad)) << ")\n";
            return ExitStatus::verification_failure;
        }
        err << "check: " << name << " agrees through n=" << upto << '\n';
    }
    return ExitStatus::ok;
}

// ---------------------------------------------------------------- divisors

ExitStatus run_divisors(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const ModularParams p(c.k, c.ell);
    p.require_interior("restricted divisor sums");
    const auto compute = [&](const std::string& method) {
        if (method == "scan")
            return divisor_table(PartSet::Jbar(p), c.n);
        if (method == "recursion")
            return recursion_fkl(p, c.n);
        return kim_fkl(p, c.n);
    };
    const DivisorTable table = compute(c.method);

    if (c.format == Format::json) {
        json values = json::array();
        for (std::int64_t n = 1; n <= table.order(); ++n)
            values.push_back(to_decimal(table.at(n)));
        out << json{{"schema", 1}, {"descriptor", table.descriptor}, {"method", c.method}, {"values", values}}.dump(2)
            << '\n';
    } else {
        out << kCsvSchema << "n,value\n";
        for (std::int64_t n = 1; n <= table.order(); ++n)
            out << n << ',' << to_decimal(table.at(n)) << '\n';
    }

    if (!c.check)
        return ExitStatus::ok;
    for (const std::string method : {"scan", "recursion", "kim"}) {
        const DivisorTable other = compute(method);
        for (std::int64_t n = 1; n <= c.n; ++n) {
            if (other.at(n) != table.at(n)) {
                err << "check failed: " << c.method << " and " << method << " disagree at n=" << n << '\n';
                return ExitStatus::verification_failure;
            }
        }
        err << "check: " << method << " agrees through n=" << c.n << '\n';
    }
    return ExitStatus::ok;
}

// ------------------------------------------------------------------ verify

VerificationReport verify_one(const RunConfig& c)
{
    const std::string& id = c.identity;
    const auto params = [&] { return ModularParams(c.k, c.ell); };
    if (id == "triple-product")
        return verify_triple_product(c.order, c.window);
    if (id == "specialized")
        return verify_specialized(params(), c.sign, c.order);
    if (id == "berger")
        return verify_berger(c.k, c.order);
    if (id == "hermite")
        return verify_hermite(c.s);
    if (id == "boundary-half")
        return verify_boundary_half(c.k, c.order);
    if (id == "signed-distinct")
        return verify_signed_distinct(params(), c.order);
    if (id == "pbar-recursion")
        return verify_pbar_recursion(params(), c.order);
    if (id == "quotient-recursion")
        return verify_quotient_recursion(params(), c.gamma, ModularParams(c.k2, c.ell2), c.gamma2, c.order);
    if (id == "pdt-recursion")
        return verify_pdt_recursion(params(), c.gamma, c.order);
    if (id == "p-gamma-recursion")
        return verify_p_gamma_recursion(params(), c.gamma, c.order);
    if (id == "pdhat-recursion")
        return verify_pdhat_recursion(params(), c.d, c.order);
    if (id == "divisor-recursion")
        return verify_divisor_recursion(params(), c.order);
    if (id == "apostol")
        return apostol_convolution_check(params(), c.order);
    if (id == "kim")
        return kim_identity_check(params(), c.order);
    if (id == "log-derivative")
        return log_derivative_check(params(), c.order);
    if (id == "shifted-partitions")
        return identity_shifted_partitions(params(), c.gamma, c.order);
    if (id == "capped-multiplicity")
        return identity_capped_multiplicity(params(), c.d, c.order);
    throw ParameterError("unknown identity '" + id + "'");
}

std::string parameters_text(const VerificationReport& r)
{
    std::string s;
    for (const auto& [name, value] : r.parameters) {
        if (!s.empty())
            s += ';';
        s += name + '=' + std::to_string(value);
    }
    return s;
}

ExitStatus run_verify(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    std::vector<VerificationReport> reports;
    if (c.all) {
        GridOptions g;
        g.k_min = c.k_min;
        g.k_max = c.k_max;
        g.order = c.order;
        g.window = c.window;
        g.jobs = c.jobs;
        reports = verify_all(g);
    } else {
        reports.push_back(verify_one(c));
    }

    if (c.format == Format::json) {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    } else {
        out << kCsvSchema << "identity,parameters,order,outcome\n";
        for (const auto& r : reports)
            out << r.identity << ',' << parameters_text(r) << ',' << r.order << ',' << (r.passed() ? "pass" : "fail")
                << '\n';
    }

    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
    if (failed > 0) {
        err << failed << " of " << reports.size() << " checks failed\n";
        return ExitStatus::verification_failure;
    }
    return ExitStatus::ok;
}

// ------------------------------------------------------------------- theta

ExitStatus run_theta(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const ThetaVariant variant = parse_theta_variant(c.variant);
    const ThetaPoint pt(Complex(c.q_re, c.q_im), Complex(c.z_re, c.z_im));
    const ThetaClassParams cls{c.k, c.ell};
    const Complex value = theta_class(cls, variant, pt, c.tol);

    // The substituted point (q^k, q^l z); residuals are for T(. | q^k) there.
    // Quasi-periodicity degenerates at q = 0, so the residuals are omitted.
    Complex base_q = 1.0, base_z = pt.z();
    for (std::int64_t i = 0; i < c.k; ++i)
        base_q *= pt.q();
    for (std::int64_t i = 0; i < c.ell; ++i)
        base_z *= pt.q();
    const bool degenerate = base_q == Complex(0.0, 0.0);
    double shift = 0.0, period = 0.0;
    if (!degenerate) {
        shift = theta_class_residual(cls, pt, c.tol);
        period = quasi_periodicity_residual(ThetaPoint(base_q, base_z), c.tol).second;
    }
    const json residual = degenerate ? json(nullptr) : json{{"shift", shift}, {"period", period}};

    if (c.format == Format::json) {
        out << json{{"schema", 1},
                    {"variant", std::string(1, c.variant)},
                    {"k", c.k},
                    {"ell", c.ell},
                    {"value", {{"re", value.real()}, {"im", value.imag()}}},
                    {"residual", residual}}
                   .dump(2)
            << '\n';
    } else {
        out << kCsvSchema << "re,im,shift_residual,period_residual\n"
            << fmt_double(value.real()) << ',' << fmt_double(value.imag()) << ','
            << (degenerate ? "nan" : fmt_double(shift)) << ',' << (degenerate ? "nan" : fmt_double(period)) << '\n';
    }

    if (!c.check)
        return ExitStatus::ok;
    // Series against the product form (variants a and b) and the residuals.
    if (variant == ThetaVariant::b)
        base_z = -base_z;
    const double scale = std::max(1.0, std::abs(value));
    bool ok = shift <= 1e-9 * scale && period <= 1e-9 * scale;
    if (variant == ThetaVariant::a || variant == ThetaVariant::b) {
        const double gap = std::abs(theta_product(ThetaPoint(base_q, base_z), c.factors) - value);
        err << "check: |series - product| = " << fmt_double(gap) << '\n';
        ok = ok && gap <= 1e-9 * scale;
    }
    err << "check: residuals " << fmt_double(shift) << ", " << fmt_double(period) << '\n';
    if (!ok) {
        err << "check failed: theta evaluations disagree beyond 1e-9 (relative)\n";
        return ExitStatus::verification_failure;
    }
    return ExitStatus::ok;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format, std::string& output)
{
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "write to this file instead of stdout");
    sub->add_flag("--check", cfg.check, "cross-run every available method");
}

} // namespace

ParseOutcome parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    std::string format, output, grid, q_text, z_text;
    std::string variant = "a";

    CLI::App app{"exact q-series, partition and theta-function toolkit", "qpl"};
    app.require_subcommand(1);

    auto* fig = app.add_subcommand("figurate", "modular figurate numbers up to a bound");
    fig->add_option("--k", cfg.k)->required();
    fig->add_option("--ell", cfg.ell)->required();
    fig->add_option("--bound", cfg.bound)->required();
    add_common(fig, cfg, format, output);

    auto* part = app.add_subcommand("partitions", "partition counts with parts in a set");
    part->add_option("--set", cfg.set, "I:k,l J:k,l Jbar:k,l Js:k,l,s mult:k set:a,b,...")->required();
    part->add_option("--mode", cfg.mode)->check(CLI::IsMember({"unrestricted", "distinct", "atmost"}));
    part->add_option("--gamma", cfg.gamma, "+1 plain, -1 signed by length");
    part->add_option("--d", cfg.d, "multiplicity cap for --mode atmost");
    part->add_option("--n", cfg.n)->required();
    part->add_option("--method", cfg.method)->required()->check(CLI::IsMember({"oracle", "gf", "recursion"}));
    add_common(part, cfg, format, output);

    auto* div = app.add_subcommand("divisors", "divisor sums restricted to Jbar_{k,l}");
    div->add_option("--k", cfg.k)->required();
    div->add_option("--ell", cfg.ell)->required();
    div->add_option("--n", cfg.n)->required();
    div->add_option("--method", cfg.method)->required()->check(CLI::IsMember({"scan", "recursion", "kim"}));
    add_common(div, cfg, format, output);

    auto* ver = app.add_subcommand("verify", "exact identity checks");
    auto* id_opt = ver->add_option("--identity", cfg.identity);
    auto* all_opt = ver->add_flag("--all", cfg.all, "run the whole grid");
    id_opt->excludes(all_opt);
    ver->add_option("--grid", grid, "k range, e.g. k=3..8");
    ver->add_option("--k", cfg.k);
    ver->add_option("--ell", cfg.ell);
    ver->add_option("--order", cfg.order);
    ver->add_option("--sign", cfg.sign);
    ver->add_option("--gamma", cfg.gamma);
    ver->add_option("--s", cfg.s);
    ver->add_option("--d", cfg.d);
    ver->add_option("--window", cfg.window);
    ver->add_option("--k2", cfg.k2);
    ver->add_option("--ell2", cfg.ell2);
    ver->add_option("--gamma2", cfg.gamma2);
    ver->add_option("--jobs", cfg.jobs, "worker threads for --all");
    add_common(ver, cfg, format, output);

    auto* th = app.add_subcommand("theta", "numerical theta functions");
    th->add_option("--variant", variant)->check(CLI::IsMember({"a", "b", "c", "d"}));
    th->add_option("--k", cfg.k);
    th->add_option("--ell", cfg.ell);
    th->add_option("--q", q_text, "RE,IM")->required();
    th->add_option("--z", z_text, "RE,IM")->required();
    th->add_option("--tol", cfg.tol);
    th->add_option("--factors", cfg.factors, "product factors for --check");
    add_common(th, cfg, format, output);

    // Theta defaults to the plain function, not the (3,1) class.
    cfg.k = 3;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (cfg.subcommand == "theta") {
            if (th->count("--k") == 0)
                cfg.k = 1;
            if (th->count("--ell") == 0)
                cfg.ell = 0;
            std::tie(cfg.q_re, cfg.q_im) = parse_complex(q_text, "q");
            std::tie(cfg.z_re, cfg.z_im) = parse_complex(z_text, "z");
            cfg.variant = variant[0];
        }
        if (cfg.subcommand == "verify") {
            if (!cfg.all && cfg.identity.empty())
                throw CLI::ValidationError("verify", "needs --identity NAME or --all");
            if (!grid.empty())
                parse_grid(grid, cfg);
            if (cfg.jobs == 0)
                throw CLI::ValidationError("--jobs", "must be at least 1");
        }
        require_unit(cfg.gamma, "--gamma");
        require_unit(cfg.gamma2, "--gamma2");
        require_unit(cfg.sign, "--sign");
        require_nonneg(cfg.n, "--n");
        require_nonneg(cfg.bound, "--bound");
        require_nonneg(cfg.order, "--order");
        if (cfg.mode == "atmost" && cfg.d < 1)
            throw CLI::ValidationError("--d", "must be at least 1");
        if (!(cfg.tol > 0.0))
            throw CLI::ValidationError("--tol", "must be positive");
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return {std::nullopt, ExitStatus::ok};
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return {std::nullopt, ExitStatus::ok};
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return {std::nullopt, ExitStatus::usage_error};
    }

    cfg.format = cfg.subcommand == "verify" ? Format::json : Format::csv;
    if (!format.empty())
        cfg.format = format == "json" ? Format::json : Format::csv;
    if (!output.empty())
        cfg.output = output;
    return {cfg, ExitStatus::ok};
}

ExitStatus run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (config.output) {
        file.open(*config.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << *config.output << " for writing\n";
            return ExitStatus::usage_error;
        }
        sink = &file;
    }

    try {
        const std::string& sub = config.subcommand;
        if (sub == "figurate")
            return run_figurate(config, *sink, err);
        if (sub == "partitions")
            return run_partitions(config, *sink, err);
        if (sub == "divisors")
            return run_divisors(config, *sink, err);
        if (sub == "verify")
            return run_verify(config, *sink, err);
        if (sub == "theta")
            return run_theta(config, *sink, err);
        err << "error: unknown subcommand '" << sub << "'\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return ExitStatus::usage_error;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const ParseOutcome parsed = parse(args, out, err);
    if (!parsed.config)
        return static_cast<int>(parsed.status);
    return static_cast<int>(run(*parsed.config, out, err));
}

} // namespace qpl::cli
