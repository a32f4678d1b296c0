#include "geode/cli.hpp"

#include "geode/geode.hpp"
#include "geode/hypercat.hpp"
#include "geode/series_io.hpp"
#include "geode/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace geode {

namespace {

constexpr int exit_usage = 2;

struct TableArgs {
    std::size_t vars = 0;
    unsigned max_degree = 0;
    std::string kind = "S";
    std::string format = "json";
    std::string out = "-";
};

struct CoeffArgs {
    std::string kind;
    std::string exps;
};

struct VerifyArgs {
    std::string suite;
    SuiteBounds bounds;
    std::string report;
};

// Writes to `path`, or to `out` for "-". Returns false if the file cannot be opened.
bool write_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body)
{
    if (path == "-" || path.empty()) {
        body(out);
        return true;
    }
    std::ofstream f(path);
    if (!f)
        return false;
    body(f);
    f.flush();
    return static_cast<bool>(f);
}

ExpVec parse_exps(const std::string& text)
{
    std::vector<ExpVec::value_type> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
            throw std::invalid_argument("malformed exponent '" + item + "' in '" + text + "'");
        v.push_back(static_cast<ExpVec::value_type>(std::stoul(item)));
    }
    if (v.empty() || text.back() == ',')
        throw std::invalid_argument("malformed exponent list '" + text + "'");
    return ExpVec(std::move(v));
}

// Closed form when at most two exponents are nonzero, oracle series otherwise.
Integer geode_coefficient(const ExpVec& m)
{
    std::vector<std::size_t> nonzero;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0)
            nonzero.push_back(k + 1);
    if (nonzero.empty())
        return 1;
    if (nonzero.size() == 1) {
        const std::size_t s = nonzero[0];
        return geode_closed_two_nonzero(s, s + 1, m[s - 1] + 1, 0);
    }
    if (nonzero.size() == 2) {
        const std::size_t s = nonzero[0];
        const std::size_t t = nonzero[1];
        return geode_closed_two_nonzero(s, t, m[s - 1] + m[t - 1] + 1, m[t - 1]);
    }
    return geode_series(m.size(), static_cast<unsigned>(m.total_degree())).at(m);
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err)
{
    TruncatedSeries series = args.kind == "S" ? solve_S(args.vars, args.max_degree)
                                              : geode_series(args.vars, args.max_degree).series;
    const bool ok = write_output(args.out, out, [&](std::ostream& os) {
        if (args.format == "csv") {
            write_csv(os, series);
        } else if (args.kind == "G") {
            os << to_json(GeodeTable{args.vars, args.max_degree, series}).dump(2) << '\n';
        } else {
            os << to_json(series).dump(2) << '\n';
        }
    });
    if (!ok) {
        err << "cannot write " << args.out << '\n';
        return exit_usage;
    }
    return 0;
}

int cmd_coeff(const CoeffArgs& args, std::ostream& out, std::ostream& err)
{
    ExpVec m;
    try {
        m = parse_exps(args.exps);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
    out << to_decimal(args.kind == "C" ? hyper_catalan(m) : geode_coefficient(m)) << '\n';
    return 0;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    const VerifyReport report = run_suite(args.suite, args.bounds);
    const std::string text = to_json(report).dump(2);
    if (args.report.empty()) {
        out << text << '\n';
    } else {
        if (!write_output(args.report, out, [&](std::ostream& os) { os << text << '\n'; })) {
            err << "cannot write " << args.report << '\n';
            return exit_usage;
        }
        const auto s = report.summary();
        out << report.suite << ": " << s.passed << "/" << s.total << " passed\n";
    }
    for (const auto& c : report.cases)
        if (c.status != CaseStatus::pass)
            err << to_string(c.status) << ' ' << c.id << ' ' << c.params.dump() << ": expected " << c.expected
                << ", got " << c.actual << '\n';
    return report.exit_code();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hyper-Catalan and Geode numbers: coefficient tables and identity verification", "geode"};
    app.require_subcommand(1);

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Export the series S or G as JSON or CSV");
    table_cmd->add_option("--vars", table.vars, "Number of variables r")->required()->check(CLI::Range(1, 64));
    table_cmd->add_option("--max-degree", table.max_degree, "Truncation total degree N")
        ->required()
        ->check(CLI::Range(0, 200));
    table_cmd->add_option("--kind", table.kind, "S or G")->check(CLI::IsMember({"S", "G"}));
    table_cmd->add_option("--format", table.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    table_cmd->add_option("--out", table.out, "Output path, - for standard output");

    CoeffArgs coeff;
    auto* coeff_cmd = app.add_subcommand("coeff", "Print one hyper-Catalan (C) or Geode (G) coefficient");
    coeff_cmd->add_option("--kind", coeff.kind, "C or G")->required()->check(CLI::IsMember({"C", "G"}));
    coeff_cmd->add_option("--exps", coeff.exps, "Comma-separated exponents m_1,...,m_r")->required();

    VerifyArgs verify;
    unsigned max_degree = 0, max_order = 0, max_n = 0, n_max = 0, max_vars = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
    verify_cmd->add_option("suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    auto* o_degree = verify_cmd->add_option("--max-degree", max_degree, "Largest total degree checked");
    auto* o_order = verify_cmd->add_option("--max-order", max_order, "Largest power of f checked");
    auto* o_maxn = verify_cmd->add_option("--max-n", max_n, "Largest n for partition sums and the two-nonzero formula");
    auto* o_nmax = verify_cmd->add_option("--n-max", n_max, "Largest n on WZ grids");
    auto* o_vars = verify_cmd->add_option("--max-vars", max_vars, "Largest number of variables");
    verify_cmd->add_option("--a", verify.bounds.a_values, "Values of a (comma separated)")->delimiter(',');
    verify_cmd->add_option("--report", verify.report, "Write the JSON report here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_usage;
    }

    if (*o_degree)
        verify.bounds.max_degree = max_degree;
    if (*o_order)
        verify.bounds.max_order = max_order;
    if (*o_maxn)
        verify.bounds.max_n = max_n;
    if (*o_nmax)
        verify.bounds.n_max = n_max;
    if (*o_vars)
        verify.bounds.max_vars = max_vars;

    try {
        if (*table_cmd)
            return cmd_table(table, out, err);
        if (*coeff_cmd)
            return cmd_coeff(coeff, out, err);
        return cmd_verify(verify, out, err);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace geode
