#include "geode/verify.hpp"

#include "geode/geode.hpp"
#include "geode/hypercat.hpp"
#include "geode/identities.hpp"
#include "geode/wz.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace geode {

const char* to_string(CaseStatus s)
{
    switch (s) {
    case CaseStatus::pass:
        return "pass";
    case CaseStatus::fail:
        return "fail";
    case CaseStatus::error:
        return "error";
    }
    return "error";
}

ReportSummary VerifyReport::summary() const
{
    ReportSummary s;
    s.total = cases.size();
    for (const auto& c : cases)
        if (c.status == CaseStatus::pass)
            ++s.passed;
    s.failed = s.total - s.passed;
    return s;
}

void VerifyReport::merge(const VerifyReport& other)
{
    for (CaseResult c : other.cases) {
        c.id = other.suite + "/" + c.id;
        cases.push_back(std::move(c));
    }
}

nlohmann::json to_json(const VerifyReport& r)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"id", c.id},
                         {"params", c.params},
                         {"expected", c.expected},
                         {"actual", c.actual},
                         {"status", to_string(c.status)},
                         {"elapsed_ms", c.elapsed_ms}});
    const auto s = r.summary();
    return {{"suite", r.suite},
            {"cases", std::move(cases)},
            {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}}};
}

namespace {

using nlohmann::json;

std::string str(const Integer& z)
{
    return to_decimal(z);
}

std::string str(const UnivariateSeries& u)
{
    std::string s = "[";
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
        if (i)
            s += ",";
        s += to_decimal(u.coeffs[i]);
    }
    return s + "]";
}

std::string str(const ExpVec& m)
{
    std::string s = "(";
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(m[k]);
    }
    return s + ")";
}

json exps_json(const ExpVec& m)
{
    json j = json::array();
    for (auto e : m.values())
        j.push_back(e);
    return j;
}

// What a case computed: expected and actual as printable strings, and whether
// they agree in the sense the case defines.
struct Outcome {
    std::string expected;
    std::string actual;
    bool ok;
};

Outcome same(const std::string& expected, const std::string& actual)
{
    return {expected, actual, expected == actual};
}

class SuiteRunner {
public:
    explicit SuiteRunner(std::string suite) { report_.suite = std::move(suite); }

    void operator()(json params, const std::function<Outcome()>& body)
    {
        CaseResult c;
        char id[16];
        std::snprintf(id, sizeof id, "%05zu", report_.cases.size() + 1);
        c.id = id;
        c.params = std::move(params);
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = body();
            c.expected = std::move(o.expected);
            c.actual = std::move(o.actual);
            c.status = o.ok ? CaseStatus::pass : CaseStatus::fail;
        } catch (const std::exception& e) {
            c.actual = std::string("exception: ") + e.what();
            c.status = CaseStatus::error;
        }
        c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report_.cases.push_back(std::move(c));
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
};

std::vector<long> a_values_or(const SuiteBounds& b, std::vector<long> fallback)
{
    return b.a_values.empty() ? fallback : b.a_values;
}

std::string layer_string(const std::vector<Integer>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + to_decimal(v[i]);
    return s;
}

VerifyReport suite_thm1(const SuiteBounds& b)
{
    const unsigned D = b.max_degree.value_or(12);
    SuiteRunner run("thm1");
    const GeodeTable oracle = geode_series(2, D);
    for (unsigned d = 0; d <= D; ++d)
        for (unsigned m2 = 0; m2 <= d; ++m2) {
            const unsigned m1 = d - m2;
            run({{"m1", m1}, {"m2", m2}}, [&] {
                return same(str(oracle.at(ExpVec{m1, m2})), str(geode_closed_2var(m1, m2)));
            });
        }
    // The two tabulated layers, checked against both the closed form and the oracle.
    const std::vector<std::pair<unsigned, std::string>> rows = {{2, "5,16,12"}, {3, "14,70,110,55"}};
    for (const auto& [d, expected] : rows) {
        if (d > D)
            continue;
        run({{"layer", d}, {"source", "closed form"}}, [&, d = d, expected = expected] {
            std::vector<Integer> v;
            for (unsigned m2 = 0; m2 <= d; ++m2)
                v.push_back(geode_closed_2var(d - m2, m2));
            return same(expected, layer_string(v));
        });
        run({{"layer", d}, {"source", "oracle"}}, [&, d = d, expected = expected] {
            std::vector<Integer> v;
            for (unsigned m2 = 0; m2 <= d; ++m2)
                v.push_back(oracle.at(ExpVec{d - m2, m2}));
            return same(expected, layer_string(v));
        });
    }
    return run.take();
}

VerifyReport suite_thm2(const SuiteBounds& b)
{
    const unsigned D = b.max_degree.value_or(8);
    SuiteRunner run("thm2");
    for (long a : a_values_or(b, {2, 3, 4, 5})) {
        if (a < 2) {
            run({{"a", a}}, [] { return Outcome{"a >= 2", "invalid a", false}; });
            continue;
        }
        const auto ua = static_cast<unsigned long>(a);
        const GeodeTable oracle = geode_series(ua, D);
        for (unsigned d = 0; d <= D; ++d)
            for (unsigned q = 0; q <= d; ++q) {
                const unsigned p = d - q;
                run({{"a", a}, {"m_a", p}, {"m_a1", q}, {"exps", exps_json(shifted_index(ua, p, q))}}, [&] {
                    return same(str(oracle.at(shifted_index(ua, p, q))), str(geode_closed_shifted(ua, p, q)));
                });
                if (a == 2)
                    run({{"a", 2}, {"m_a", p}, {"m_a1", q}, {"check", "a=2 equals two-variable closed form"}}, [&] {
                        return same(str(geode_closed_2var(p, q)), str(geode_closed_shifted(2, p, q)));
                    });
            }
    }
    return run.take();
}

VerifyReport suite_thm3(const SuiteBounds& b)
{
    const unsigned N = b.max_order.value_or(8);
    SuiteRunner run("thm3");
    for (long a : a_values_or(b, {1, 2, 3})) {
        if (a < 1) {
            run({{"a", a}}, [] { return Outcome{"a >= 1", "invalid a", false}; });
            continue;
        }
        const UnivariateSeries u = eval_alternating(static_cast<unsigned long>(a), N);
        for (unsigned n = 0; n <= N; ++n)
            run({{"a", a}, {"n", n}}, [&] { return same(str(power(Integer(a), n)), str(u.coeffs[n])); });
    }
    return run.take();
}

VerifyReport suite_eq31(const SuiteBounds& b)
{
    const unsigned n_top = b.max_n.value_or(7);
    SuiteRunner run("eq31");
    for (long a : a_values_or(b, {1, 2, 3}))
        for (unsigned n = 1; n <= n_top; ++n)
            run({{"n", n}, {"a", a}}, [&] {
                const Rational q = partition_sum_main_exact(n, static_cast<unsigned>(a));
                return same(str(power(Integer(a), n - 1)), to_decimal(q));
            });
    return run.take();
}

VerifyReport suite_claims(const SuiteBounds& b)
{
    const unsigned n_top = b.max_n.value_or(7);
    SuiteRunner run("claims");
    for (long sa : a_values_or(b, {1, 2, 3})) {
        const auto a = static_cast<unsigned>(sa);
        for (unsigned n = 1; n <= n_top; ++n) {
            const std::string target = str(power(Integer(a), n - 1));
            const long x_lo = -2;
            const long x_hi = n;
            const json bound = {{"degree_in_x_at_most", n - 1}, {"points", x_hi - x_lo + 1}};
            for (long x = x_lo; x <= x_hi; ++x) {
                run({{"claim", 1}, {"n", n}, {"a", a}, {"x", x}, {"certifies", bound}},
                    [&] { return same("0", str(claim1_sum(n, a, x))); });
                run({{"claim", 2}, {"n", n}, {"a", a}, {"x", x}, {"certifies", bound}},
                    [&] { return same(target, str(claim2_sum(n, a, x))); });
                run({{"claim", "1 via claim 2 chain"}, {"n", n}, {"a", a}, {"x", x}},
                    [&] { return same(str(claim1_sum(n, a, x)), str(claim_chain_sum(n, a, x))); });
            }
            for (long x = 0; x <= x_hi; ++x)
                run({{"claim", "2 constant term"}, {"n", n}, {"a", a}, {"x", x}},
                    [&] { return same(str(claim2_sum(n, a, x)), str(claim2_ct(n, a, x))); });
            run({{"identity", "first split sum"}, {"n", n}, {"a", a}},
                [&] { return same("0", str(split_sum_first(n, a))); });
            run({{"identity", "first split sum is claim 1 at x=0"}, {"n", n}, {"a", a}},
                [&] { return same(str(-claim1_sum(n, a, 0)), str(split_sum_first(n, a))); });
            run({{"identity", "second split sum"}, {"n", n}, {"a", a}},
                [&] { return same(target, str(split_sum_second(n, a))); });
            run({{"identity", "second split sum is claim 2 at x=2a"}, {"n", n}, {"a", a}},
                [&] { return same(str(claim2_sum(n, a, 2L * a)), str(split_sum_second(n, a))); });
        }
    }
    return run.take();
}

Outcome wz_outcome(const WzCheck& c)
{
    std::string actual = c.passed ? "pass" : "fail";
    if (c.counterexample)
        actual += " at (" + std::to_string(c.counterexample->first) + "," + std::to_string(c.counterexample->second) + ")";
    if (!c.orientation.empty())
        actual += "; " + c.orientation;
    if (!c.detail.empty())
        actual += "; " + c.detail;
    return {"pass", actual, c.passed};
}

// A negative control passes when the corrupted check fails.
Outcome negative_outcome(const WzCheck& c)
{
    Outcome o = wz_outcome(c);
    return {"fail", o.actual, !c.passed};
}

VerifyReport suite_wz1(const SuiteBounds& b)
{
    const long n_max = b.n_max.value_or(200);
    SuiteRunner run("wz1");
    run({{"n_max", n_max}}, [&] { return wz_outcome(check_wz1(n_max)); });
    run({{"n_max", n_max}, {"control", "H with flipped sign"}}, [&] {
        return negative_outcome(check_wz_pair(F1, [](long n, long k) { return -H1(n, k); }, n_max));
    });
    const long link_max = std::min<long>(n_max, 50);
    run({{"n_max", link_max}, {"check", "(-1)^i H(n,i+1) is the Geode layer coefficient"}},
        [&] { return wz_outcome(check_quotient_link(link_max)); });
    return run.take();
}

VerifyReport suite_wz2(const SuiteBounds& b)
{
    const long n_max = b.n_max.value_or(100);
    SuiteRunner run("wz2");
    for (long a : a_values_or(b, {2, 3, 4, 5}))
        run({{"a", a}, {"n_max", n_max}}, [&] { return wz_outcome(check_wz2(a, n_max)); });
    return run.take();
}

VerifyReport suite_certificate(const SuiteBounds& b)
{
    const long n_max = b.n_max.value_or(100);
    SuiteRunner run("certificate");
    run({{"n_max", n_max}}, [&] { return wz_outcome(check_certificate_R(n_max)); });
    run({{"n", 2}, {"m", 1}}, [] { return same("7/3", to_decimal(certificate_R(2, 1))); });
    run({{"n_max", n_max}, {"control", "R with 15n replaced by 16n"}}, [&] {
        auto corrupted = [](long n, long m) {
            return Rational(Integer(m) * (8 * m * n + 10 * n * n + 6 * m + 16 * n + 6), Integer(2 * (2 * n + 3)) * (n + 1));
        };
        return negative_outcome(check_certificate_R(n_max, corrupted));
    });
    return run.take();
}

VerifyReport suite_recurrence(const SuiteBounds& b)
{
    const unsigned D = b.max_degree.value_or(8);
    const unsigned R = b.max_vars.value_or(4);
    SuiteRunner run("recurrence");
    for (unsigned r = 1; r <= R; ++r) {
        const GeodeTable table = geode_series(r, D == 0 ? 0 : D - 1);
        for (unsigned d = 1; d <= D; ++d)
            for_each_monomial(r, d, [&](const ExpVec& m) {
                run({{"r", r}, {"exps", exps_json(m)}}, [&] {
                    Integer lhs = 0;
                    for (std::size_t k = 0; k < r; ++k)
                        if (auto down = m.minus_unit(k))
                            lhs += table.at(*down);
                    const bool ok = geode_recurrence_check(table, m);
                    return Outcome{str(hyper_catalan(m)), str(lhs), ok && lhs == hyper_catalan(m)};
                });
            });
    }
    return run.take();
}

VerifyReport suite_two_nonzero(const SuiteBounds& b)
{
    const unsigned n_top = std::max(b.max_n.value_or(7), 1u);
    SuiteRunner run("two-nonzero");
    const std::vector<std::pair<unsigned, unsigned>> pairs = {{1, 2}, {1, 3}, {2, 3}, {2, 5}};
    for (const auto& [s, t] : pairs) {
        const GeodeTable oracle = geode_series(t, n_top - 1);
        for (unsigned n = 1; n <= n_top; ++n)
            for (unsigned i = 0; i < n; ++i) {
                ExpVec m(t);
                m.set(s - 1, n - 1 - i);
                m.set(t - 1, i);
                run({{"s", s}, {"t", t}, {"n", n}, {"i", i}, {"exps", exps_json(m)}}, [&, s = s, t = t] {
                    return same(str(oracle.at(m)), str(geode_closed_two_nonzero(s, t, n, i)));
                });
                if (s == 1 && t == 2)
                    run({{"s", 1}, {"t", 2}, {"n", n}, {"i", i}, {"check", "matches two-variable closed form"}},
                        [&] { return same(str(geode_closed_2var(n - 1 - i, i)), str(geode_closed_two_nonzero(1, 2, n, i))); });
            }
    }
    return run.take();
}

VerifyReport suite_general_eval(const SuiteBounds&)
{
    SuiteRunner run("general-eval");
    auto powers = [](long base, unsigned N) {
        UnivariateSeries u;
        for (unsigned n = 0; n <= N; ++n)
            u.coeffs.push_back(power(Integer(base), n));
        return u;
    };
    struct Case {
        std::vector<long> c;
        unsigned N;
    };
    for (const Case& cs : std::vector<Case>{{{2, 3}, 6}, {{3}, 8}}) {
        const long a = static_cast<long>(cs.c.size());
        long base = 2 * a * cs.c.back();
        for (long v : cs.c)
            base -= v;
        run({{"a", a}, {"c", cs.c}, {"N", cs.N}, {"weights", general_weights(cs.c)}},
            [&] { return same(str(powers(base, cs.N)), str(eval_general(cs.c, cs.N))); });
    }
    const std::vector<long> ones = {1, 1};
    run({{"a", 2}, {"c", ones}, {"N", 8}, {"check", "equals the alternating evaluation"}},
        [&] { return same(str(eval_alternating(2, 8)), str(eval_general(ones, 8))); });
    return run.take();
}

VerifyReport suite_oracle(const SuiteBounds& b)
{
    const unsigned N = b.max_degree.value_or(10);
    const unsigned R = b.max_vars.value_or(4);
    SuiteRunner run("oracle");
    for (unsigned r = 1; r <= R; ++r) {
        const TruncatedSeries S = solve_S(r, N);
        run({{"r", r}, {"N", N}, {"check", "functional equation residual"}}, [&] {
            const TruncatedSeries res = functional_equation_residual(S);
            return Outcome{"0 terms", std::to_string(res.terms().size()) + " terms", res.is_zero()};
        });
        if (N >= 1)
            run({{"r", r}, {"N", N}, {"check", "S_1 G = S - 1"}}, [&] {
                const GeodeTable g = geode_series(r, N - 1);
                const TruncatedSeries lhs = mul_by_S1(g.series);
                const TruncatedSeries rhs = subtract(S, TruncatedSeries::constant(r, N, 1));
                return Outcome{"equal", lhs == rhs ? "equal" : "different", lhs == rhs};
            });
        run({{"r", r}, {"N", N}, {"check", "series coefficients equal the hyper-Catalan closed form"}}, [&] {
            std::string first_bad;
            for (unsigned d = 0; d <= N && first_bad.empty(); ++d)
                for_each_monomial(r, d, [&](const ExpVec& m) {
                    if (first_bad.empty() && S.coeff(m) != hyper_catalan(m))
                        first_bad = str(m);
                });
            return Outcome{"all equal", first_bad.empty() ? "all equal" : "differs at " + first_bad, first_bad.empty()};
        });
    }
    return run.take();
}

using SuiteFn = VerifyReport (*)(const SuiteBounds&);

const std::map<std::string, SuiteFn>& suite_table()
{
    static const std::map<std::string, SuiteFn> table = {
        {"thm1", suite_thm1},
        {"thm2", suite_thm2},
        {"thm3", suite_thm3},
        {"eq31", suite_eq31},
        {"claims", suite_claims},
        {"wz1", suite_wz1},
        {"wz2", suite_wz2},
        {"certificate", suite_certificate},
        {"recurrence", suite_recurrence},
        {"two-nonzero", suite_two_nonzero},
        {"general-eval", suite_general_eval},
        {"oracle", suite_oracle},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"thm1", "thm2", "thm3", "eq31", "claims", "wz1", "wz2",
                                                   "certificate", "recurrence", "two-nonzero", "general-eval",
                                                   "oracle", "all"};
    return names;
}

VerifyReport run_suite(const std::string& name, const SuiteBounds& bounds)
{
    if (name == "all") {
        VerifyReport all;
        all.suite = "all";
        for (const auto& n : suite_names())
            if (n != "all")
                all.merge(suite_table().at(n)(bounds));
        std::stable_sort(all.cases.begin(), all.cases.end(),
                         [](const CaseResult& x, const CaseResult& y) { return x.id < y.id; });
        return all;
    }
    auto it = suite_table().find(name);
    if (it == suite_table().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second(bounds);
}

} // namespace geode
