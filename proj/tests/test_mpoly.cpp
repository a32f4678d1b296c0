#include <doctest.h>

#include "geode/errors.hpp"
#include "geode/mpoly.hpp"
#include "geode/series_io.hpp"

#include <random>
#include <sstream>

using namespace geode;

namespace {

TruncatedSeries poly(std::size_t r, unsigned N, std::initializer_list<std::pair<ExpVec, long>> terms)
{
    TruncatedSeries::Terms t;
    for (const auto& [m, c] : terms)
        t[m] += c;
    return TruncatedSeries::from_terms(r, N, std::move(t));
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t r, unsigned N, int density_percent = 60)
{
    std::uniform_int_distribution<int> coin(0, 99);
    std::uniform_int_distribution<long> value(-20, 20);
    TruncatedSeries::Terms t;
    for (unsigned d = 0; d <= N; ++d)
        for_each_monomial(r, d, [&](const ExpVec& m) {
            if (coin(rng) < density_percent)
                t[m] = value(rng);
        });
    return TruncatedSeries::from_terms(r, N, std::move(t));
}

bool canonical(const TruncatedSeries& s)
{
    for (const auto& [m, c] : s.terms())
        if (c == 0 || m.total_degree() > s.trunc() || m.size() != s.nvars())
            return false;
    return true;
}

} // namespace

TEST_CASE("ExpVec ordering is graded lexicographic")
{
    CHECK(ExpVec{0, 2} > ExpVec{1, 0});
    CHECK(ExpVec{1, 1} < ExpVec{2, 0});
    CHECK(ExpVec{3, 0, 1}.total_degree() == 4);
    CHECK_FALSE(ExpVec{0, 0}.minus_unit(1).has_value());
    CHECK(*ExpVec{0, 2}.minus_unit(1) == ExpVec{0, 1});
}

TEST_CASE("monomials of a layer come in decreasing lexicographic order")
{
    std::vector<ExpVec> seen;
    for_each_monomial(3, 2, [&](const ExpVec& m) { seen.push_back(m); });
    const std::vector<ExpVec> expected = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    CHECK(seen == expected);
    CHECK(monomial_count(6, 9) == 2002);
}

TEST_CASE("add")
{
    auto t1 = TruncatedSeries::variable(2, 3, 0);
    CHECK((t1 + (-t1)).is_zero());

    auto a = poly(2, 3, {{{0, 0}, 1}, {{1, 0}, 1}});
    auto b = poly(2, 3, {{{0, 1}, 1}});
    CHECK(a + b == poly(2, 3, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));

    auto s1 = TruncatedSeries::variable(2, 3, 0) + TruncatedSeries::variable(2, 3, 1);
    CHECK(s1.terms() == TruncatedSeries::linear_sum(2, 3).terms());
    CHECK(s1.coeff({1, 0}) == 1);
    CHECK(s1.coeff({0, 1}) == 1);

    CHECK_THROWS_AS(add(t1, TruncatedSeries::variable(3, 3, 0)), VariableMismatch);
    CHECK((a + poly(2, 1, {})).trunc() == 1);
}

TEST_CASE("mul")
{
    const auto s1 = TruncatedSeries::linear_sum(2, 3);
    const auto layer = poly(2, 3, {{{2, 0}, 5}, {{1, 1}, 16}, {{0, 2}, 12}});
    const auto expected = poly(2, 3, {{{3, 0}, 5}, {{2, 1}, 21}, {{1, 2}, 28}, {{0, 3}, 12}});
    CHECK(s1 * layer == expected);

    const auto one_plus = poly(1, 2, {{{0}, 1}, {{1}, 1}});
    const auto one_minus = poly(1, 2, {{{0}, 1}, {{1}, -1}});
    CHECK(one_plus * one_minus == poly(1, 2, {{{0}, 1}, {{2}, -1}}));

    // a degree-N term times a degree-1 term falls off the end
    const auto top = poly(2, 3, {{{3, 0}, 7}});
    CHECK((top * TruncatedSeries::variable(2, 3, 1)).is_zero());

    CHECK_THROWS_AS(mul(top, TruncatedSeries::variable(1, 3, 0)), VariableMismatch);
}

TEST_CASE("divide_exact_by_S1")
{
    const auto cubic = poly(2, 3, {{{3, 0}, 5}, {{2, 1}, 21}, {{1, 2}, 28}, {{0, 3}, 12}});
    const auto q = divide_exact_by_S1(cubic);
    CHECK(q.trunc() == 2);
    CHECK(q == poly(2, 2, {{{2, 0}, 5}, {{1, 1}, 16}, {{0, 2}, 12}}));

    const auto diff_sq = poly(2, 2, {{{2, 0}, 1}, {{0, 2}, -1}});
    CHECK(divide_exact_by_S1(diff_sq) == poly(2, 1, {{{1, 0}, 1}, {{0, 1}, -1}}));

    CHECK_THROWS_AS(divide_exact_by_S1(TruncatedSeries::variable(2, 2, 0)), NotDivisible);
    CHECK_THROWS_AS(divide_exact_by_S1(poly(2, 2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}})), NonzeroConstant);
    CHECK_THROWS_AS(divide_exact_by_S1(TruncatedSeries(2, 0)), std::invalid_argument);

    // one variable: plain shift
    CHECK(divide_exact_by_S1(poly(1, 3, {{{1}, 2}, {{3}, -4}})) == poly(1, 2, {{{0}, 2}, {{2}, -4}}));
}

TEST_CASE("substitute_signed")
{
    const auto g2 = poly(2, 3, {{{2, 0}, 5}, {{1, 1}, 16}, {{0, 2}, 12}, {{3, 0}, 14}, {{2, 1}, 70}, {{1, 2}, 110}, {{0, 3}, 55}});
    const std::vector<long> w = {-1, 1};
    const auto u = substitute_signed(g2, w);
    REQUIRE(u.coeffs.size() == 4);
    CHECK(u.coeffs[2] == 1);
    CHECK(u.coeffs[3] == 1);

    const std::vector<long> zeros = {0, 0};
    const auto c = substitute_signed(poly(2, 2, {{{0, 0}, 9}, {{1, 0}, 3}, {{1, 1}, 4}}), zeros);
    CHECK(c == UnivariateSeries{{9, 0, 0}});

    const std::vector<long> short_weights = {1};
    CHECK_THROWS_AS(substitute_signed(g2, short_weights), VariableMismatch);
}

TEST_CASE("coeff distinguishes zero from out of range")
{
    const auto s = poly(2, 2, {{{1, 1}, 16}});
    CHECK(s.coeff({1, 1}) == 16);
    CHECK(s.coeff({2, 0}) == 0);
    CHECK_THROWS_AS(s.coeff({2, 1}), OutOfRange);
    CHECK_THROWS_AS(s.coeff({1, 0, 0}), VariableMismatch);
}

TEST_CASE("property: ring laws up to truncation")
{
    std::mt19937 rng(20250501);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 4;
        const unsigned N = 2 + trial % 4;
        const auto a = random_series(rng, r, N);
        const auto b = random_series(rng, r, N);
        const auto c = random_series(rng, r, N);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(canonical(a * b));
        CHECK(canonical(a + b));
        CHECK(canonical(a - a));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("property: division round trip")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 5;
        const unsigned N = 1 + trial % 5;
        const auto q = random_series(rng, r, N - 1);
        const auto a = mul_by_S1(q);
        CHECK(a.coeff(ExpVec(r)) == 0);
        const auto back = divide_exact_by_S1(a);
        CHECK(back == q);
        CHECK(mul_by_S1(back) == a);
        CHECK(mul(TruncatedSeries::linear_sum(r, N), back) == a.truncated(N - 1));
        CHECK(canonical(back));
    }
}

TEST_CASE("property: substitution is linear")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> wd(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 1 + trial % 4;
        const auto a = random_series(rng, r, 4);
        const auto b = random_series(rng, r, 4);
        std::vector<long> w(r);
        for (auto& x : w)
            x = wd(rng);
        const auto sa = substitute_signed(a, w);
        const auto sb = substitute_signed(b, w);
        const auto sab = substitute_signed(a + b, w);
        for (std::size_t n = 0; n < sab.coeffs.size(); ++n)
            CHECK(sab.coeffs[n] == sa.coeffs[n] + sb.coeffs[n]);
    }
}

TEST_CASE("JSON and CSV serialization")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_series(rng, 1 + trial % 3, 3);
        CHECK(series_from_json(to_json(s)) == s);
    }

    TruncatedSeries::Terms big;
    big[ExpVec{0, 1}] = parse_integer("-123456789012345678901234567890");
    big[ExpVec{1, 0}] = 2;
    const auto s = TruncatedSeries::from_terms(2, 1, big);
    const auto j = to_json(s);
    CHECK(j["nvars"] == 2);
    CHECK(j["trunc"] == 1);
    CHECK(j["terms"][0]["exps"] == nlohmann::json::array({0, 1}));
    CHECK(j["terms"][0]["coeff"] == "-123456789012345678901234567890");
    CHECK(j["terms"][1]["coeff"] == "2");

    std::ostringstream csv;
    write_csv(csv, s);
    CHECK(csv.str() == "m_1,m_2,coeff\n0,1,-123456789012345678901234567890\n1,0,2\n");

    CHECK_THROWS_AS(series_from_json(nlohmann::json{{"nvars", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"nvars":1,"trunc":1,"terms":[{"exps":[2],"coeff":"1"}]})")),
                    std::invalid_argument);
}
