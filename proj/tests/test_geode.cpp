#include <doctest.h>

#include "geode/errors.hpp"
#include "geode/geode.hpp"
#include "geode/hypercat.hpp"

using namespace geode;

TEST_CASE("geode_series layers")
{
    const auto g = geode_series(2, 3);
    CHECK(g.trunc == 3);
    CHECK(g.at({0, 0}) == 1);
    CHECK(g.at({1, 0}) == 2);
    CHECK(g.at({0, 1}) == 3);
    CHECK(g.at({2, 0}) == 5);
    CHECK(g.at({1, 1}) == 16);
    CHECK(g.at({0, 2}) == 12);
    CHECK(g.at({3, 0}) == 14);
    CHECK(g.at({2, 1}) == 70);
    CHECK(g.at({1, 2}) == 110);
    CHECK(g.at({0, 3}) == 55);
    CHECK_THROWS_AS(g.at({4, 0}), OutOfRange);

    for (std::size_t r = 1; r <= 4; ++r)
        CHECK(geode_series(r, 2).at(ExpVec(r)) == 1);
}

TEST_CASE("factorization S - 1 = S_1 G")
{
    for (std::size_t r = 1; r <= 4; ++r)
        for (unsigned N : {0u, 3u, 7u}) {
            const auto g = geode_series(r, N);
            const auto rhs = subtract(solve_S(r, N + 1), TruncatedSeries::constant(r, N + 1, 1));
            CHECK(mul_by_S1(g.series) == rhs);
        }
}

TEST_CASE("geode_closed_2var")
{
    CHECK(geode_closed_2var(1, 1) == 16);
    CHECK(geode_closed_2var(0, 0) == 1);
    CHECK(geode_closed_2var(0, 2) == 12);
    CHECK(geode_closed_2var(3, 0) == 14);

    const auto g = geode_series(2, 14);
    for (unsigned d = 0; d <= 14; ++d)
        for (unsigned q = 0; q <= d; ++q) {
            const auto v = geode_closed_2var(d - q, q);
            CHECK(v == g.at({d - q, q}));
            CHECK(v > 0);
        }
}

TEST_CASE("geode_closed_shifted")
{
    CHECK(geode_closed_shifted(2, 1, 1) == 16);
    CHECK(geode_closed_shifted(3, 1, 0) == 3);
    CHECK(geode_closed_shifted(2, 0, 0) == 1);
    CHECK(shifted_index(4, 2, 3) == ExpVec{0, 0, 2, 3});
    CHECK_THROWS_AS(geode_closed_shifted(1, 0, 0), std::invalid_argument);

    for (unsigned p = 0; p <= 8; ++p)
        for (unsigned q = 0; q <= 8; ++q)
            CHECK(geode_closed_shifted(2, p, q) == geode_closed_2var(p, q));

    for (unsigned long a = 3; a <= 5; ++a) {
        const auto g = geode_series(a, 6);
        for (unsigned d = 0; d <= 6; ++d)
            for (unsigned q = 0; q <= d; ++q)
                CHECK(geode_closed_shifted(a, d - q, q) == g.at(shifted_index(a, d - q, q)));
    }
}

TEST_CASE("geode_closed_two_nonzero")
{
    CHECK(geode_closed_two_nonzero(1, 2, 3, 1) == 16);
    CHECK(geode_closed_two_nonzero(1, 2, 2, 0) == 2);
    const auto g3 = geode_series(3, 2);
    CHECK(geode_closed_two_nonzero(2, 3, 2, 1) == g3.at({0, 0, 1}));
    CHECK(geode_closed_two_nonzero(2, 3, 2, 0) == g3.at({0, 1, 0}));

    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned i = 0; i < n; ++i)
            CHECK(geode_closed_two_nonzero(1, 2, n, i) == geode_closed_2var(n - 1 - i, i));

    CHECK_THROWS_AS(geode_closed_two_nonzero(2, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(geode_closed_two_nonzero(1, 2, 3, 3), std::invalid_argument);
}

TEST_CASE("single-variable Geode columns")
{
    // G[0,..,0,m_k] with k-1 leading zeros, via i = 0 of the two-nonzero formula
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto g = geode_series(k, 6);
        for (unsigned m = 0; m <= 6; ++m) {
            ExpVec e(k);
            e.set(k - 1, m);
            CHECK(geode_closed_two_nonzero(k, k + 1, m + 1, 0) == g.at(e));
        }
    }
}

TEST_CASE("eval_alternating")
{
    CHECK(eval_alternating(1, 4) == UnivariateSeries{{1, 1, 1, 1, 1}});
    CHECK(eval_alternating(2, 3) == UnivariateSeries{{1, 2, 4, 8}});
    CHECK(eval_alternating(3, 2).coeffs[2] == 9);
}

TEST_CASE("eval_general")
{
    const std::vector<long> c3 = {3};
    CHECK(general_weights(c3) == std::vector<long>{-3, 3});
    CHECK(eval_general(c3, 5) == UnivariateSeries{{1, 3, 9, 27, 81, 243}});

    const std::vector<long> ones = {1, 1};
    CHECK(general_weights(ones) == std::vector<long>{-1, 1, -1, 1});
    CHECK(eval_general(ones, 4) == eval_alternating(2, 4));

    const std::vector<long> c23 = {2, 3};
    CHECK(general_weights(c23) == std::vector<long>{-3, 2, -2, 3});
    CHECK(eval_general(2, c23, 4) == UnivariateSeries{{1, 7, 49, 343, 2401}});

    const std::vector<long> c3terms = {1, 2, 3};
    CHECK(general_weights(c3terms) == std::vector<long>{-3, 1, -1, 2, -2, 3});
    CHECK_THROWS_AS(eval_general(3, c23, 2), std::invalid_argument);
}

TEST_CASE("geode_recurrence_check")
{
    const auto g2 = geode_series(2, 3);
    CHECK(geode_recurrence_check(g2, {1, 1}));
    CHECK(geode_recurrence_check(g2, {2, 1}));
    CHECK(g2.at({0, 1}) + g2.at({1, 0}) == hyper_catalan({1, 1}));
    CHECK(geode_recurrence_check(geode_series(3, 0), {1, 0, 0}));
    CHECK_THROWS_AS(geode_recurrence_check(g2, {3, 2}), OutOfRange);
    CHECK_THROWS_AS(geode_recurrence_check(g2, {0, 0}), std::invalid_argument);

    // a corrupted table is caught
    auto terms = g2.series.terms();
    terms[ExpVec{1, 1}] += 1;
    const GeodeTable bad{2, 3, TruncatedSeries::from_terms(2, 3, terms)};
    CHECK_FALSE(geode_recurrence_check(bad, {2, 1}));
}

TEST_CASE("GeodeTable JSON header")
{
    const auto j = to_json(geode_series(2, 1));
    CHECK(j["kind"] == "geode");
    CHECK(j["r"] == 2);
    CHECK(j["trunc"] == 1);
    CHECK(j["nvars"] == 2);
    CHECK(j["terms"].size() == 3);
}
