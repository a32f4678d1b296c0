#include <doctest.h>

#include "geode/identities.hpp"

#include <functional>
#include <map>

using namespace geode;

namespace {

// Test-only oracle: walks partitions as non-increasing part lists (not
// multiplicity vectors) and sums a caller-provided summand of (|lambda|, mult).
Rational brute_partition_sum(unsigned length, unsigned max_part,
                             const std::function<Rational(long size, const std::vector<unsigned>& mult)>& summand)
{
    Rational total = 0;
    std::vector<unsigned> parts;
    std::function<void(unsigned)> rec = [&](unsigned largest) {
        if (parts.size() == length) {
            std::vector<unsigned> mult(max_part, 0);
            long size = 0;
            for (unsigned p : parts) {
                ++mult[p - 1];
                size += p;
            }
            total += summand(size, mult);
            return;
        }
        for (unsigned p = largest; p >= 1; --p) {
            parts.push_back(p);
            rec(p);
            parts.pop_back();
        }
    };
    rec(max_part);
    return total;
}

Integer falling_binomial(long y, long k)
{
    Integer num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= y - i;
        den *= i + 1;
    }
    return num / den;
}

Integer multinomial_slow(const std::vector<unsigned>& mult)
{
    // product of binomials, built by repeated multiplication
    Integer r = 1;
    long placed = 0;
    for (unsigned m : mult)
        for (unsigned j = 1; j <= m; ++j) {
            ++placed;
            r = r * placed / j;
        }
    return r;
}

} // namespace

TEST_CASE("enumerate_mult_vectors")
{
    auto one = enumerate_mult_vectors(1, 2);
    REQUIRE(one.size() == 2);
    CHECK(one[0].mult == std::vector<unsigned>{1, 0});
    CHECK(one[1].mult == std::vector<unsigned>{0, 1});

    auto two = enumerate_mult_vectors(2, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].mult == std::vector<unsigned>{2, 0});
    CHECK(two[1].mult == std::vector<unsigned>{1, 1});
    CHECK(two[2].mult == std::vector<unsigned>{0, 2});

    CHECK(enumerate_mult_vectors(3, 4).size() == 20);
    CHECK(enumerate_mult_vectors(7, 6).size() == 792);
    CHECK(enumerate_mult_vectors(0, 3).size() == 1);
    CHECK(enumerate_mult_vectors(5, 1).size() == 1);
    CHECK_THROWS_AS(MultVectorRange(2, 0), std::invalid_argument);

    MultVector v{{2, 0, 1}};
    CHECK(v.partition_size() == 5);
    CHECK(v.length() == 3);
}

TEST_CASE("property: enumeration is complete, distinct and ordered")
{
    for (unsigned len = 0; len <= 6; ++len)
        for (unsigned p = 1; p <= 5; ++p) {
            const auto all = enumerate_mult_vectors(len, p);
            CHECK(Integer(static_cast<unsigned long>(all.size())) == binomial(len + p - 1, p - 1));
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(all[i].length() == len);
                CHECK(all[i].mult.size() == p);
                if (i > 0)
                    CHECK(all[i - 1].mult > all[i].mult);
            }
        }
}

TEST_CASE("LaurentPoly")
{
    const auto p = LaurentPoly::one_plus_z_power(3);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(2) == 3);
    CHECK(p.shifted(-2).constant_term() == 3);
    CHECK(p.shifted(-5).coeff(-3) == 3);
    CHECK(p.pow(2) == LaurentPoly::one_plus_z_power(6));
    CHECK((p + p * Integer(-1)).terms().empty());
    CHECK(LaurentPoly::monomial(-1, 2) * LaurentPoly::monomial(1, 3) == LaurentPoly::monomial(0, 6));
}

TEST_CASE("partition_sum_main")
{
    CHECK(partition_sum_main(1, 1) == 1);
    CHECK(partition_sum_main(3, 2) == 4);
    CHECK(partition_sum_main(4, 3) == 27);

    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned n = 1; n <= 5; ++n) {
            const long nn = n;
            const Rational oracle = brute_partition_sum(n, 2 * a, [&](long size, const std::vector<unsigned>& m) {
                Rational t(multinomial_slow(m) * (nn - m.back()) * falling_binomial(size + nn + 1, size + 1),
                           Integer(size + nn + 1));
                t.canonicalize();
                return (size % 2 == 0) ? Rational(-t) : t;
            });
            CHECK(partition_sum_main_exact(n, a) == oracle);
            CHECK(partition_sum_main_exact(n, a).get_den() == 1);
        }
}

TEST_CASE("claim sums against the brute-force oracle")
{
    auto claim_oracle = [](unsigned length, unsigned n, unsigned a, long x) {
        return brute_partition_sum(length, 2 * a, [&](long size, const std::vector<unsigned>& m) {
            Rational t(multinomial_slow(m) * falling_binomial(size + n + x, n - 1));
            return (size % 2 == 0) ? t : Rational(-t);
        });
    };

    CHECK(claim1_sum(2, 1, 5) == 0);
    CHECK(claim1_sum(3, 2, -1) == 0);
    CHECK(claim2_sum(1, 2, 7) == 1);
    CHECK(claim2_sum(3, 2, 0) == 4);
    CHECK(claim2_sum(4, 3, 6) == 27);

    for (unsigned a = 1; a <= 2; ++a)
        for (unsigned n = 1; n <= 5; ++n)
            for (long x = -3; x <= 3; ++x) {
                CHECK(Rational(claim1_sum(n, a, x)) == claim_oracle(n, n, a, x));
                CHECK(Rational(claim2_sum(n, a, x)) == claim_oracle(n - 1, n, a, x));
            }
}

TEST_CASE("claim2 constant-term route")
{
    CHECK(claim2_ct(2, 1, 0) == 1);
    CHECK(claim2_ct(3, 2, 1) == 4);
    CHECK(claim2_ct(1, 3, 4) == 1);
    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned n = 1; n <= 6; ++n)
            for (long x = 0; x <= 4; ++x)
                CHECK(claim2_ct(n, a, x) == claim2_sum(n, a, x));
    CHECK_THROWS_AS(claim2_ct(2, 1, -1), std::invalid_argument);
}

TEST_CASE("split sums and the claim chain")
{
    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned n = 1; n <= 6; ++n) {
            CHECK(split_sum_first(n, a) == 0);
            CHECK(split_sum_first(n, a) == -claim1_sum(n, a, 0));
            CHECK(split_sum_second(n, a) == power(Integer(a), n - 1));
            CHECK(split_sum_second(n, a) == claim2_sum(n, a, 2L * a));
            for (long x = -2; x <= 2; ++x)
                CHECK(claim_chain_sum(n, a, x) == claim1_sum(n, a, x));
        }
}

TEST_CASE("generalized binomial below zero")
{
    CHECK(binomial(-1, 2) == 1);
    CHECK(binomial(-3, 3) == -10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    for (long y = -6; y <= 6; ++y)
        for (long k = 0; k <= 5; ++k)
            CHECK(binomial(y, k) == falling_binomial(y, k));
}
