#include "geode/identities.hpp"

#include <numeric>
#include <stdexcept>

namespace geode {

unsigned long MultVector::partition_size() const
{
    unsigned long s = 0;
    for (std::size_t k = 0; k < mult.size(); ++k)
        s += (k + 1) * static_cast<unsigned long>(mult[k]);
    return s;
}

unsigned long MultVector::length() const
{
    return std::accumulate(mult.begin(), mult.end(), 0UL);
}

MultVectorRange::MultVectorRange(unsigned length, unsigned max_part) : length_(length), max_part_(max_part)
{
    if (max_part == 0)
        throw std::invalid_argument("max_part must be positive");
}

MultVectorRange::iterator MultVectorRange::begin() const
{
    iterator it;
    it.current_.mult.assign(max_part_, 0);
    it.current_.mult[0] = length_;
    it.done_ = false;
    return it;
}

MultVectorRange::iterator& MultVectorRange::iterator::operator++()
{
    auto& v = current_.mult;
    const std::size_t n = v.size();
    // rightmost nonzero slot that can still move one unit to the right
    std::size_t p = n;
    for (std::size_t k = n - 1; k-- > 0;)
        if (v[k] > 0) {
            p = k;
            break;
        }
    if (p == n) {
        done_ = true;
        return *this;
    }
    unsigned tail = 1;
    for (std::size_t k = p + 1; k < n; ++k) {
        tail += v[k];
        v[k] = 0;
    }
    --v[p];
    v[p + 1] = tail;
    return *this;
}

std::vector<MultVector> enumerate_mult_vectors(unsigned length, unsigned max_part)
{
    std::vector<MultVector> out;
    for (const auto& v : MultVectorRange(length, max_part))
        out.push_back(v);
    return out;
}

// LaurentPoly

void LaurentPoly::add_term(long exponent, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::monomial(long exponent, const Integer& c)
{
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::one_plus_z_power(unsigned long e)
{
    LaurentPoly p;
    for (unsigned long k = 0; k <= e; ++k)
        p.add_term(static_cast<long>(k), binomial(static_cast<long>(e), static_cast<long>(k)));
    return p;
}

Integer LaurentPoly::coeff(long exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const Integer& c)
{
    LaurentPoly r;
    for (const auto& [e, v] : a.terms_)
        r.add_term(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const
{
    LaurentPoly result = monomial(0);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(long k) const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

// Partition sums

namespace {

inline int sign_of(unsigned long exponent)
{
    return exponent % 2 == 0 ? 1 : -1;
}

void require_positive(unsigned n, unsigned a)
{
    if (n < 1 || a < 1)
        throw std::invalid_argument("partition sums need positive n and a");
}

} // namespace

Rational partition_sum_main_exact(unsigned n, unsigned a)
{
    require_positive(n, a);
    Rational sum = 0;
    for (const auto& v : MultVectorRange(n, 2 * a)) {
        const long size = static_cast<long>(v.partition_size());
        const long nn = n;
        Integer num = multinomial(v.mult) * (nn - static_cast<long>(v.mult.back())) * binomial(size + nn + 1, size + 1);
        Rational term(num, Integer(size + nn + 1));
        term.canonicalize();
        if (sign_of(1 + size) < 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Integer partition_sum_main(unsigned n, unsigned a)
{
    return to_integer(partition_sum_main_exact(n, a), "partition_sum_main");
}

Integer claim1_sum(unsigned n, unsigned a, long x)
{
    require_positive(n, a);
    Integer sum = 0;
    for (const auto& v : MultVectorRange(n, 2 * a)) {
        const long size = static_cast<long>(v.partition_size());
        Integer term = multinomial(v.mult) * binomial(size + n + x, n - 1);
        sum += sign_of(size) * term;
    }
    return sum;
}

Integer claim2_sum(unsigned n, unsigned a, long x)
{
    require_positive(n, a);
    Integer sum = 0;
    for (const auto& v : MultVectorRange(n - 1, 2 * a)) {
        const long size = static_cast<long>(v.partition_size());
        Integer term = multinomial(v.mult) * binomial(size + n + x, n - 1);
        sum += sign_of(size) * term;
    }
    return sum;
}

Integer claim2_ct(unsigned n, unsigned a, long x)
{
    require_positive(n, a);
    if (x < 0)
        throw std::invalid_argument("claim2_ct needs x >= 0");
    LaurentPoly inner;
    for (unsigned k = 1; k <= 2 * a; ++k)
        inner = inner + LaurentPoly::one_plus_z_power(k) * Integer(sign_of(k));
    LaurentPoly expr = LaurentPoly::one_plus_z_power(n + static_cast<unsigned long>(x)) * inner.pow(n - 1);
    return expr.shifted(-static_cast<long>(n - 1)).constant_term();
}

Integer split_sum_first(unsigned n, unsigned a)
{
    require_positive(n, a);
    Integer sum = 0;
    for (const auto& v : MultVectorRange(n, 2 * a)) {
        const long size = static_cast<long>(v.partition_size());
        sum += sign_of(size) * (multinomial(v.mult) * binomial(size + n, size + 1));
    }
    return -sum;
}

Integer split_sum_second(unsigned n, unsigned a)
{
    require_positive(n, a);
    const long twoa = 2L * a;
    Integer sum = 0;
    for (const auto& v : MultVectorRange(n - 1, 2 * a)) {
        const long size = static_cast<long>(v.partition_size());
        sum += sign_of(size) * (multinomial(v.mult) * binomial(size + twoa + n, size + twoa + 1));
    }
    return sum;
}

Integer claim_chain_sum(unsigned n, unsigned a, long x)
{
    Integer sum = 0;
    for (long i = 1; i <= 2L * a; ++i)
        sum += sign_of(static_cast<unsigned long>(i)) * claim2_sum(n, a, x + i);
    return sum;
}

} // namespace geode
