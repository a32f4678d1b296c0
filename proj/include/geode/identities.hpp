#pragma once

#include "geode/integer.hpp"

#include <cstddef>
#include <iterator>
#include <map>
#include <vector>

namespace geode {

/// A partition 1^{m_1} 2^{m_2} ... p^{m_p} stored by part multiplicities.
struct MultVector {
    std::vector<unsigned> mult;

    /// |lambda| = sum_k k m_k
    unsigned long partition_size() const;
    /// l(lambda) = sum_k m_k
    unsigned long length() const;

    friend bool operator==(const MultVector&, const MultVector&) = default;
};

/// All multiplicity vectors with a given length and parts bounded by max_part,
/// in decreasing lexicographic order of the multiplicities:
/// (length, 0, ..., 0) first, (0, ..., 0, length) last.
///
///     for (const MultVector& v : MultVectorRange(3, 4)) ...
class MultVectorRange {
public:
    MultVectorRange(unsigned length, unsigned max_part);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = MultVector;
        using difference_type = std::ptrdiff_t;
        using pointer = const MultVector*;
        using reference = const MultVector&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        friend class MultVectorRange;
        MultVector current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return iterator(); }

private:
    unsigned length_;
    unsigned max_part_;
};

/// Materialized MultVectorRange.
std::vector<MultVector> enumerate_mult_vectors(unsigned length, unsigned max_part);

/// Laurent polynomial in z with integer coefficients; no stored zeros.
class LaurentPoly {
public:
    using Terms = std::map<long, Integer>;

    LaurentPoly() = default;
    static LaurentPoly monomial(long exponent, const Integer& c = 1);
    /// (1 + z)^e for e >= 0
    static LaurentPoly one_plus_z_power(unsigned long e);

    const Terms& terms() const { return terms_; }
    Integer coeff(long exponent) const;
    Integer constant_term() const { return coeff(0); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const Integer& c);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly pow(unsigned long e) const;
    /// multiplies by z^k
    LaurentPoly shifted(long k) const;

private:
    void add_term(long exponent, const Integer& c);
    Terms terms_;
};

/// sum over l(lambda) = n, parts <= 2a of
///   (-1)^{1+|lambda|} (n - m_{2a}) multinomial(n; m) binom(|lambda|+n+1, |lambda|+1) / (|lambda|+n+1).
/// Exact rational; the identity says it equals a^{n-1}.
Rational partition_sum_main_exact(unsigned n, unsigned a);
/// partition_sum_main_exact, asserting an integral result (NotIntegral otherwise).
Integer partition_sum_main(unsigned n, unsigned a);

/// sum over l(lambda) = n, parts <= 2a of (-1)^{|lambda|} multinomial(n; m) binom(|lambda|+n+x, n-1).
/// binom is the falling-factorial polynomial, so negative x is fine. Expected: 0.
Integer claim1_sum(unsigned n, unsigned a, long x);

/// sum over l(lambda) = n-1, parts <= 2a of (-1)^{|lambda|} multinomial(n-1; m) binom(|lambda|+n+x, n-1).
/// Expected: a^{n-1}.
Integer claim2_sum(unsigned n, unsigned a, long x);

/// Constant term in z of (1+z)^{n+x} (sum_{k=1}^{2a} (-1)^k (1+z)^k)^{n-1} / z^{n-1}.
/// Requires x >= 0. Agrees with claim2_sum.
Integer claim2_ct(unsigned n, unsigned a, long x);

/// The split form with n - m_{2a} replaced by n:
///   -sum over l(lambda) = n, parts <= 2a of (-1)^{|lambda|} multinomial(n; m) binom(|lambda|+n, |lambda|+1).
/// Expected: 0.
Integer split_sum_first(unsigned n, unsigned a);

/// The split form carrying the m_{2a} weight, reindexed to l(mu) = n-1:
///   sum over l(mu) = n-1, parts <= 2a of (-1)^{|mu|} multinomial(n-1; m) binom(|mu|+2a+n, |mu|+2a+1).
/// Expected: a^{n-1}.
Integer split_sum_second(unsigned n, unsigned a);

/// sum_{i=1}^{2a} (-1)^i claim2_sum(n, a, x+i); equals claim1_sum(n, a, x) by the
/// multinomial recurrence.
Integer claim_chain_sum(unsigned n, unsigned a, long x);

} // namespace geode
