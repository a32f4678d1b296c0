#pragma once

#include "geode/integer.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace geode {

/// Exponent vector (m_1, ..., m_r) of the monomial t_1^{m_1} ... t_r^{m_r}.
///
/// Ordered by total degree first, then lexicographically; this is the order
/// in which series terms are stored and serialized.
class ExpVec {
public:
    using value_type = std::uint32_t;

    ExpVec() = default;
    explicit ExpVec(std::size_t nvars) : exps_(nvars, 0) {}
    ExpVec(std::initializer_list<value_type> exps) : exps_(exps) { recount(); }
    explicit ExpVec(std::vector<value_type> exps) : exps_(std::move(exps)) { recount(); }

    /// e_k, the k-th unit vector (0-based k).
    static ExpVec unit(std::size_t nvars, std::size_t k);

    std::size_t size() const { return exps_.size(); }
    value_type operator[](std::size_t k) const { return exps_[k]; }
    void set(std::size_t k, value_type v);
    std::span<const value_type> values() const { return exps_; }

    unsigned long total_degree() const { return degree_; }
    bool is_zero() const { return degree_ == 0; }

    ExpVec plus_unit(std::size_t k) const;
    /// this - e_k, or nullopt when the k-th exponent is already 0.
    std::optional<ExpVec> minus_unit(std::size_t k) const;

    friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b);

private:
    void recount();

    std::vector<value_type> exps_;
    unsigned long degree_ = 0;
};

/// Calls fn on every exponent vector of r entries with total degree d,
/// in decreasing lexicographic order: (d,0,..,0) first, (0,..,0,d) last.
void for_each_monomial(std::size_t nvars, unsigned long degree, const std::function<void(const ExpVec&)>& fn);

/// Number of monomials of total degree d in r variables, binom(d + r - 1, r - 1).
Integer monomial_count(std::size_t nvars, unsigned long degree);

/// Sparse multivariate power series with integer coefficients, truncated at a
/// total degree. Values are immutable; every operation returns a new series.
///
/// Invariants: every key has total degree <= trunc() and nvars() entries, and
/// no stored coefficient is zero.
class TruncatedSeries {
public:
    using Terms = std::map<ExpVec, Integer>;

    TruncatedSeries(std::size_t nvars, unsigned trunc);

    /// Canonicalizes: drops zero coefficients and keys beyond the truncation.
    /// Throws VariableMismatch for keys of the wrong length.
    static TruncatedSeries from_terms(std::size_t nvars, unsigned trunc, Terms terms);

    static TruncatedSeries constant(std::size_t nvars, unsigned trunc, const Integer& c);
    /// The variable t_{k+1} (0-based k).
    static TruncatedSeries variable(std::size_t nvars, unsigned trunc, std::size_t k);
    /// S_1 = t_1 + ... + t_r
    static TruncatedSeries linear_sum(std::size_t nvars, unsigned trunc);

    std::size_t nvars() const { return nvars_; }
    unsigned trunc() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Stored coefficient or 0. Throws OutOfRange past the truncation degree
    /// and VariableMismatch on a wrong-length key.
    Integer coeff(const ExpVec& m) const;

    TruncatedSeries truncated(unsigned trunc) const;
    /// All terms of total degree exactly d, as a series with the same truncation.
    TruncatedSeries homogeneous_part(unsigned long d) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::size_t nvars_;
    unsigned trunc_;
    Terms terms_;
};

/// Truncation of the result is min(a.trunc(), b.trunc()).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);

/// a * t_{k+1}, retained to total degree out_trunc (at most a.trunc() + 1).
TruncatedSeries mul_by_variable(const TruncatedSeries& a, std::size_t k, unsigned out_trunc);

/// S_1 * q with truncation q.trunc() + 1. Exact, since S_1 is homogeneous of degree 1.
TruncatedSeries mul_by_S1(const TruncatedSeries& q);

/// Exact quotient q = a / (t_1 + ... + t_r), with q.trunc() = a.trunc() - 1.
///
/// Solved layer by layer: within degree d, the coefficients are visited in
/// decreasing order of the first exponent and
///   q[m] = a[m + e_1] - sum_{k >= 2, m_k >= 1} q[m + e_1 - e_k].
/// The result is checked by re-multiplication.
///
/// Throws NonzeroConstant when a(0) != 0, NotDivisible when some layer is not
/// a multiple of S_1, std::invalid_argument when a.trunc() == 0.
TruncatedSeries divide_exact_by_S1(const TruncatedSeries& a);

/// Coefficient list in one variable f; index n holds the coefficient of f^n.
struct UnivariateSeries {
    std::vector<Integer> coeffs;

    unsigned trunc() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    friend bool operator==(const UnivariateSeries&, const UnivariateSeries&) = default;
};

/// Substitutes t_k -> w_k f. Coefficient of f^n is the sum over degree-n
/// exponent vectors m of a[m] * prod w_k^{m_k}.
UnivariateSeries substitute_signed(const TruncatedSeries& a, std::span<const long> weights);

inline Integer coeff(const TruncatedSeries& a, const ExpVec& m) { return a.coeff(m); }

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return subtract(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }

} // namespace geode
