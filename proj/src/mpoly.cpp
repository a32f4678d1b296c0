#include "geode/mpoly.hpp"

#include "geode/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace geode {

// ExpVec

ExpVec ExpVec::unit(std::size_t nvars, std::size_t k)
{
    ExpVec e(nvars);
    e.set(k, 1);
    return e;
}

void ExpVec::set(std::size_t k, value_type v)
{
    degree_ = degree_ - exps_.at(k) + v;
    exps_[k] = v;
}

void ExpVec::recount()
{
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0UL);
}

ExpVec ExpVec::plus_unit(std::size_t k) const
{
    ExpVec r = *this;
    r.set(k, exps_.at(k) + 1);
    return r;
}

std::optional<ExpVec> ExpVec::minus_unit(std::size_t k) const
{
    if (exps_.at(k) == 0)
        return std::nullopt;
    ExpVec r = *this;
    r.set(k, exps_[k] - 1);
    return r;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b)
{
    if (a.size() != b.size())
        throw VariableMismatch("exponent vectors of different length");
    ExpVec r = a;
    for (std::size_t k = 0; k < a.size(); ++k)
        r.exps_[k] += b.exps_[k];
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b)
{
    if (auto c = a.degree_ <=> b.degree_; c != 0)
        return c;
    return a.exps_ <=> b.exps_;
}

namespace {

void monomials_rec(ExpVec& cur, std::size_t pos, unsigned long remaining,
                   const std::function<void(const ExpVec&)>& fn)
{
    const std::size_t n = cur.size();
    if (pos + 1 == n) {
        cur.set(pos, static_cast<ExpVec::value_type>(remaining));
        fn(cur);
        cur.set(pos, 0);
        return;
    }
    for (unsigned long v = remaining + 1; v-- > 0;) {
        cur.set(pos, static_cast<ExpVec::value_type>(v));
        monomials_rec(cur, pos + 1, remaining - v, fn);
    }
    cur.set(pos, 0);
}

void check_nvars(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.nvars() != b.nvars())
        throw VariableMismatch("series in " + std::to_string(a.nvars()) + " and " +
                               std::to_string(b.nvars()) + " variables");
}

} // namespace

void for_each_monomial(std::size_t nvars, unsigned long degree, const std::function<void(const ExpVec&)>& fn)
{
    if (nvars == 0)
        return;
    ExpVec cur(nvars);
    monomials_rec(cur, 0, degree, fn);
}

Integer monomial_count(std::size_t nvars, unsigned long degree)
{
    if (nvars == 0)
        return 0;
    return binomial(static_cast<long>(degree + nvars - 1), static_cast<long>(nvars - 1));
}

// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::size_t nvars, unsigned trunc) : nvars_(nvars), trunc_(trunc)
{
    if (nvars == 0)
        throw std::invalid_argument("a series needs at least one variable");
}

TruncatedSeries TruncatedSeries::from_terms(std::size_t nvars, unsigned trunc, Terms terms)
{
    TruncatedSeries s(nvars, trunc);
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != nvars)
            throw VariableMismatch("term with " + std::to_string(it->first.size()) + " exponents in a series of " +
                                   std::to_string(nvars) + " variables");
        if (it->second == 0 || it->first.total_degree() > trunc)
            it = terms.erase(it);
        else
            ++it;
    }
    s.terms_ = std::move(terms);
    return s;
}

TruncatedSeries TruncatedSeries::constant(std::size_t nvars, unsigned trunc, const Integer& c)
{
    Terms t;
    t.emplace(ExpVec(nvars), c);
    return from_terms(nvars, trunc, std::move(t));
}

TruncatedSeries TruncatedSeries::variable(std::size_t nvars, unsigned trunc, std::size_t k)
{
    if (k >= nvars)
        throw VariableMismatch("variable index out of range");
    Terms t;
    t.emplace(ExpVec::unit(nvars, k), Integer(1));
    return from_terms(nvars, trunc, std::move(t));
}

TruncatedSeries TruncatedSeries::linear_sum(std::size_t nvars, unsigned trunc)
{
    Terms t;
    for (std::size_t k = 0; k < nvars; ++k)
        t.emplace(ExpVec::unit(nvars, k), Integer(1));
    return from_terms(nvars, trunc, std::move(t));
}

Integer TruncatedSeries::coeff(const ExpVec& m) const
{
    if (m.size() != nvars_)
        throw VariableMismatch("exponent vector of length " + std::to_string(m.size()) + " for a series in " +
                               std::to_string(nvars_) + " variables");
    if (m.total_degree() > trunc_)
        throw OutOfRange("total degree " + std::to_string(m.total_degree()) + " exceeds truncation " +
                         std::to_string(trunc_));
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated(unsigned trunc) const
{
    TruncatedSeries r(nvars_, std::min(trunc, trunc_));
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() > r.trunc_)
            break;
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::homogeneous_part(unsigned long d) const
{
    TruncatedSeries r(nvars_, trunc_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == d)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

// Arithmetic

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_nvars(a, b);
    const unsigned n = std::min(a.trunc(), b.trunc());
    TruncatedSeries::Terms t;
    for (const auto& [m, c] : a.terms())
        if (m.total_degree() <= n)
            t.emplace_hint(t.end(), m, c);
    for (const auto& [m, c] : b.terms())
        if (m.total_degree() <= n)
            t[m] += c;
    return TruncatedSeries::from_terms(a.nvars(), n, std::move(t));
}

TruncatedSeries negate(const TruncatedSeries& a)
{
    TruncatedSeries::Terms t;
    for (const auto& [m, c] : a.terms())
        t.emplace_hint(t.end(), m, -c);
    return TruncatedSeries::from_terms(a.nvars(), a.trunc(), std::move(t));
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return add(a, negate(b));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_nvars(a, b);
    const unsigned n = std::min(a.trunc(), b.trunc());
    TruncatedSeries::Terms t;
    for (const auto& [ma, ca] : a.terms()) {
        const unsigned long da = ma.total_degree();
        if (da > n)
            break;
        // b is ordered by total degree, so the first too-high term ends the row.
        for (const auto& [mb, cb] : b.terms()) {
            if (da + mb.total_degree() > n)
                break;
            Integer& slot = t[ma + mb];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    return TruncatedSeries::from_terms(a.nvars(), n, std::move(t));
}

TruncatedSeries mul_by_variable(const TruncatedSeries& a, std::size_t k, unsigned out_trunc)
{
    if (k >= a.nvars())
        throw VariableMismatch("variable index out of range");
    out_trunc = std::min(out_trunc, a.trunc() + 1);
    TruncatedSeries::Terms t;
    for (const auto& [m, c] : a.terms()) {
        if (m.total_degree() + 1 > out_trunc)
            break;
        t.emplace(m.plus_unit(k), c);
    }
    return TruncatedSeries::from_terms(a.nvars(), out_trunc, std::move(t));
}

TruncatedSeries mul_by_S1(const TruncatedSeries& q)
{
    const unsigned n = q.trunc() + 1;
    TruncatedSeries::Terms t;
    for (const auto& [m, c] : q.terms())
        for (std::size_t k = 0; k < q.nvars(); ++k)
            t[m.plus_unit(k)] += c;
    return TruncatedSeries::from_terms(q.nvars(), n, std::move(t));
}

TruncatedSeries divide_exact_by_S1(const TruncatedSeries& a)
{
    if (a.trunc() == 0)
        throw std::invalid_argument("divide_exact_by_S1 needs truncation >= 1");
    const std::size_t r = a.nvars();
    if (a.coeff(ExpVec(r)) != 0)
        throw NonzeroConstant("dividend has nonzero constant term " + a.coeff(ExpVec(r)).get_str());

    const unsigned qtrunc = a.trunc() - 1;
    TruncatedSeries::Terms q;
    auto lookup = [&q](const ExpVec& m) -> const Integer* {
        auto it = q.find(m);
        return it == q.end() ? nullptr : &it->second;
    };

    for (unsigned d = 0; d <= qtrunc; ++d) {
        for_each_monomial(r, d, [&](const ExpVec& m) {
            const ExpVec up = m.plus_unit(0);
            Integer v = a.coeff(up);
            for (std::size_t k = 1; k < r; ++k) {
                if (m[k] == 0)
                    continue;
                // m + e_1 - e_k has a larger first exponent, so it was solved already.
                if (const Integer* prev = lookup(*up.minus_unit(k)))
                    v -= *prev;
            }
            if (v != 0)
                q.emplace(m, std::move(v));
        });
    }

    TruncatedSeries quotient = TruncatedSeries::from_terms(r, qtrunc, std::move(q));
    if (!(mul_by_S1(quotient) == a))
        throw NotDivisible("series is not a multiple of t_1 + ... + t_" + std::to_string(r) +
                           " through degree " + std::to_string(a.trunc()));
    return quotient;
}

UnivariateSeries substitute_signed(const TruncatedSeries& a, std::span<const long> weights)
{
    if (weights.size() != a.nvars())
        throw VariableMismatch("expected " + std::to_string(a.nvars()) + " weights, got " +
                               std::to_string(weights.size()));
    UnivariateSeries out;
    out.coeffs.assign(a.trunc() + 1, Integer(0));
    for (const auto& [m, c] : a.terms()) {
        Integer term = c;
        for (std::size_t k = 0; k < weights.size() && term != 0; ++k)
            if (m[k] != 0)
                term *= power(Integer(weights[k]), m[k]);
        out.coeffs[m.total_degree()] += term;
    }
    return out;
}

} // namespace geode
