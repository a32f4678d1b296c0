#include "geode/wz.hpp"

#include "geode/geode.hpp"

#include <sstream>
#include <stdexcept>

namespace geode {

namespace {

Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

int sign_of(long e)
{
    return (e % 2 == 0) ? 1 : -1;
}

// F for the a-parameter family; zero outside 0 <= k <= n.
Rational family_F(long a, long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Integer num = binomial(n, k) * binomial(a * n + 1 + k, (a - 1) * n + 1 + k);
    return make_rational(sign_of(k) * num, Integer(a * n + 1 + k));
}

Rational family_H(long a, long n, long k)
{
    return -family_F(a, n, k) * make_rational(Integer(k) * ((a - 1) * n + 1 + k), Integer(n) * (a * n + 1));
}

void require_range(long n, long k, long k_max, const char* what)
{
    if (n < 1 || k < 0 || k > k_max)
        throw std::out_of_range(std::string(what) + ": (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) +
                                ") outside the domain");
}

std::string describe(const char* lhs_name, const Rational& lhs, const char* rhs_name, const Rational& rhs)
{
    std::ostringstream os;
    os << lhs_name << " = " << lhs.get_str() << " but " << rhs_name << " = " << rhs.get_str();
    return os.str();
}

} // namespace

Rational F1(long n, long k)
{
    require_range(n, k, n, "F1");
    return family_F(2, n, k);
}

Rational H1(long n, long k)
{
    require_range(n, k, n + 1, "H1");
    return family_H(2, n, k);
}

Rational F2(long a, long n, long k)
{
    if (a < 2)
        throw std::invalid_argument("F2 needs a >= 2");
    require_range(n, k, n, "F2");
    return family_F(a, n, k);
}

Rational H2(long a, long n, long k)
{
    if (a < 2)
        throw std::invalid_argument("H2 needs a >= 2");
    require_range(n, k, n + 1, "H2");
    return family_H(a, n, k);
}

Rational certificate_summand(long n, long m)
{
    if (n < 1 || m < 0 || m > n - 1)
        return 0;
    Integer num = binomial(n - 1, m) * binomial(2 * n + 1 + m, n + 1 + m);
    return make_rational(sign_of(n - 1 - m) * num, Integer(2 * n + 1));
}

Rational certificate_R(long n, long m)
{
    if (m == n)
        throw std::domain_error("certificate R(n, m) has a pole at m = n");
    return certificate_R_cleared(n, m) / Rational(n - m);
}

Rational certificate_R_cleared(long n, long m)
{
    Integer num = Integer(m) * (8 * m * n + 10 * n * n + 6 * m + 15 * n + 6);
    return make_rational(num, Integer(2 * (2 * n + 3)) * (n + 1));
}

Rational certificate_companion(long n, long m, const RationalFn& cleared)
{
    if (n < 1 || m < 0 || m > n)
        return 0;
    // binom(n-1, m) / (n - m) = binom(n, m) / n removes the pole of R at m = n.
    Integer num = binomial(n, m) * binomial(2 * n + 1 + m, n + 1 + m);
    Rational rest = make_rational(sign_of(n - 1 - m) * num, Integer(n) * (2 * n + 1));
    return cleared(n, m) * rest;
}

WzCheck check_wz_pair(const RationalFn& F, const RationalFn& H, long n_max)
{
    WzCheck out;
    for (long n = 1; n <= n_max; ++n) {
        Rational total = 0;
        for (long k = 0; k <= n; ++k) {
            const Rational f = F(n, k);
            const Rational diff = H(n, k + 1) - H(n, k);
            ++out.points;
            if (f != diff) {
                out.passed = false;
                out.counterexample = {n, k};
                out.detail = describe("F(n,k)", f, "H(n,k+1) - H(n,k)", diff);
                return out;
            }
            total += f;
        }
        if (total != 0) {
            out.passed = false;
            out.counterexample = {n, -1};
            out.detail = "sum_k F(" + std::to_string(n) + ",k) = " + total.get_str();
            return out;
        }
    }
    return out;
}

WzCheck check_wz1(long n_max)
{
    return check_wz_pair(F1, H1, n_max);
}

WzCheck check_wz2(long a, long n_max)
{
    WzCheck out = check_wz_pair([a](long n, long k) { return F2(a, n, k); },
                                [a](long n, long k) { return H2(a, n, k); }, n_max);
    if (!out.passed || a != 2)
        return out;
    for (long n = 1; n <= n_max; ++n)
        for (long k = 0; k <= n + 1; ++k) {
            const bool f_ok = k > n || F2(2, n, k) == F1(n, k);
            if (!f_ok || H2(2, n, k) != H1(n, k)) {
                out.passed = false;
                out.counterexample = {n, k};
                out.detail = "a = 2 pair differs from the two-variable pair";
                return out;
            }
        }
    return out;
}

WzCheck check_certificate_R(long n_max, const RationalFn& cleared)
{
    WzCheck out;
    auto G = [&cleared](long n, long m) { return certificate_companion(n, m, cleared); };
    const auto& F = certificate_summand;

    bool n_difference = true;
    bool m_difference = true;
    for (long n = 1; n <= n_max; ++n) {
        Rational total = 0;
        for (long m = 0; m <= n - 1; ++m)
            total += F(n, m);
        ++out.points;
        if (total != 1) {
            out.passed = false;
            out.counterexample = {n, -1};
            out.detail = "sum_m summand(" + std::to_string(n) + ", m) = " + total.get_str();
            return out;
        }
        for (long m = 0; m <= n; ++m) {
            ++out.points;
            if (n_difference && F(n + 1, m) - F(n, m) != G(n, m + 1) - G(n, m)) {
                n_difference = false;
                if (!m_difference)
                    out.counterexample = {n, m};
            }
            if (m_difference && G(n + 1, m) - G(n, m) != F(n, m + 1) - F(n, m)) {
                m_difference = false;
                if (!n_difference)
                    out.counterexample = {n, m};
            }
            if (!n_difference && !m_difference) {
                out.passed = false;
                out.detail = "WZ relation fails in both orientations";
                return out;
            }
        }
    }
    out.orientation = n_difference ? "n-difference: F(n+1,m) - F(n,m) = G(n,m+1) - G(n,m)"
                                   : "m-difference: G(n+1,m) - G(n,m) = F(n,m+1) - F(n,m)";
    return out;
}

WzCheck check_quotient_link(long n_max)
{
    WzCheck out;
    for (long n = 1; n <= n_max; ++n)
        for (long i = 0; i <= n - 1; ++i) {
            ++out.points;
            const Rational lhs = sign_of(i) * H1(n, i + 1);
            const Rational rhs = make_rational(binomial(n - 1, i) * binomial(2 * n + 1 + i, n + 1 + i), Integer(2 * n + 1));
            const Rational closed = geode_closed_2var(static_cast<unsigned long>(n - 1 - i), static_cast<unsigned long>(i));
            if (lhs != rhs || rhs != closed) {
                out.passed = false;
                out.counterexample = {n, i};
                out.detail = "(-1)^i H(n,i+1) = " + lhs.get_str() + ", quotient formula = " + rhs.get_str() +
                             ", closed form = " + closed.get_str();
                return out;
            }
        }
    return out;
}

} // namespace geode
