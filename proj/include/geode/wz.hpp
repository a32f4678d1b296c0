#pragma once

#include "geode/integer.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace geode {

using RationalFn = std::function<Rational(long n, long k)>;

/// F(n,k) = (-1)^k binom(n,k) binom(2n+1+k, n+1+k) / (2n+1+k). Requires 0 <= k <= n.
Rational F1(long n, long k);
/// H(n,k) = -F(n,k) k(n+1+k) / (n(2n+1)). Requires n >= 1, 0 <= k <= n+1.
Rational H1(long n, long k);

/// F(n,k) = (-1)^k binom(n,k) binom(an+1+k, (a-1)n+1+k) / (an+1+k). Requires 0 <= k <= n.
Rational F2(long a, long n, long k);
/// H(n,k) = -F(n,k) k((a-1)n+1+k) / (n(an+1)). Requires n >= 1, 0 <= k <= n+1.
Rational H2(long a, long n, long k);

/// Summand of the a = 1 evaluation sum,
///   (-1)^{n-1-m} binom(n-1, m) binom(2n+1+m, n+1+m) / (2n+1),
/// zero outside 0 <= m <= n-1.
Rational certificate_summand(long n, long m);

/// R(n,m) = m(8mn + 10n^2 + 6m + 15n + 6) / (2(2n+3)(n+1)(n-m)).
/// Throws std::domain_error at the pole m = n.
Rational certificate_R(long n, long m);

/// (n - m) R(n,m), the certificate with its pole factor cleared. Polynomial in m.
Rational certificate_R_cleared(long n, long m);

/// Companion G(n,m) = R(n,m) * summand(n,m), evaluated through the cleared
/// certificate so it stays finite at m = n:
///   G(n,m) = cleared(n,m) (-1)^{n-1-m} binom(n,m) binom(2n+1+m, n+1+m) / (n(2n+1)),
/// zero outside 0 <= m <= n.
Rational certificate_companion(long n, long m, const RationalFn& cleared);

/// Outcome of a pointwise WZ check.
struct WzCheck {
    bool passed = true;
    long points = 0;
    /// first failing (n, k), if any
    std::optional<std::pair<long, long>> counterexample;
    std::string detail;
    /// certificate checks only: which orientation held
    std::string orientation;
};

/// For 1 <= n <= n_max and 0 <= k <= n, F(n,k) == H(n,k+1) - H(n,k), and sum_k F(n,k) == 0.
WzCheck check_wz_pair(const RationalFn& F, const RationalFn& H, long n_max);

WzCheck check_wz1(long n_max);
/// Also checks that the a = 2 pair coincides with F1/H1.
WzCheck check_wz2(long a, long n_max);

/// For 1 <= n <= n_max:
///   (i)  sum_{m=0}^{n-1} summand(n,m) == 1;
///   (ii) one WZ orientation holds for every 0 <= m <= n:
///        "n-difference": summand(n+1,m) - summand(n,m) == G(n,m+1) - G(n,m), or
///        "m-difference": G(n+1,m) - G(n,m) == summand(n,m+1) - summand(n,m).
/// The orientation that held across the whole grid is reported.
WzCheck check_certificate_R(long n_max, const RationalFn& cleared = certificate_R_cleared);

/// (-1)^i H1(n, i+1) == binom(n-1,i) binom(2n+1+i, n+1+i) / (2n+1), the Geode
/// layer coefficient G[n-1-i, i], for 1 <= n <= n_max and 0 <= i <= n-1.
WzCheck check_quotient_link(long n_max);

} // namespace geode
