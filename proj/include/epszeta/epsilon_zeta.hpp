#pragma once

// Jacobi's epsilon and zeta functions for a real modulus |k| <= 1:
//
//   eps(x, k) = E(am(x, k), k) = int_0^x dn^2(t, k) dt
//   Z(x, k)   = eps(x, k) - (E(k) / K(k)) x
//
// eps is evaluated through the incomplete integral, never by quadrature.
// The argument is first reduced to |r| <= K using eps(x + 2K) = eps(x) + 2E,
// which keeps am(r) inside [-pi/2, pi/2] and makes Z exactly 2K-periodic.

#include <cmath>
#include <concepts>

#include "elliptic.hpp"
#include "errors.hpp"

namespace epszeta {

namespace detail {

template <std::floating_point Real>
struct ReducedArgument {
    Real periods;  // x = r + 2 K periods
    Real r;
};

template <std::floating_point Real>
ReducedArgument<Real> reduce_by_period(Real x, Real quarter_period)
{
    const Real periods = std::nearbyint(x / (2 * quarter_period));
    return {periods, x - 2 * quarter_period * periods};
}

template <std::floating_point Real>
Real epsilon(Real x, const ModulusPair<Real>& m)
{
    if (m.k == 0)
        return x;
    if (m.kc == 0)
        return std::tanh(x);
    const auto [periods, r] = reduce_by_period(x, complete_k(m));
    Real value = incomplete_e(amplitude(r, m), m);
    if (periods != 0)
        value += 2 * periods * complete_e(m);
    return value;
}

template <std::floating_point Real>
Real zeta(Real x, const ModulusPair<Real>& m)
{
    if (m.k == 0)
        return 0;
    // E/K -> 0 as K diverges
    if (m.kc == 0)
        return std::tanh(x);
    const Real K = complete_k(m);
    const Real E = complete_e(m);
    const auto reduced = reduce_by_period(x, K);
    return incomplete_e(amplitude(reduced.r, m), m) - E / K * reduced.r;
}

template <std::floating_point Real>
Real zeta_shift_quarter_period(Real x, const ModulusPair<Real>& m)
{
    if (m.kc == 0)
        throw DomainError("zeta_shift_quarter_period: K(k) diverges at |k| = 1");
    const auto t = sncndn(x, m);
    return zeta(x, m) - m.k2() * t.sn * t.cn / t.dn;
}

}  // namespace detail

/// Jacobi epsilon function for |k| <= 1. eps(x, 0) = x, eps(x, 1) = tanh x.
/// Moduli with |k| > 1 go through the extended-modulus routines instead.
template <std::floating_point Real>
Real epsilon(Real x, Real k)
{
    detail::require_finite(x, "epsilon", "x");
    return detail::epsilon(x, detail::ModulusPair<Real>::from_modulus(k, "epsilon"));
}

/// Jacobi zeta function for |k| <= 1, with Z(x, 1) = eps(x, 1) = tanh x.
template <std::floating_point Real>
Real zeta(Real x, Real k)
{
    detail::require_finite(x, "zeta", "x");
    return detail::zeta(x, detail::ModulusPair<Real>::from_modulus(k, "zeta"));
}

/// Z(x + K(k), k) evaluated as Z(x, k) - k^2 sn cn / dn, for |k| < 1.
template <std::floating_point Real>
Real zeta_shift_quarter_period(Real x, Real k)
{
    detail::require_finite(x, "zeta_shift_quarter_period", "x");
    return detail::zeta_shift_quarter_period(
        x, detail::ModulusPair<Real>::from_modulus(k, "zeta_shift_quarter_period"));
}

}  // namespace epszeta
