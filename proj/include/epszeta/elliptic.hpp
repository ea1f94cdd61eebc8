#pragma once

// Legendre elliptic integrals and Jacobi elliptic functions for a real
// modulus 0 <= k <= 1. Everything here is built on the Carlson forms in
// carlson.hpp (integrals) and on the descending Landen / AGM recursion
// (amplitude, sn, cn, dn). The sign of k is ignored: K, E, am and the
// Jacobi functions are even in k.

#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "carlson.hpp"
#include "errors.hpp"

namespace epszeta {

template <std::floating_point Real>
struct JacobiTriple {
    Real sn;
    Real cn;
    Real dn;
};

/// Complete integrals of the first and second kind at one modulus.
template <std::floating_point Real>
struct EllipticPair {
    Real K;
    Real E;
};

namespace detail {

// A modulus together with its complement kc = sqrt(1 - k^2). Routines that
// derive a modulus from another one (1/k, k/sqrt(1+k^2), ...) know kc in
// closed form and pass it in exactly instead of recomputing it near k = 1.
template <std::floating_point Real>
struct ModulusPair {
    Real k;
    Real kc;

    static ModulusPair from_modulus(Real k, const char* function)
    {
        require_finite(k, function, "modulus");
        k = std::abs(k);
        if (k > 1)
            throw DomainError(std::string(function) + ": modulus must satisfy |k| <= 1");
        return {k, std::sqrt((1 - k) * (1 + k))};
    }

    Real k2() const { return k * k; }
    Real kc2() const { return kc * kc; }
};

template <std::floating_point Real>
Real complete_k(const ModulusPair<Real>& m)
{
    if (m.kc == 0)
        throw DomainError("complete_k: K(k) diverges at |k| = 1");
    return rf(Real(0), m.kc2(), Real(1));
}

template <std::floating_point Real>
Real complete_e(const ModulusPair<Real>& m)
{
    if (m.kc == 0)
        return 1;
    const Real y = m.kc2();
    return rf(Real(0), y, Real(1)) - m.k2() / 3 * rd(Real(0), y, Real(1));
}

// E(phi, k) for |phi| <= pi/2.
template <std::floating_point Real>
Real incomplete_e_principal(Real phi, const ModulusPair<Real>& m)
{
    const Real s = std::sin(phi);
    if (m.kc == 0)
        return s;
    const Real c = std::cos(phi);
    const Real c2 = c * c;
    // 1 - k^2 s^2 written as a sum of non-negative terms
    const Real delta2 = c2 + m.kc2() * s * s;
    return s * rf(c2, delta2, Real(1)) - m.k2() * s * s * s / 3 * rd(c2, delta2, Real(1));
}

template <std::floating_point Real>
Real incomplete_e(Real phi, const ModulusPair<Real>& m)
{
    constexpr Real pi = std::numbers::pi_v<Real>;
    const Real periods = std::nearbyint(phi / pi);
    const Real reduced = phi - periods * pi;
    Real value = incomplete_e_principal(reduced, m);
    if (periods != 0)
        value += 2 * periods * complete_e(m);
    return value;
}

template <std::floating_point Real>
Real amplitude(Real x, const ModulusPair<Real>& m)
{
    if (m.k == 0)
        return x;
    if (m.kc == 0)
        return 2 * std::atan(std::tanh(x / 2));  // Gudermannian

    // Descending Landen sequence: a_{n+1} = (a_n + b_n)/2, b_{n+1} = sqrt(a_n b_n),
    // c_{n+1} = (a_n - b_n)/2, then phi_{n-1} = (phi_n + asin(c_n sin(phi_n) / a_n)) / 2.
    constexpr int max_steps = 32;
    std::array<Real, max_steps + 1> a{};
    std::array<Real, max_steps + 1> c{};
    a[0] = 1;
    c[0] = m.k;
    Real b = m.kc;
    int n = 0;
    while (std::abs(c[n]) > std::numeric_limits<Real>::epsilon() * a[n]) {
        if (n == max_steps)
            throw ConvergenceError("amplitude: AGM did not converge");
        a[n + 1] = (a[n] + b) / 2;
        c[n + 1] = (a[n] - b) / 2;
        b = std::sqrt(a[n] * b);
        ++n;
    }

    Real phi = std::ldexp(a[n] * x, n);
    for (; n > 0; --n)
        phi = (phi + std::asin(c[n] * std::sin(phi) / a[n])) / 2;
    return phi;
}

template <std::floating_point Real>
JacobiTriple<Real> sncndn(Real x, const ModulusPair<Real>& m)
{
    if (m.k == 0)
        return {std::sin(x), std::cos(x), Real(1)};
    if (m.kc == 0) {
        const Real sech = 1 / std::cosh(x);
        return {std::tanh(x), sech, sech};
    }
    const Real phi = amplitude(x, m);
    const Real sn = std::sin(phi);
    const Real cn = std::cos(phi);
    return {sn, cn, std::sqrt(cn * cn + m.kc2() * sn * sn)};
}

}  // namespace detail

/// Complete elliptic integral of the first kind K(k) = RF(0, 1-k^2, 1).
/// Throws DomainError for |k| >= 1.
template <std::floating_point Real>
Real complete_k(Real k)
{
    const auto m = detail::ModulusPair<Real>::from_modulus(k, "complete_k");
    return detail::complete_k(m);
}

/// Complete elliptic integral of the second kind, E(1) = 1.
template <std::floating_point Real>
Real complete_e(Real k)
{
    return detail::complete_e(detail::ModulusPair<Real>::from_modulus(k, "complete_e"));
}

template <std::floating_point Real>
EllipticPair<Real> complete_pair(Real k)
{
    const auto m = detail::ModulusPair<Real>::from_modulus(k, "complete_pair");
    return {detail::complete_k(m), detail::complete_e(m)};
}

/// Incomplete integral of the second kind E(phi, k) = int_0^phi sqrt(1 - k^2 sin^2 t) dt
/// for any finite phi. Angles outside [-pi/2, pi/2] use E(phi + pi) = E(phi) + 2E(k).
template <std::floating_point Real>
Real incomplete_e(Real phi, Real k)
{
    detail::require_finite(phi, "incomplete_e", "phi");
    return detail::incomplete_e(phi, detail::ModulusPair<Real>::from_modulus(k, "incomplete_e"));
}

/// Jacobi amplitude am(x, k) on its continuous, unbounded branch, so that
/// am(x + 2K, k) = am(x, k) + pi. am(x, 1) is the Gudermannian.
template <std::floating_point Real>
Real amplitude(Real x, Real k)
{
    detail::require_finite(x, "amplitude", "x");
    return detail::amplitude(x, detail::ModulusPair<Real>::from_modulus(k, "amplitude"));
}

template <std::floating_point Real>
JacobiTriple<Real> sncndn(Real x, Real k)
{
    detail::require_finite(x, "sncndn", "x");
    return detail::sncndn(x, detail::ModulusPair<Real>::from_modulus(k, "sncndn"));
}

}  // namespace epszeta
