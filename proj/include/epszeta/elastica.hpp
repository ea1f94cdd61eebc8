#pragma once

// Euler's elastica in Love's parametric form, u = omega s:
//
//   flexural, 0 < k < 1:
//     x(u) = { -u + 2 [eps(u + K, k) - E(k)] } / omega
//     y(u) = -(2k / omega) cn(u + K, k)
//   in-flexural, k > 1:
//     x(u) = { (1 - 2k^2) k u + 2k^2 eps(k u, 1/k) } / (omega k)
//     y(u) = -(2k / omega) dn(k u, 1/k)
//
// The in-flexural curve is the flexural one carried to k > 1 with the
// reciprocal-modulus form of eps, then shifted so that it is symmetric
// about u = 0. Both curves satisfy (dx/du)^2 + (dy/du)^2 = 1/omega^2.

#include <cmath>
#include <concepts>
#include <vector>

#include "elliptic.hpp"
#include "epsilon_zeta.hpp"
#include "errors.hpp"
#include "extended_modulus.hpp"

namespace epszeta {

enum class CurveKind { flexural, inflexural };

template <std::floating_point Real>
struct ElasticaParams {
    Real k;
    Real omega;
};

template <std::floating_point Real>
struct PlanePoint {
    Real x;
    Real y;
};

namespace detail {

template <std::floating_point Real>
void require_omega(const ElasticaParams<Real>& p, const char* function)
{
    require_finite(p.omega, function, "omega");
    if (!(p.omega > 0))
        throw DomainError(std::string(function) + ": omega must be positive");
}

}  // namespace detail

template <std::floating_point Real>
PlanePoint<Real> flexural_point(Real u, const ElasticaParams<Real>& p)
{
    detail::require_finite(u, "flexural_point", "u");
    detail::require_finite(p.k, "flexural_point", "k");
    detail::require_omega(p, "flexural_point");
    if (!(p.k > 0 && p.k < 1))
        throw DomainError("flexural_point: requires 0 < k < 1");

    const auto m = detail::ModulusPair<Real>::from_modulus(p.k, "flexural_point");
    const Real K = detail::complete_k(m);
    const Real E = detail::complete_e(m);
    const Real shifted = u + K;
    const Real x = (-u + 2 * (detail::epsilon(shifted, m) - E)) / p.omega;
    const Real y = -2 * p.k / p.omega * detail::sncndn(shifted, m).cn;
    return {x, y};
}

template <std::floating_point Real>
PlanePoint<Real> inflexural_point(Real u, const ElasticaParams<Real>& p)
{
    detail::require_finite(u, "inflexural_point", "u");
    detail::require_omega(p, "inflexural_point");
    detail::require_large_real(p.k, "inflexural_point");

    const Real k = p.k;
    const auto m = detail::reciprocal_modulus(k);
    const Real ku = k * u;
    const Real x = ((1 - 2 * k * k) * ku + 2 * k * k * detail::epsilon(ku, m)) / (p.omega * k);
    const Real y = -2 * k / p.omega * detail::sncndn(ku, m).dn;
    return {x, y};
}

/// n parameter values evenly spaced over [u_min, u_max], both ends included.
template <std::floating_point Real>
std::vector<Real> uniform_grid(Real u_min, Real u_max, int n)
{
    detail::require_finite(u_min, "uniform_grid", "u_min");
    detail::require_finite(u_max, "uniform_grid", "u_max");
    if (!(u_min < u_max))
        throw DomainError("uniform_grid: requires u_min < u_max");
    if (n < 2)
        throw DomainError("uniform_grid: requires at least 2 samples");

    std::vector<Real> grid(static_cast<std::size_t>(n));
    const Real step = (u_max - u_min) / (n - 1);
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] = u_min + i * step;
    grid.back() = u_max;
    return grid;
}

/// Points of the curve at uniform_grid(u_min, u_max, n), in order.
template <std::floating_point Real>
std::vector<PlanePoint<Real>> sample_curve(CurveKind kind, const ElasticaParams<Real>& p,
                                           Real u_min, Real u_max, int n)
{
    const auto grid = uniform_grid(u_min, u_max, n);
    std::vector<PlanePoint<Real>> points;
    points.reserve(grid.size());
    for (Real u : grid)
        points.push_back(kind == CurveKind::flexural ? flexural_point(u, p) : inflexural_point(u, p));
    return points;
}

}  // namespace epszeta
