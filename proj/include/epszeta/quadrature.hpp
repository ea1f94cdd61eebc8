#pragma once

// Adaptive quadrature on the 8-panel (9-point) closed Newton-Cotes rule,
// in the spirit of Forsythe, Malcolm & Moler's QUANC8. Each interval is
// integrated once with the rule and once with the rule on both halves; the
// difference over 1023 estimates the error of the refined value. Intervals
// whose estimate exceeds their share of the tolerance are bisected.
//
// This module is the independent check on the transformation formulas:
// it integrates the real integrand of eps(x, m) directly.

#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <type_traits>

#include "elliptic.hpp"
#include "errors.hpp"
#include "extended_modulus.hpp"

namespace epszeta {

template <std::floating_point Real>
struct QuadratureResult {
    Real value;
    Real error_estimate;
};

/// Bisection depth at which integrate gives up with ConvergenceError.
inline constexpr int max_quadrature_depth = 48;

namespace detail {

// Neumaier-compensated running sum; intervals are added left to right, so
// the result does not depend on anything but the integrand and limits.
template <std::floating_point Real>
class CompensatedSum {
public:
    void add(Real v)
    {
        const Real t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + carry_; }

private:
    Real sum_ = 0;
    Real carry_ = 0;
};

// Weights of the 9-point closed Newton-Cotes rule, scaled by 4h/14175.
template <std::floating_point Real>
inline constexpr std::array<Real, 9> newton_cotes8_weights{
    989, 5888, -928, 10496, -4540, 10496, -928, 5888, 989};

template <std::floating_point Real>
Real newton_cotes8(const Real* f, Real h)
{
    const auto& w = newton_cotes8_weights<Real>;
    // symmetric pairs first
    Real s = w[4] * f[4];
    for (int i = 0; i < 4; ++i)
        s += w[i] * (f[i] + f[8 - i]);
    return s * 4 * h / 14175;
}

template <std::floating_point Real, typename F>
class AdaptiveNewtonCotes {
public:
    AdaptiveNewtonCotes(F& f, Real tol, Real width) : f_(f), tol_(tol), width_(width) {}

    // samples holds f at 9 equally spaced points of [a, b], a and b included.
    void run(Real a, Real b, const std::array<Real, 9>& samples, int depth)
    {
        const Real h = (b - a) / 16;
        std::array<Real, 17> fine{};
        for (int i = 0; i < 9; ++i)
            fine[2 * i] = samples[i];
        for (int i = 1; i < 17; i += 2)
            fine[i] = f_(a + i * h);

        const Real coarse = newton_cotes8(samples.data(), 2 * h);
        const Real left = newton_cotes8(fine.data(), h);
        const Real right = newton_cotes8(fine.data() + 8, h);
        const Real refined = left + right;
        const Real estimate = std::abs(refined - coarse) / 1023;

        if (!std::isfinite(refined))
            throw DomainError("integrate: integrand is not finite on the interval");

        if (estimate <= tol_ * ((b - a) / width_)) {
            value_.add(refined);
            error_.add(estimate);
            return;
        }
        if (depth + 1 >= max_quadrature_depth)
            throw ConvergenceError("integrate: subdivision depth limit " +
                                   std::to_string(max_quadrature_depth) + " reached");

        const Real mid = (a + b) / 2;
        std::array<Real, 9> lower{};
        std::array<Real, 9> upper{};
        for (int i = 0; i < 9; ++i) {
            lower[i] = fine[i];
            upper[i] = fine[8 + i];
        }
        run(a, mid, lower, depth + 1);
        run(mid, b, upper, depth + 1);
    }

    QuadratureResult<Real> result() const { return {value_.value(), error_.value()}; }

private:
    F& f_;
    Real tol_;
    Real width_;
    CompensatedSum<Real> value_;
    CompensatedSum<Real> error_;
};

}  // namespace detail

/// Integrates f over [a, b] to absolute tolerance tol.
/// Throws DomainError on a > b or tol <= 0, ConvergenceError when an
/// interval still fails the tolerance at max_quadrature_depth.
template <std::floating_point Real, typename F>
QuadratureResult<Real> integrate(F&& f, Real a, Real b, Real tol)
{
    detail::require_finite(a, "integrate", "a");
    detail::require_finite(b, "integrate", "b");
    if (a > b)
        throw DomainError("integrate: requires a <= b");
    if (!(tol > 0))
        throw DomainError("integrate: tolerance must be positive");
    if (a == b)
        return {Real(0), Real(0)};

    std::array<Real, 9> samples{};
    const Real h = (b - a) / 8;
    for (int i = 0; i < 9; ++i)
        samples[i] = f(i == 8 ? b : a + i * h);

    detail::AdaptiveNewtonCotes<Real, std::remove_reference_t<F>> engine(f, tol, b - a);
    engine.run(a, b, samples, 0);
    return engine.result();
}

/// Which real integrand represents dn^2(t, m) for a regime.
enum class Integrand {
    dn_squared,             // dn^2(t, k),                     |k| <= 1
    reciprocal_cn_squared,  // cn^2(k t, 1/k),                 k > 1
    inverse_dn_squared,     // 1 / dn^2(t / k1', k1),          modulus i k
};

template <std::floating_point Real>
struct IntegrandSpec {
    Modulus<Real> modulus;
    Integrand kind;

    static IntegrandSpec for_modulus(const Modulus<Real>& m)
    {
        switch (m.regime()) {
        case Regime::standard: return {m, Integrand::dn_squared};
        case Regime::large_real: return {m, Integrand::reciprocal_cn_squared};
        case Regime::pure_imaginary: return {m, Integrand::inverse_dn_squared};
        }
        throw DomainError("IntegrandSpec: unknown regime");
    }

    Real operator()(Real t) const
    {
        const Real k = modulus.magnitude();
        switch (kind) {
        case Integrand::dn_squared: {
            const Real dn = sncndn(t, k).dn;
            return dn * dn;
        }
        case Integrand::reciprocal_cn_squared: {
            const Real cn = detail::sncndn(k * t, detail::reciprocal_modulus(k)).cn;
            return cn * cn;
        }
        case Integrand::inverse_dn_squared: {
            const auto m = detail::imaginary_equivalent(k);
            const Real dn = detail::sncndn(t / m.kc, m).dn;
            return 1 / (dn * dn);
        }
        }
        return std::numeric_limits<Real>::quiet_NaN();
    }
};

/// eps(x, m) as int_0^x of the regime's integrand; odd in x.
template <std::floating_point Real>
Real epsilon_by_quadrature(Real x, const Modulus<Real>& m, Real tol)
{
    detail::require_finite(x, "epsilon_by_quadrature", "x");
    const auto spec = IntegrandSpec<Real>::for_modulus(m);
    const Real value = integrate(spec, Real(0), std::abs(x), tol).value;
    return x < 0 ? -value : value;
}

}  // namespace epszeta
