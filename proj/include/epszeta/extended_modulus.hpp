#pragma once

// Epsilon and zeta functions for moduli outside [0, 1]:
//
//  * real |k| > 1, by the reciprocal-modulus transformation
//      eps(x, k) = k eps(kx, 1/k) + (1 - k^2) x
//    Z(x, k) is complex here because K(k) and E(k) are. With the
//    abbreviations K = K(1/k), E = E(1/k), K' = K(1/k'), E' = E(1/k'),
//    k' = k / sqrt(k^2 - 1) (so 1/k' is the complement of 1/k), and
//    D = K^2 + K'^2:
//      E(k)/K(k) = 1 + k^2 [K(E - K) - E'K'] / D  +/-  i k^2 [K'(E - K) + E'K] / D
//      Z(x, k)   = k Z(kx, 1/k) + k^2 K'^2 B x / D  -/+  i k^2 K K' B x / D
//    where B = E/K + E'/K' - 1 = (pi/2) / (K K') by Legendre's relation.
//
//  * pure imaginary modulus ik, by the imaginary-modulus transformation
//    with k1 = k / sqrt(1 + k^2) and k1' = 1 / sqrt(1 + k^2):
//      eps(x, ik) = E(k1) / (k1'^2 K(k1)) x + Z(x/k1' + K(k1), k1) / k1'
//      Z(x, ik)   = Z(x/k1' + K(k1), k1) / k1'
//    For large k and |x| <~ 1/k the two terms of eps cancel, so the
//    absolute error grows like eps_machine k^2 |x|. Past |x| ~ 1/k the
//    result is accurate to a few ulps of its magnitude.
//
// Branch convention. The continuation of K and E past k = 1 is two-valued.
// Branch::lower takes the lower sign of the Z formula above, i.e.
// Im Z(x, k) < 0 for x > 0; this is the branch that gives
// Z(0.5, 2) = 0.663361 - 0.419309i and coincides with the principal values
// K(m), E(m) of the parameter m = k^2 > 1. Branch::upper is its conjugate.
// This is a convention, not something the transformation formulas decide.
// Either branch is odd in x on its own: Z(-x, k) = -Z(x, k).

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string>

#include "elliptic.hpp"
#include "epsilon_zeta.hpp"
#include "errors.hpp"

namespace epszeta {

template <std::floating_point Real>
using ComplexValue = std::complex<Real>;

enum class Regime { standard, large_real, pure_imaginary };

enum class Branch { lower, upper };

/// Real moduli in (1, large_real_threshold) are rejected: K(1/k) is
/// numerically meaningless that close to its logarithmic singularity.
template <std::floating_point Real>
inline constexpr Real large_real_threshold = Real(1) + Real(1e-12);

inline const char* to_string(Regime r)
{
    switch (r) {
    case Regime::standard: return "standard";
    case Regime::large_real: return "large_real";
    case Regime::pure_imaginary: return "pure_imaginary";
    }
    return "unknown";
}

inline const char* to_string(Branch b) { return b == Branch::lower ? "lower" : "upper"; }

/// A modulus tagged with its regime. The stored magnitude is always
/// non-negative: eps and Z are even in k, so signs are dropped on entry.
template <std::floating_point Real>
class Modulus {
public:
    /// Classifies a real modulus: |k| <= 1 is standard, |k| > 1 large-real.
    static Modulus real(Real k)
    {
        detail::require_finite(k, "Modulus::real", "k");
        k = std::abs(k);
        if (k <= 1)
            return Modulus(Regime::standard, k);
        if (k < large_real_threshold<Real>)
            throw DomainError("Modulus::real: |k| in (1, 1 + 1e-12) is numerically singular");
        return Modulus(Regime::large_real, k);
    }

    /// The modulus i*k. k = 0 is the circular case and is classified standard.
    static Modulus imaginary(Real k)
    {
        detail::require_finite(k, "Modulus::imaginary", "k");
        k = std::abs(k);
        if (k == 0)
            return Modulus(Regime::standard, k);
        return Modulus(Regime::pure_imaginary, k);
    }

    Regime regime() const { return regime_; }
    Real magnitude() const { return k_; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    Modulus(Regime r, Real k) : regime_(r), k_(k) {}

    Regime regime_;
    Real k_;
};

/// k1 = k / sqrt(1 + k^2) and its complement k1' = 1 / sqrt(1 + k^2),
/// the standard-regime modulus that represents i*k.
template <std::floating_point Real>
struct DerivedModuli {
    Real k1;
    Real k1p;

    static DerivedModuli from_imaginary(Real k)
    {
        const Real h = std::hypot(Real(1), k);
        return {k / h, 1 / h};
    }
};

/// k' = k / sqrt(k^2 - 1) for k > 1. Its reciprocal is the complement of 1/k.
template <std::floating_point Real>
struct ReciprocalCompanion {
    Real kprime;

    static ReciprocalCompanion of(Real k) { return {k / std::sqrt((k - 1) * (k + 1))}; }

    Real inverse() const { return 1 / kprime; }
};

/// Analytically continued complete integrals K(k), E(k) for k > 1.
template <std::floating_point Real>
struct ContinuedPair {
    ComplexValue<Real> K;
    ComplexValue<Real> E;
};

namespace detail {

template <std::floating_point Real>
void require_large_real(Real k, const char* function)
{
    require_finite(k, function, "k");
    if (!(k >= large_real_threshold<Real>))
        throw DomainError(std::string(function) + ": requires real modulus k > 1");
}

template <std::floating_point Real>
void require_positive_imaginary(Real k, const char* function)
{
    require_finite(k, function, "k");
    if (!(k > 0))
        throw DomainError(std::string(function) + ": requires imaginary modulus magnitude k > 0");
}

// 1/k with exact complement sqrt(k^2 - 1)/k.
template <std::floating_point Real>
ModulusPair<Real> reciprocal_modulus(Real k)
{
    return {1 / k, std::sqrt((k - 1) * (k + 1)) / k};
}

// 1/k' = sqrt(k^2 - 1)/k, whose complement is 1/k.
template <std::floating_point Real>
ModulusPair<Real> companion_modulus(Real k)
{
    return {std::sqrt((k - 1) * (k + 1)) / k, 1 / k};
}

template <std::floating_point Real>
ModulusPair<Real> imaginary_equivalent(Real k)
{
    const auto d = DerivedModuli<Real>::from_imaginary(k);
    return {d.k1, d.k1p};
}

// Complete integrals at 1/k and 1/k' shared by the k > 1 formulas.
template <std::floating_point Real>
struct LargeRealIntegrals {
    Real K;   // K(1/k)
    Real E;   // E(1/k)
    Real Kp;  // K(1/k')
    Real Ep;  // E(1/k')

    static LargeRealIntegrals at(Real k)
    {
        const auto m = reciprocal_modulus(k);
        const auto mp = companion_modulus(k);
        return {complete_k(m), complete_e(m), complete_k(mp), complete_e(mp)};
    }

    Real denominator() const { return K * K + Kp * Kp; }

    // E/K + E'/K' - 1
    Real bracket() const { return E / K + Ep / Kp - 1; }
};

template <std::floating_point Real>
Real branch_sign(Branch b)
{
    return b == Branch::lower ? Real(1) : Real(-1);
}

}  // namespace detail

/// eps(x, k) for real k > 1 via eps(x, k) = k eps(kx, 1/k) + (1 - k^2) x.
template <std::floating_point Real>
Real epsilon_large_real(Real x, Real k)
{
    detail::require_finite(x, "epsilon_large_real", "x");
    detail::require_large_real(k, "epsilon_large_real");
    return k * detail::epsilon(k * x, detail::reciprocal_modulus(k)) + (1 - k) * (1 + k) * x;
}

/// The same quantity through the linear-plus-periodic form
/// eps(x, k) = [k^2 E(1/k)/K(1/k) + 1 - k^2] x + k Z(kx, 1/k).
template <std::floating_point Real>
Real epsilon_large_real_via_zeta(Real x, Real k)
{
    detail::require_finite(x, "epsilon_large_real_via_zeta", "x");
    detail::require_large_real(k, "epsilon_large_real_via_zeta");
    const auto m = detail::reciprocal_modulus(k);
    const Real slope = k * k * detail::complete_e(m) / detail::complete_k(m) + (1 - k) * (1 + k);
    return slope * x + k * detail::zeta(k * x, m);
}

/// E(k)/K(k) for real k > 1 on the requested branch.
template <std::floating_point Real>
ComplexValue<Real> ek_ratio_large_real(Real k, Branch branch = Branch::lower)
{
    detail::require_large_real(k, "ek_ratio_large_real");
    const auto I = detail::LargeRealIntegrals<Real>::at(k);
    const Real k2 = k * k;
    const Real d = I.denominator();
    const Real re = 1 + k2 * (I.K * (I.E - I.K) - I.Ep * I.Kp) / d;
    const Real im = k2 * (I.Kp * (I.E - I.K) + I.Ep * I.K) / d;
    return {re, detail::branch_sign<Real>(branch) * im};
}

/// Complex Z(x, k) for real k > 1.
template <std::floating_point Real>
ComplexValue<Real> zeta_large_real(Real x, Real k, Branch branch = Branch::lower)
{
    detail::require_finite(x, "zeta_large_real", "x");
    detail::require_large_real(k, "zeta_large_real");
    const auto I = detail::LargeRealIntegrals<Real>::at(k);
    const Real k2 = k * k;
    const Real d = I.denominator();
    const Real b = I.bracket();
    const Real re = k * detail::zeta(k * x, detail::reciprocal_modulus(k)) + k2 * I.Kp * I.Kp * b / d * x;
    const Real im = -detail::branch_sign<Real>(branch) * k2 * I.K * I.Kp * b / d * x;
    return {re, im};
}

/// K(k) and E(k) continued to real k > 1:
///   K(k) = [K(1/k) -/+ i K(1/k')] / k
///   E(k) = k [E(1/k) - K(1/k)/k'^2] +/- i k [E(1/k') - K(1/k')/k^2]
/// Upper signs are Branch::lower, so that E/K matches ek_ratio_large_real.
template <std::floating_point Real>
ContinuedPair<Real> k_e_continued(Real k, Branch branch = Branch::lower)
{
    detail::require_large_real(k, "k_e_continued");
    const auto I = detail::LargeRealIntegrals<Real>::at(k);
    const Real s = detail::branch_sign<Real>(branch);
    const Real inv_kprime2 = (k - 1) * (k + 1) / (k * k);
    return {
        {I.K / k, -s * I.Kp / k},
        {k * (I.E - inv_kprime2 * I.K), s * k * (I.Ep - I.Kp / (k * k))},
    };
}

/// K(ik) = k1' K(k1) and E(ik) = E(k1) / k1'.
template <std::floating_point Real>
EllipticPair<Real> complete_pair_imaginary(Real k)
{
    detail::require_positive_imaginary(k, "complete_pair_imaginary");
    const auto m = detail::imaginary_equivalent(k);
    return {m.kc * detail::complete_k(m), detail::complete_e(m) / m.kc};
}

/// E(ik)/K(ik) = E(k1) / (k1'^2 K(k1)).
template <std::floating_point Real>
Real ek_ratio_imaginary(Real k)
{
    detail::require_positive_imaginary(k, "ek_ratio_imaginary");
    const auto m = detail::imaginary_equivalent(k);
    return detail::complete_e(m) / (m.kc2() * detail::complete_k(m));
}

/// eps(x, ik) for k > 0.
template <std::floating_point Real>
Real epsilon_imaginary(Real x, Real k)
{
    detail::require_finite(x, "epsilon_imaginary", "x");
    detail::require_positive_imaginary(k, "epsilon_imaginary");
    const auto m = detail::imaginary_equivalent(k);
    const Real ratio = detail::complete_e(m) / (m.kc2() * detail::complete_k(m));
    return ratio * x + detail::zeta_shift_quarter_period(x / m.kc, m) / m.kc;
}

/// Z(x, ik) for k > 0; real-valued.
template <std::floating_point Real>
Real zeta_imaginary(Real x, Real k)
{
    detail::require_finite(x, "zeta_imaginary", "x");
    detail::require_positive_imaginary(k, "zeta_imaginary");
    const auto m = detail::imaginary_equivalent(k);
    return detail::zeta_shift_quarter_period(x / m.kc, m) / m.kc;
}

/// E(k)/K(k) for any regime; the standard-regime value at |k| = 1 is the
/// limit 0, matching Z(x, 1) = eps(x, 1).
template <std::floating_point Real>
ComplexValue<Real> ek_ratio_any(const Modulus<Real>& m, Branch branch = Branch::lower)
{
    switch (m.regime()) {
    case Regime::standard: {
        const auto pair = detail::ModulusPair<Real>::from_modulus(m.magnitude(), "ek_ratio_any");
        if (pair.kc == 0)
            return {Real(0), Real(0)};
        return {detail::complete_e(pair) / detail::complete_k(pair), Real(0)};
    }
    case Regime::large_real: return ek_ratio_large_real(m.magnitude(), branch);
    case Regime::pure_imaginary: return {ek_ratio_imaginary(m.magnitude()), Real(0)};
    }
    throw DomainError("ek_ratio_any: unknown regime");
}

template <std::floating_point Real>
Real epsilon_any(Real x, const Modulus<Real>& m)
{
    switch (m.regime()) {
    case Regime::standard: return epsilon(x, m.magnitude());
    case Regime::large_real: return epsilon_large_real(x, m.magnitude());
    case Regime::pure_imaginary: return epsilon_imaginary(x, m.magnitude());
    }
    throw DomainError("epsilon_any: unknown regime");
}

/// Z in any regime; the imaginary part is zero except for large-real moduli.
template <std::floating_point Real>
ComplexValue<Real> zeta_any(Real x, const Modulus<Real>& m, Branch branch = Branch::lower)
{
    switch (m.regime()) {
    case Regime::standard: return {zeta(x, m.magnitude()), Real(0)};
    case Regime::large_real: return zeta_large_real(x, m.magnitude(), branch);
    case Regime::pure_imaginary: return {zeta_imaginary(x, m.magnitude()), Real(0)};
    }
    throw DomainError("zeta_any: unknown regime");
}

}  // namespace epszeta
