#include <epszeta/elliptic.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace epszeta;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("complete_k", "[elliptic][K]")
{
    CHECK_THAT(complete_k(0.0), WithinRel(pi / 2, 1e-15));
    CHECK_THAT(complete_k(0.5), WithinRel(oracle::agm_complete(0.5).K, 1e-14));
    CHECK_THAT(complete_k(0.5), WithinRel(rf(0.0, 0.75, 1.0), 1e-15));
    CHECK(complete_k(-0.5) == complete_k(0.5));
    CHECK_THROWS_AS(complete_k(1.0), DomainError);
    CHECK_THROWS_AS(complete_k(-1.0), DomainError);
    CHECK_THROWS_AS(complete_k(1.5), DomainError);

    for (double k : {0.1, 0.3, 0.7, 0.9, 0.99, 0.999999})
        CHECK_THAT(complete_k(k), WithinRel(oracle::agm_complete(k).K, 1e-14));
}

TEST_CASE("complete_e", "[elliptic][E]")
{
    CHECK_THAT(complete_e(0.0), WithinRel(pi / 2, 1e-15));
    CHECK(complete_e(1.0) == 1.0);
    CHECK_THAT(complete_e(0.5), WithinRel(1.4674622093394272, 1e-14));
    const double by_quadrature =
        integrate([](double t) { return std::sqrt(1 - 0.25 * std::sin(t) * std::sin(t)); }, 0.0, pi / 2, 1e-15)
            .value;
    CHECK_THAT(complete_e(0.5), WithinRel(by_quadrature, 1e-14));
    CHECK_THROWS_AS(complete_e(1.0 + 1e-15), DomainError);

    for (double k : {0.1, 0.3, 0.7, 0.9, 0.99})
        CHECK_THAT(complete_e(k), WithinRel(oracle::agm_complete(k).E, 1e-14));
}

TEST_CASE("complete pairs obey the bounds and Legendre's relation", "[elliptic][property]")
{
    for (int i = 1; i <= 9; ++i) {
        const double k = 0.1 * i;
        const double kc = std::sqrt(1 - k * k);
        const auto p = complete_pair(k);
        const auto q = complete_pair(kc);
        CHECK(p.K >= pi / 2);
        CHECK(p.E <= pi / 2);
        CHECK(p.E <= p.K);
        CHECK_THAT(p.E * q.K + q.E * p.K - p.K * q.K, WithinAbs(pi / 2, 1e-12));
    }
}

TEST_CASE("incomplete_e", "[elliptic][E]")
{
    CHECK(incomplete_e(0.0, 0.5) == 0.0);
    CHECK_THAT(incomplete_e(pi / 2, 0.5), WithinRel(complete_e(0.5), 1e-15));
    // mpmath ellipe(0.7, m=0.25)
    CHECK_THAT(incomplete_e(0.7, 0.5), WithinRel(0.68682918035227026, 1e-14));
    const double by_quadrature =
        integrate([](double t) { return std::sqrt(1 - 0.25 * std::sin(t) * std::sin(t)); }, 0.0, 0.7, 1e-15)
            .value;
    CHECK_THAT(incomplete_e(0.7, 0.5), WithinRel(by_quadrature, 1e-14));

    // quasi-periodic extension and oddness
    CHECK_THAT(incomplete_e(4.0, 0.8), WithinRel(3.3489965783627781, 1e-14));
    CHECK_THAT(incomplete_e(0.7 + pi, 0.5), WithinRel(incomplete_e(0.7, 0.5) + 2 * complete_e(0.5), 1e-14));
    CHECK(incomplete_e(-0.7, 0.5) == -incomplete_e(0.7, 0.5));
    CHECK_THAT(incomplete_e(0.9, 1.0), WithinRel(std::sin(0.9), 1e-15));
    CHECK_THROWS_AS(incomplete_e(0.5, 1.2), DomainError);
}

TEST_CASE("amplitude", "[elliptic][am]")
{
    CHECK(amplitude(0.0, 0.5) == 0.0);
    CHECK_THAT(amplitude(complete_k(0.5), 0.5), WithinRel(pi / 2, 1e-14));
    CHECK(amplitude(0.5, 0.0) == 0.5);
    CHECK_THAT(amplitude(0.7, 1.0), WithinRel(std::atan(std::sinh(0.7)), 1e-15));
    // F(am(1.3, 0.8), 0.8) = 1.3, root found by mpmath
    CHECK_THAT(amplitude(1.3, 0.8), WithinRel(1.1325627919276786, 1e-14));
    // continuous branch: am(x + 2K) = am(x) + pi
    const double K = complete_k(0.7);
    CHECK_THAT(amplitude(0.4 + 6 * K, 0.7), WithinAbs(amplitude(0.4, 0.7) + 3 * pi, 1e-12));
}

TEST_CASE("amplitude is monotone and its derivative is dn", "[elliptic][am][property]")
{
    oracle::Uniform draw(21);
    for (double k : {0.0, 0.3, 0.9, 0.999, 1.0}) {
        double previous = amplitude(-20.0, k);
        for (double x = -19.9; x <= 20; x += 0.1) {
            const double current = amplitude(x, k);
            if (k < 1)
                CHECK(current > previous);
            else
                CHECK(current >= previous);
            previous = current;
        }
    }
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const double x = draw(-5, 5), k = draw(0, 0.999);
        const double derivative = (amplitude(x + h, k) - amplitude(x - h, k)) / (2 * h);
        CHECK_THAT(derivative, WithinAbs(sncndn(x, k).dn, 1e-8));
    }
}

TEST_CASE("sncndn", "[elliptic][jacobi]")
{
    const auto origin = sncndn(0.0, 0.7);
    CHECK(origin.sn == 0.0);
    CHECK(origin.cn == 1.0);
    CHECK(origin.dn == 1.0);

    const auto circular = sncndn(0.5, 0.0);
    CHECK(circular.sn == std::sin(0.5));
    CHECK(circular.cn == std::cos(0.5));
    CHECK(circular.dn == 1.0);

    const auto hyperbolic = sncndn(0.5, 1.0);
    CHECK_THAT(hyperbolic.sn, WithinRel(std::tanh(0.5), 1e-15));
    CHECK_THAT(hyperbolic.dn, WithinRel(1 / std::cosh(0.5), 1e-15));
    CHECK_THAT(hyperbolic.cn, WithinRel(1 / std::cosh(0.5), 1e-15));

    // mpmath ellipfun at x = 2.1, m = 0.81
    const auto t = sncndn(2.1, 0.9);
    CHECK_THAT(t.sn, WithinRel(0.99687749872731889, 1e-14));
    CHECK_THAT(t.cn, WithinRel(0.078963615236160045, 1e-13));
    CHECK_THAT(t.dn, WithinRel(0.44164528136304485, 1e-14));

    const auto neg = sncndn(2.1, -0.9);
    CHECK(neg.dn == t.dn);
}

TEST_CASE("Jacobi triple identities and periodicity", "[elliptic][jacobi][property]")
{
    oracle::Uniform draw(22);
    for (int i = 0; i < 200; ++i) {
        const double x = draw(-5, 5), k = draw(0, 0.999);
        const auto t = sncndn(x, k);
        CHECK_THAT(t.sn * t.sn + t.cn * t.cn, WithinAbs(1.0, 1e-12));
        CHECK_THAT(t.dn * t.dn + k * k * t.sn * t.sn, WithinAbs(1.0, 1e-12));
        CHECK(t.dn >= std::sqrt(1 - k * k) - 1e-15);
        CHECK(t.dn <= 1.0);
    }
    for (int i = 0; i < 100; ++i) {
        const double x = draw(-5, 5), k = draw(0, 0.9);
        CHECK_THAT(sncndn(x + 4 * complete_k(k), k).sn, WithinAbs(sncndn(x, k).sn, 1e-10));
    }
}
