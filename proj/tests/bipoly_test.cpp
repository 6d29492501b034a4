#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "icosa/bipoly.hpp"

using icosa::BigInt;
using icosa::BiPoly;
using icosa::GoldenInt;
using icosa::GoldenRational;
using icosa::pk;
using icosa::pk_product;
using icosa::tk;
using icosa::tk_at;
using icosa::to_p_basis;
using icosa::Var;

namespace {

const BiPoly kX = BiPoly::variable(Var::X);
const BiPoly kY = BiPoly::variable(Var::Y);

}  // namespace

TEST_CASE("canonical form never stores zeros") {
    BiPoly f = kX * kY - kY * kX;
    CHECK(f.is_zero());
    CHECK(f.total_degree() == BiPoly::kZeroDegree);
    BiPoly g = (kX + kY) * (kX - kY);
    CHECK(g == kX * kX - kY * kY);
    CHECK(g.coeff(1, 1) == GoldenRational(0));
    CHECK(g.terms().size() == 2);
    g += kY * kY;
    CHECK(g.terms().size() == 1);
    CHECK(g.total_degree() == 2);
}

TEST_CASE("degree bookkeeping") {
    BiPoly f = BiPoly::monomial(3, 2, 1) + BiPoly::monomial(1, 4, GoldenRational::phi());
    CHECK(f.total_degree() == 5);
    CHECK(f.degree_in(Var::X) == 3);
    CHECK(f.degree_in(Var::Y) == 4);
    CHECK(BiPoly(7).total_degree() == 0);
    CHECK(BiPoly().degree_in(Var::X) == BiPoly::kZeroDegree);
    CHECK(kX.uses_only(Var::X));
    CHECK_FALSE(kX.uses_only(Var::Y));
    CHECK(BiPoly(5).uses_only(Var::X));
    CHECK(BiPoly(5).uses_only(Var::Y));
}

TEST_CASE("arithmetic matches evaluation on sample points") {
    std::vector<GoldenRational> points = {GoldenRational(0), GoldenRational(1), GoldenRational(-2),
                                          GoldenRational::phi(),
                                          GoldenRational(GoldenInt{BigInt(1), BigInt(2)})};
    BiPoly f = kX * kX * kY - GoldenRational(3) * kY + BiPoly(1);
    BiPoly g = kY * kY + GoldenRational::phibar() * kX;
    for (const auto& u : points)
        for (const auto& v : points) {
            CHECK((f + g).eval(u, v) == f.eval(u, v) + g.eval(u, v));
            CHECK((f - g).eval(u, v) == f.eval(u, v) - g.eval(u, v));
            CHECK((f * g).eval(u, v) == f.eval(u, v) * g.eval(u, v));
            CHECK(f.pow(3).eval(u, v) == f.eval(u, v).pow(3));
        }
}

TEST_CASE("substitution composes with evaluation") {
    BiPoly f = kX * kY + kX - BiPoly(2);
    BiPoly fx = kX + kY;
    BiPoly fy = kX * kY - BiPoly(1);
    BiPoly composed = f.subst(fx, fy);
    GoldenRational u(3), v(-2);
    CHECK(composed.eval(u, v) == f.eval(fx.eval(u, v), fy.eval(u, v)));
    // Swapping the variables twice is the identity.
    CHECK(f.subst(kY, kX).subst(kY, kX) == f);
}

TEST_CASE("coefficient conjugation is an involution commuting with products") {
    BiPoly f = GoldenRational::phi() * kX + GoldenRational(GoldenInt{BigInt(2), BigInt(-3)}) * kY;
    BiPoly g = GoldenRational::phibar() * kX * kY + BiPoly(4);
    CHECK(f.conj_coeffs().conj_coeffs() == f);
    CHECK((f * g).conj_coeffs() == f.conj_coeffs() * g.conj_coeffs());
    CHECK(f.conj_coeffs().coeff(1, 0) == GoldenRational::phibar());
}

TEST_CASE("printing is stable and graded") {
    CHECK(BiPoly().str() == "0");
    CHECK((kX * kX - BiPoly(1)).str() == "x^2 - 1");
    CHECK((kX - kY).str() == "x - y");
    BiPoly f = GoldenRational::phi() * kX + BiPoly(1);
    CHECK(f.str() == "(phi)*x + 1");
    CHECK((-kX).str() == "-x");
}

TEST_CASE("symmetric-power polynomials") {
    CHECK(pk(0) == BiPoly(1));
    CHECK(pk(1) == kX);
    CHECK(pk(2) == kX * kX - BiPoly(1));
    CHECK(pk(3) == kX * kX * kX - GoldenRational(2) * kX);
    CHECK(pk(4) == kX.pow(4) - GoldenRational(3) * kX.pow(2) + BiPoly(1));
    CHECK(pk(5) == kX.pow(5) - GoldenRational(4) * kX.pow(3) + GoldenRational(3) * kX);
    CHECK(pk(3, Var::Y) == kY * kY * kY - GoldenRational(2) * kY);

    SUBCASE("degree and parity") {
        for (long k = 0; k <= 40; ++k) {
            CHECK(pk(k).total_degree() == k);
            CHECK(pk(k).uses_only(Var::X));
            // P_k(-v) = (-1)^k P_k(v).
            BiPoly flipped = pk(k).subst(-kX, kY);
            CHECK(flipped == (k % 2 == 0 ? pk(k) : -pk(k)));
        }
    }
    SUBCASE("values at the rational sample points") {
        for (long k = 0; k <= 40; ++k) {
            CHECK(pk(k).eval(GoldenRational(2), 0) == GoldenRational(k + 1));
            long sign = k % 2 == 0 ? 1 : -1;
            CHECK(pk(k).eval(GoldenRational(-2), 0) == GoldenRational(sign * (k + 1)));
            long mod6[6] = {1, 1, 0, -1, -1, 0};
            CHECK(pk(k).eval(GoldenRational(1), 0) == GoldenRational(mod6[k % 6]));
            long mod4[4] = {1, 0, -1, 0};
            CHECK(pk(k).eval(GoldenRational(0), 0) == GoldenRational(mod4[k % 4]));
        }
    }
    SUBCASE("golden sample points cycle with period 10") {
        GoldenRational phi = GoldenRational::phi();
        for (long k = 0; k <= 30; ++k)
            CHECK(pk(k + 10).eval(phi, 0) == pk(k).eval(phi, 0));
    }
}

TEST_CASE("power-trace polynomials") {
    CHECK(tk(0) == BiPoly(2));
    CHECK(tk(1) == kX);
    CHECK(tk(2) == kX * kX - BiPoly(2));
    for (long k = 2; k <= 20; ++k) CHECK(tk(k) == pk(k) - pk(k - 2));
    SUBCASE("tk_at agrees with polynomial evaluation") {
        std::vector<GoldenInt> points = {GoldenInt(0),          GoldenInt(3), GoldenInt(-2),
                                         GoldenInt::phi(),      -GoldenInt::phibar(),
                                         GoldenInt{BigInt(2), BigInt(5)}};
        for (const auto& u : points)
            for (long k = 0; k <= 16; ++k)
                CHECK(GoldenRational(tk_at(k, u)) == tk(k).eval(GoldenRational(u), 0));
    }
    SUBCASE("trace recurrences respect the two-power identity t_{2k} = t_k^2 - 2") {
        GoldenInt u{BigInt(1), BigInt(1)};
        for (long k = 1; k <= 8; ++k)
            CHECK(tk_at(2 * k, u) == tk_at(k, u) * tk_at(k, u) - GoldenInt(2));
    }
}

TEST_CASE("product expansion in the P-basis") {
    for (long a = 0; a <= 10; ++a)
        for (long b = 0; b <= 10; ++b) {
            auto indices = pk_product(a, b);
            REQUIRE(indices.size() == static_cast<std::size_t>(std::min(a, b) + 1));
            CHECK(indices.front() == a + b);
            CHECK(indices.back() == std::labs(a - b));
            BiPoly sum;
            for (long c : indices) sum += pk(c);
            CHECK(pk(a) * pk(b) == sum);
        }
}

TEST_CASE("change of basis to the P-basis and back") {
    SUBCASE("monomials") {
        for (long k = 0; k <= 12; ++k) {
            BiPoly mono = BiPoly::monomial(k, 0, 1);
            auto v = to_p_basis(mono, Var::X);
            REQUIRE(v.c.size() == static_cast<std::size_t>(k + 1));
            CHECK(v.reconstruct() == mono);
            // Leading coefficient in the P-basis is 1 (both bases are monic).
            CHECK(v.c.back() == GoldenRational(1));
        }
    }
    SUBCASE("a dense univariate polynomial") {
        BiPoly f = GoldenRational::phi() * kY.pow(5) - GoldenRational(7, 3) * kY.pow(2) +
                   kY - BiPoly(4);
        auto v = to_p_basis(f, Var::Y);
        CHECK(v.var == Var::Y);
        CHECK(v.reconstruct() == f);
    }
    SUBCASE("known expansions") {
        // x^2 = P_2 + 1, x^3 = P_3 + 2 P_1, x^4 = P_4 + 3 P_2 + 2.
        auto v2 = to_p_basis(kX.pow(2), Var::X);
        CHECK(v2.c == std::vector<GoldenRational>{1, 0, 1});
        auto v3 = to_p_basis(kX.pow(3), Var::X);
        CHECK(v3.c == std::vector<GoldenRational>{0, 2, 0, 1});
        auto v4 = to_p_basis(kX.pow(4), Var::X);
        CHECK(v4.c == std::vector<GoldenRational>{2, 0, 3, 0, 1});
    }
    SUBCASE("wrong variable is rejected") {
        CHECK_THROWS_AS(to_p_basis(kX * kY, Var::X), icosa::WrongVariable);
        CHECK_THROWS_AS(to_p_basis(kX, Var::Y), icosa::WrongVariable);
    }
}
