#include <doctest.h>

#include "covmf/elliptic.hpp"
#include "covmf/error.hpp"

using namespace covmf;

namespace {
const std::vector<WeierstrassCurve> kCurves = {
    WeierstrassCurve(Rational(1), Rational(1)),  WeierstrassCurve(Rational(0), Rational(1)),
    WeierstrassCurve(Rational(1), Rational(0)),  WeierstrassCurve(Rational(-1), Rational(1)),
    WeierstrassCurve(Rational(2), Rational(3)),
};
} // namespace

TEST_CASE("pole bases have the Riemann-Roch dimensions") {
    auto b2 = pole_basis(2);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == PoleBasisElement{0, 0});
    CHECK(b2[1] == PoleBasisElement{1, 0});

    auto b4 = pole_basis(4);
    REQUIRE(b4.size() == 4);
    CHECK(b4[0].str() == "1");
    CHECK(b4[1].str() == "x");
    CHECK(b4[2].str() == "x^2");
    CHECK(b4[3].str() == "y");

    CHECK(pole_basis(0).size() == 1);
    for (int k = 1; k <= 12; ++k) CHECK(pole_basis(k).size() == static_cast<std::size_t>(k));
}

TEST_CASE("multiplication reduces through the curve equation") {
    WeierstrassCurve c(Rational(2), Rational(5));
    auto x = EllElement::from_basis(PoleBasisElement{1, 0});
    auto y = EllElement::from_basis(PoleBasisElement{0, 1});

    EllElement y2 = ell_multiply(c, y, y);
    EllElement expected;
    expected.add_term(3, 0, Rational(1));
    expected.add_term(1, 0, c.A);
    expected.add_term(0, 0, c.B);
    CHECK(y2 == expected);

    CHECK(ell_multiply(c, x, x) == EllElement::from_basis(PoleBasisElement{2, 0}));

    EllElement xy_plus = ell_multiply(c, x + y, y);
    EllElement want = expected;
    want.add_term(1, 1, Rational(1));
    CHECK(xy_plus == want);
}

TEST_CASE("the 2-fold image misses y on every smooth curve") {
    for (const auto& c : kCurves) {
        auto rep = multmap_image_ell(c, 2, 2);
        CHECK(rep.image_dim() == 3);
        CHECK(rep.target_dim() == 4);
        REQUIRE(rep.cokernel.size() == 1);
        CHECK(rep.cokernel[0] == PoleBasisElement{0, 1});
        CHECK_FALSE(rep.surjective());

        // not-in-image verdict for the generic branch section
        auto s = EllElement::from_basis(PoleBasisElement{0, 1});
        CHECK_FALSE(decompose_in_ell_image(c, 2, 2, s).has_value());
        // but pure polynomials in x are hit
        EllElement poly;
        poly.add_term(0, 0, Rational(3));
        poly.add_term(2, 0, Rational(-7, 2));
        CHECK(decompose_in_ell_image(c, 2, 2, poly).has_value());
    }
}

TEST_CASE("the identity fold and the degree-3 bundle are surjective") {
    WeierstrassCurve c(Rational(1), Rational(1));
    auto one_fold = multmap_image_ell(c, 2, 1);
    CHECK(one_fold.image_dim() == 2);
    CHECK(one_fold.surjective());

    auto deg3 = multmap_image_ell(c, 3, 2);
    CHECK(deg3.image_dim() == 6);
    CHECK(deg3.target_dim() == 6);
    CHECK(deg3.surjective());
}

TEST_CASE("global generation of the degree-2 bundle, stated concretely") {
    // the sections {1, x} span the whole space H^0(L), and the constant
    // section vanishes nowhere; so no point annihilates all sections at once
    auto basis = pole_basis(2);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == PoleBasisElement{0, 0});
    ExactMatrix rows(2, 2, 1);
    for (std::size_t i = 0; i < 2; ++i) {
        auto coords = EllElement::from_basis(basis[i]).coordinates(2);
        for (std::size_t j = 0; j < 2; ++j) rows.at(i, j) = coords[j];
    }
    CHECK(rref(rows).rank == 2);
    CHECK(EllElement::from_basis(basis[0]).coordinates(2)[0].is_one());
}

TEST_CASE("singular curves are rejected") {
    CHECK_THROWS_AS(WeierstrassCurve(Rational(0), Rational(0)), Error);
    CHECK_THROWS_AS(WeierstrassCurve(Rational(-3), Rational(2)), Error);
}

TEST_CASE("pole order bookkeeping") {
    EllElement e;
    e.add_term(2, 1, Rational(1));
    CHECK(e.pole_order() == 7);
    CHECK_THROWS_AS(e.coordinates(6), Error);
    CHECK(e.coordinates(7).size() == pole_basis(7).size());
    CHECK_THROWS_AS(e.add_term(0, 2, Rational(1)), Error);
}
