#include <doctest.h>

#include "covmf/cyclotomic.hpp"
#include "covmf/error.hpp"
#include "testutil.hpp"

using namespace covmf;

TEST_CASE("cyclotomic polynomials: base cases") {
    CHECK(cyclotomic_polynomial(1).str() == "z - 1");
    CHECK(cyclotomic_polynomial(2).str() == "z + 1");
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("Phi_4 equals (z^4 - 1) / (Phi_1 * Phi_2)") {
    // independent route: divide z^4 - 1 by the two proper factors
    std::vector<Rational> c(5);
    c[0] = Rational(-1);
    c[4] = Rational(1);
    UniPoly z4m1(std::move(c));
    auto [q1, r1] = z4m1.divmod(cyclotomic_polynomial(1));
    REQUIRE(r1.is_zero());
    auto [q2, r2] = q1.divmod(cyclotomic_polynomial(2));
    REQUIRE(r2.is_zero());
    CHECK(q2 == cyclotomic_polynomial(4));
    CHECK(q2.str() == "z^2 + 1");
}

TEST_CASE("product of Phi_e over divisors of d is z^d - 1") {
    for (int d = 1; d <= 12; ++d) {
        UniPoly prod = UniPoly::constant(Rational(1));
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) prod = prod * cyclotomic_polynomial(e);
        std::vector<Rational> c(d + 1);
        c[0] = Rational(-1);
        c[d] = Rational(1);
        CHECK(prod == UniPoly(std::move(c)));
    }
}

TEST_CASE("orders 1 and 2 collapse to plain Q") {
    CHECK(CycloScalar::zeta(1).is_one());
    CHECK(CycloScalar::zeta(2) == CycloScalar::from_rational(2, Rational(-1)));
    CHECK(CycloScalar::zeta(2).coeffs().size() == 1);
    CHECK(CycloScalar::zeta(1).is_rational());
}

TEST_CASE("zeta arithmetic matches the defining relations") {
    auto z4 = CycloScalar::zeta(4);
    CHECK((z4 * z4).coeffs() == std::vector<Rational>{Rational(-1), Rational(0)});

    auto m1 = CycloScalar::zeta(2);
    CHECK((m1 * m1).is_one());

    auto z3 = CycloScalar::zeta(3);
    CHECK(z3.inverse() == CycloScalar(3, {Rational(-1), Rational(-1)}));
    CHECK((z3.inverse() * z3).is_one());
}

TEST_CASE("zeta_d is a primitive d-th root, and the d-th roots sum to zero") {
    for (int d = 1; d <= 12; ++d) {
        auto z = CycloScalar::zeta(d);
        CHECK(z.pow(static_cast<unsigned long>(d)).is_one());
        for (int k = 1; k < d; ++k)
            CHECK_FALSE(z.pow(static_cast<unsigned long>(k)).is_one());
        if (d >= 2) {
            CycloScalar sum = CycloScalar::zero(d);
            for (int k = 0; k < d; ++k) sum += z.pow(static_cast<unsigned long>(k));
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("random nonzero scalars invert exactly") {
    std::mt19937_64 rng(17);
    for (int d = 1; d <= 12; ++d)
        for (int trial = 0; trial < 20; ++trial) {
            auto a = testutil::random_nonzero_scalar(rng, d);
            CHECK((a * a.inverse()).is_one());
        }
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    std::mt19937_64 rng(23);
    Rational acc(1);
    for (int i = 0; i < 200; ++i) {
        Rational r = testutil::random_rational(rng, 30, 17);
        switch (i % 4) {
            case 0: acc += r; break;
            case 1: acc -= r; break;
            case 2: acc *= r; break;
            default:
                if (!r.is_zero()) acc = acc / r;
                break;
        }
        CHECK(acc.denominator() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), acc.numerator().get_mpz_t(), acc.denominator().get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("scalar errors") {
    auto a = CycloScalar::zeta(3);
    auto b = CycloScalar::zeta(4);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS(CycloScalar::zero(5).inverse(), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
    // rational-valued scalars embed across orders
    auto two = CycloScalar::from_rational(4, Rational(2));
    CHECK((a * two) == a + a);
}

TEST_CASE("scalar text form round-trips through the documented format") {
    CHECK(CycloScalar(3, {Rational(1, 2), Rational(-3)}).str() == "1/2 - 3*z");
    CHECK(CycloScalar::zero(4).str() == "0");
    CHECK(CycloScalar(5, {Rational(0), Rational(1), Rational(0), Rational(2)}).str() ==
          "z + 2*z^3");
}
