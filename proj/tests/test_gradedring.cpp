#include <doctest.h>

#include "covmf/error.hpp"
#include "covmf/gradedring.hpp"
#include "testutil.hpp"

using namespace covmf;

namespace {

const Ring kP2Ring{1, 3, false, 1};
const Ring kP3Ring{1, 4, false, 1};

BaseVariety quadric_surface() {
    return BaseVariety::complete_intersection(
        3, {parse_poly(kP3Ring, "x0^2 + x1^2 + x2^2 + x3^2", true)});
}

BaseVariety plane_cubic() {
    return BaseVariety::complete_intersection(2,
                                              {parse_poly(kP2Ring, "x0^3 + x1^3 + x2^3", true)});
}

} // namespace

TEST_CASE("graded piece dimensions") {
    CHECK(quotient_basis(BaseVariety::projective_space(2), 2).dim() == 6);
    CHECK(quotient_basis(quadric_surface(), 2).dim() == 9);  // 10 - 1
    CHECK(quotient_basis(plane_cubic(), 3).dim() == 9);      // 10 - 1
    CHECK_THROWS_AS(quotient_basis(BaseVariety::projective_space(2), -1), Error);
}

TEST_CASE("reducing a basis monomial gives a unit coordinate vector") {
    for (const BaseVariety& v : {quadric_surface(), plane_cubic()}) {
        GradedPiece piece(v, 3);
        for (std::size_t k = 0; k < piece.dim(); ++k) {
            auto coords = piece.reduce(piece.basis()[k]);
            for (std::size_t j = 0; j < coords.size(); ++j) {
                if (j == k)
                    CHECK(coords[j].is_one());
                else
                    CHECK(coords[j].is_zero());
            }
        }
    }
}

TEST_CASE("multiplication-map images on projective space") {
    auto p1 = BaseVariety::projective_space(1);
    auto img = multmap_image(p1, 1, 2);
    CHECK(img.image_dim() == 3);
    CHECK(img.target_dim() == 3);

    auto p2 = BaseVariety::projective_space(2);
    for (int d = 2; d <= 3; ++d) {
        auto rep = is_surjective(p2, 1, d);
        CHECK(rep.surjective);
        CHECK(rep.image_dim == binomial(2 + d, 2));
    }
}

TEST_CASE("surjectivity reports") {
    CHECK(is_surjective(BaseVariety::projective_space(3), 2, 3).image_dim == 84);
    CHECK(is_surjective(BaseVariety::projective_space(3), 2, 3).surjective);

    auto rep = is_surjective(quadric_surface(), 1, 2);
    CHECK(rep.surjective);
    CHECK(rep.image_dim == 9);
    CHECK(rep.target_dim == 9);

    auto constants = is_surjective(BaseVariety::projective_space(1), 0, 2);
    CHECK(constants.surjective);
    CHECK(constants.image_dim == 1);
}

TEST_CASE("the documented decompositions come out of the deterministic solver") {
    auto p2 = BaseVariety::projective_space(2);
    auto s = parse_poly(kP2Ring, "x0^2 + x1*x2", true);
    auto dec = decompose_in_image(p2, 1, 2, s);
    REQUIRE(dec.has_value());
    REQUIRE(dec->terms.size() == 2);
    CHECK(format_poly(dec->terms[0][0]) == "x0");
    CHECK(format_poly(dec->terms[0][1]) == "x0");
    CHECK(format_poly(dec->terms[1][0]) == "x1");
    CHECK(format_poly(dec->terms[1][1]) == "x2");
    CHECK(dec->expand() == s);

    Ring p1r{1, 2, false, 1};
    auto p1 = BaseVariety::projective_space(1);
    auto cubes = parse_poly(p1r, "x0^3 + x1^3", true);
    auto dec3 = decompose_in_image(p1, 1, 3, cubes);
    REQUIRE(dec3.has_value());
    CHECK(dec3->expand() == cubes);
    REQUIRE(dec3->terms.size() == 2);
    CHECK(format_poly(dec3->terms[0][0]) == "x0");
    CHECK(format_poly(dec3->terms[1][2]) == "x1");
}

TEST_CASE("decomposition round-trips on random sections") {
    std::mt19937_64 rng(29);
    auto p2 = BaseVariety::projective_space(2);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 20; ++trial) {
            auto s = testutil::random_form(rng, kP2Ring, d);
            auto dec = decompose_in_image(p2, 1, d, s);
            REQUIRE(dec.has_value());
            CHECK(dec->expand() == s);
            CHECK(dec->matches(p2, s));
        }
}

TEST_CASE("decomposition degree errors") {
    auto p2 = BaseVariety::projective_space(2);
    CHECK_THROWS_AS(decompose_in_image(p2, 1, 2, parse_poly(kP2Ring, "x0^3", true)), Error);
}

TEST_CASE("decomposition works modulo the ideal on a complete intersection") {
    auto quadric = quadric_surface();
    // x3^2 = -(x0^2 + x1^2 + x2^2) on the quadric, so this reduces into the image
    auto s = parse_poly(kP3Ring, "x0*x1 + x3^2", true);
    auto dec = decompose_in_image(quadric, 1, 2, s);
    REQUIRE(dec.has_value());
    CHECK(dec->matches(quadric, s)); // equality after reduction, not as raw polynomials
}

TEST_CASE("image monotonicity: products of image elements land in the doubled image") {
    std::mt19937_64 rng(31);
    auto p2 = BaseVariety::projective_space(2);
    auto img2 = multmap_image(p2, 1, 2);
    auto img4 = multmap_image(p2, 1, 4);
    for (int trial = 0; trial < 5; ++trial) {
        // random elements of the degree-2 image (everything is, on P^2)
        auto f = testutil::random_form(rng, kP2Ring, 2);
        auto g = testutil::random_form(rng, kP2Ring, 2);
        REQUIRE(solve_membership(img2.image, img2.target.reduce(f)).has_value());
        REQUIRE(solve_membership(img2.image, img2.target.reduce(g)).has_value());
        CHECK(solve_membership(img4.image, img4.target.reduce(f * g)).has_value());
    }
}

TEST_CASE("elimination certificates") {
    auto x = MultiPoly::variable(kP2Ring, 0);
    auto y = MultiPoly::variable(kP2Ring, 1);
    auto z = MultiPoly::variable(kP2Ring, 2);

    auto coords = elimination_certificate({x, y, z}, 4);
    REQUIRE(coords.has_value());
    CHECK(*coords == 1);

    auto squares = elimination_certificate({x * x, y * y, z * z}, 6);
    REQUIRE(squares.has_value());
    CHECK(*squares == 4); // the degree-3 piece misses x0*x1*x2

    Ring p1r{1, 2, false, 1};
    auto u = MultiPoly::variable(p1r, 0);
    CHECK_FALSE(elimination_certificate({u, u * u}, 8).has_value()); // common zero (0:1)
}

TEST_CASE("elimination certificate soundness re-check") {
    // when a certificate is returned, an independent rank computation confirms
    // that the span of multiples fills the whole degree piece
    auto x = MultiPoly::variable(kP2Ring, 0);
    auto y = MultiPoly::variable(kP2Ring, 1);
    auto z = MultiPoly::variable(kP2Ring, 2);
    std::vector<MultiPoly> forms = {x * x, y * y, z * z};
    auto cert = elimination_certificate(forms, 6);
    REQUIRE(cert.has_value());
    const int D = *cert;

    auto all = monomials_of_degree(3, D);
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < all.size(); ++i) idx.emplace(all[i].exponents, i);
    std::vector<std::vector<CycloScalar>> rows;
    for (const auto& f : forms) {
        for (const auto& m : monomials_of_degree(3, D - f.weighted_degree())) {
            std::vector<CycloScalar> row(all.size(), CycloScalar::zero(1));
            for (const auto& [e, c] : f.terms()) {
                std::vector<int> prod(e);
                for (int i = 0; i < 3; ++i) prod[i] += m.exponents[i];
                row[idx.at(prod)] = c;
            }
            rows.push_back(std::move(row));
        }
    }
    RrefAccumulator acc(all.size(), 1);
    for (auto& row : rows) acc.add_row(std::move(row));
    CHECK(acc.rank() == all.size());
}

TEST_CASE("decomposition and smoothness certificates do not contradict each other") {
    // when a branch section decomposes, the tuple entries together with the
    // partial derivatives of s admit an emptiness certificate exactly when the
    // divisor is base-point-free / smooth; on a smooth conic both hold
    auto p2 = BaseVariety::projective_space(2);
    auto s = parse_poly(kP2Ring, "x0^2 + x1*x2", true);
    auto dec = decompose_in_image(p2, 1, 2, s);
    REQUIRE(dec.has_value());

    std::vector<MultiPoly> jacobian;
    for (int i = 0; i < 3; ++i) jacobian.push_back(s.partial_derivative(i));
    auto smooth = elimination_certificate(jacobian, 4);
    REQUIRE(smooth.has_value());
    CHECK(*smooth == 1); // {2*x0, x2, x1} already span the linear forms

    std::vector<MultiPoly> entries;
    for (const auto& tuple : dec->terms)
        for (const auto& f : tuple) entries.push_back(f);
    CHECK(elimination_certificate(entries, 4).has_value()); // base-point-free

    // a singular divisor is caught: s = x0^2 has a positive-dimensional
    // singular locus, and its Jacobian never generates a full degree piece
    auto singular = parse_poly(kP2Ring, "x0^2", true);
    std::vector<MultiPoly> bad;
    for (int i = 0; i < 3; ++i) {
        auto d = singular.partial_derivative(i);
        if (!d.is_zero()) bad.push_back(d);
    }
    CHECK_FALSE(elimination_certificate(bad, 6).has_value());
}

TEST_CASE("partial derivatives") {
    auto s = parse_poly(kP2Ring, "x0^2 + x1*x2", true);
    CHECK(format_poly(s.partial_derivative(0)) == "2*x0");
    CHECK(format_poly(s.partial_derivative(1)) == "x2");
    CHECK(s.partial_derivative(0).partial_derivative(1).is_zero());
}

TEST_CASE("variety validation") {
    CHECK_THROWS_AS(BaseVariety::complete_intersection(
                        2, {parse_poly(kP2Ring, "x0 + x1^2")}),
                    Error); // not homogeneous
    CHECK_THROWS_AS(BaseVariety::complete_intersection(
                        2, {parse_poly(kP2Ring, "x0", true), parse_poly(kP2Ring, "x1", true)}),
                    Error); // dimension would drop below 1
}
