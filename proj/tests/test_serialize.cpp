#include <doctest.h>

#include "covmf/error.hpp"
#include "covmf/serialize.hpp"
#include "testutil.hpp"

using namespace covmf;
using nlohmann::json;

TEST_CASE("base variety round trip") {
    auto p2 = base_variety_from_json(json::parse(R"({"kind":"P","N":2})"));
    CHECK(p2.is_projective_space());
    CHECK(p2.ambient_dim() == 2);
    CHECK(to_json(p2) == json::parse(R"({"kind":"P","N":2})"));

    auto ci = base_variety_from_json(
        json::parse(R"({"kind":"CI","N":3,"forms":["x0^2 + x1^2 + x2^2 + x3^2"]})"));
    CHECK_FALSE(ci.is_projective_space());
    CHECK(ci.forms().size() == 1);
    auto round = base_variety_from_json(to_json(ci));
    CHECK(round.forms()[0] == ci.forms()[0]);

    CHECK_THROWS_AS(base_variety_from_json(json::parse(R"({"kind":"X","N":2})")), Error);
}

TEST_CASE("decomposition JSON matches the documented shape") {
    auto p2 = BaseVariety::projective_space(2);
    auto s = parse_poly(p2.ring(), "x0^2 + x1*x2", true);
    auto dec = decompose_in_image(p2, 1, 2, s);
    REQUIRE(dec.has_value());
    json j = to_json(*dec);
    CHECK(j == json::parse(R"({"d":2,"n":1,"terms":[["x0","x0"],["x1","x2"]]})"));

    auto back = decomposition_from_json(j, p2.ring());
    CHECK(back.expand() == dec->expand());
}

TEST_CASE("matrix root round trip preserves verification") {
    std::mt19937_64 rng(51);
    Ring p2r{1, 3, false, 1};
    auto a = testutil::random_form(rng, p2r, 1);
    auto b = testutil::random_form(rng, p2r, 1);
    ProductDecomposition dec{2, 1, {{a, b}}};
    MatrixRoot root = clifford_root(dec);

    json j = to_json(root);
    CHECK(j.at("d") == 2);
    CHECK(j.at("size") == 4);
    CHECK(j.at("field_order") == 2);
    MatrixRoot back = matrix_root_from_json(j);
    CHECK(back.q == root.q);
    CHECK(back.target == root.target);
    CHECK(verify_root(back).ok());
}

TEST_CASE("roots with a cofactor pair round trip") {
    Ring p1r{1, 2, false, 1};
    auto a = parse_poly(p1r, "x0 + x1", true);
    auto b = parse_poly(p1r, "x0 - x1", true);
    MatrixRoot root = double_cover_root(a, b);
    MatrixRoot back = matrix_root_from_json(to_json(root));
    REQUIRE(back.cofactor.has_value());
    CHECK(verify_root(back).ok());
    CHECK(back.rank() == 1);
}

TEST_CASE("variable count is inferred when a hand-written file omits it") {
    json j = json::parse(R"({
      "d": 2, "size": 2, "n": 1, "field_order": 2, "term_count": 1,
      "entries": [["T", "x0"], ["x1", "T"]],
      "cofactor_entries": [["T", "- x0"], ["- x1", "T"]],
      "target": "T^2 - x0*x1"
    })");
    MatrixRoot root = matrix_root_from_json(j);
    CHECK(root.q.ring().num_vars == 2);
    CHECK(verify_root(root).ok());
}

TEST_CASE("certificate round trip") {
    auto p2 = BaseVariety::projective_space(2);
    auto s = parse_poly(p2.ring(), "x0^2 + x1*x2", true);
    UlrichResult res = ulrich_certificate(p2, 1, 2, s, 2, 0);
    REQUIRE(res.status == UlrichStatus::Verified);
    json j = to_json(*res.certificate);
    CHECK(j.at("format_version") == "1");
    UlrichCertificate back = certificate_from_json(j);
    CHECK(back.rank == 4);
    CHECK(back.verified);
    CHECK(verify_root(back.root).ok());
    CHECK(back.decomposition.expand() == res.certificate->decomposition.expand());
}

TEST_CASE("cover specs parse the documented format") {
    auto spec = cover_spec_from_json(
        json::parse(R"({"stages":[{"d":2,"m_deg":1},{"d":3,"m_deg":2}]})"));
    REQUIRE(spec.stages.size() == 2);
    CHECK(spec.stages[0].d == 2);
    CHECK(spec.stages[1].m_deg == 2);
    CHECK(spec.total_degree() == 6);
    auto round = cover_spec_from_json(to_json(spec));
    CHECK(round.stages.size() == 2);
}

TEST_CASE("unknown format versions are rejected") {
    json j = json::parse(R"({"format_version":"2","stages":[]})");
    CHECK_THROWS_AS(cover_spec_from_json(j), Error);
}
