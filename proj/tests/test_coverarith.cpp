#include <doctest.h>

#include <random>
#include <set>

#include "covmf/coverarith.hpp"
#include "covmf/error.hpp"

using namespace covmf;

namespace {
AbelianCoverSpec make_spec(std::vector<int> degrees) {
    AbelianCoverSpec spec;
    for (int d : degrees) spec.stages.push_back(CoverStage{d, 1, std::nullopt, std::nullopt});
    return spec;
}
} // namespace

TEST_CASE("pushforward summands") {
    auto cyclic3 = pushforward_summands(make_spec({3}));
    REQUIRE(cyclic3.size() == 3);
    CHECK(cyclic3[0].exponents == std::vector<int>{0});
    CHECK(cyclic3[1].exponents == std::vector<int>{-1});
    CHECK(cyclic3[2].exponents == std::vector<int>{-2});

    auto two_two = pushforward_summands(make_spec({2, 2}));
    REQUIRE(two_two.size() == 4);
    std::set<std::vector<int>> got;
    for (const auto& s : two_two) got.insert(s.exponents);
    std::set<std::vector<int>> want = {{0, 0}, {-1, 0}, {0, -1}, {-1, -1}};
    CHECK(got == want);

    CHECK(pushforward_summands(make_spec({2, 3})).size() == 6);
}

TEST_CASE("Riemann-Hurwitz arithmetic") {
    auto ex = riemann_hurwitz(1, 2, 2);
    CHECK(ex.g_top == 2);
    CHECK(ex.g_top == 2 * ex.g_base);
    CHECK(ex.identity_holds());

    auto etale = riemann_hurwitz(2, 3, 0);
    CHECK(etale.g_top == 4);
    CHECK(etale.identity_holds());

    CHECK_THROWS_AS(riemann_hurwitz(0, 2, 1), Error); // parity violation
    CHECK_THROWS_AS(riemann_hurwitz(0, 2, 0), Error); // no etale cover of P^1
}

TEST_CASE("the documented feasibility verdicts") {
    SUBCASE("etale triple cover of a genus-2 curve") {
        auto rep = feasibility_report(riemann_hurwitz(2, 3, 0), 1);
        CHECK(rep.verdict == FeasibilityVerdict::InfeasibleEtale);
        CHECK(rep.forced_degree == 0);
        CHECK(rep.required_h0 == 3);
        REQUIRE(rep.h0_bound.has_value());
        CHECK(*rep.h0_bound == 1);
    }
    SUBCASE("double cover of an elliptic curve with deg M = 1") {
        auto rep = feasibility_report(riemann_hurwitz(1, 2, 2), 1);
        CHECK(rep.verdict == FeasibilityVerdict::InfeasibleH0);
        CHECK(rep.forced_degree == 1);
        CHECK(rep.required_h0 == 2);
        REQUIRE(rep.h0_bound.has_value());
        CHECK(*rep.h0_bound == 1);
        CHECK(rep.narrative.find("at most 1") != std::string::npos);
    }
    SUBCASE("hyperelliptic double cover of P^1 is not excluded") {
        auto rep = feasibility_report(riemann_hurwitz(0, 2, 4), 1);
        CHECK(rep.verdict == FeasibilityVerdict::Feasible);
    }
}

TEST_CASE("etale specs over positive genus are never feasible") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> genus(1, 8);
    std::uniform_int_distribution<int> degree(2, 6);
    std::uniform_int_distribution<int> rank(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        auto arith = riemann_hurwitz(genus(rng), degree(rng), 0);
        CHECK(arith.identity_holds());
        auto rep = feasibility_report(arith, rank(rng));
        CHECK(rep.verdict == FeasibilityVerdict::InfeasibleEtale);
        CHECK(rep.forced_degree == 0); // degree formula, etale case
    }
}

TEST_CASE("forced degree matches the chi computation on ramified examples") {
    // branch degree 2 over genus 1: forced degree 1
    auto rep = feasibility_report(riemann_hurwitz(1, 2, 2), 1);
    CHECK(rep.forced_degree == 1);
    // the general shape: r * ramification / 2
    for (int g = 0; g <= 3; ++g)
        for (int bdeg = 2; bdeg <= 6; bdeg += 2) {
            auto arith = riemann_hurwitz(g, 2, bdeg);
            for (int r = 1; r <= 3; ++r) {
                auto fr = feasibility_report(arith, r);
                CHECK(fr.forced_degree == r * arith.ramification_degree / 2);
            }
        }
}

TEST_CASE("composition plans multiply stage ranks") {
    auto spec22 = make_spec({2, 2});
    auto plan22 = compose_abelian_plan(spec22, {1, 1});
    CHECK(plan22.total_rank == 1);

    auto spec23 = make_spec({2, 3});
    auto plan23 = compose_abelian_plan(spec23, {2, 1});
    CHECK(plan23.total_rank == 12); // 2^2 * 3^1

    auto single = compose_abelian_plan(make_spec({3}), {2});
    CHECK(single.total_rank == 9); // matches the d^r certificate rank

    CHECK_THROWS_AS(compose_abelian_plan(spec22, {1}), Error);
    CHECK_THROWS_AS(compose_abelian_plan(spec22, {1, 0}), Error);
}

TEST_CASE("total rank is invariant under re-grouping of stages") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> degree(2, 5);
    std::uniform_int_distribution<int> terms(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> ds = {degree(rng), degree(rng), degree(rng)};
        std::vector<int> rs = {terms(rng), terms(rng), terms(rng)};
        auto whole = compose_abelian_plan(make_spec(ds), rs);
        // split as (first) * (last two)
        auto head = compose_abelian_plan(make_spec({ds[0]}), {rs[0]});
        auto tail = compose_abelian_plan(make_spec({ds[1], ds[2]}), {rs[1], rs[2]});
        CHECK(whole.total_rank == head.total_rank * tail.total_rank);
    }
}

TEST_CASE("summand counts over random specs") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> len(1, 3);
    std::uniform_int_distribution<int> degree(2, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> ds;
        int l = len(rng);
        for (int i = 0; i < l; ++i) ds.push_back(degree(rng));
        auto spec = make_spec(ds);
        auto summands = pushforward_summands(spec);
        CHECK(mpz_class(summands.size()) == spec.total_degree());
    }
}
