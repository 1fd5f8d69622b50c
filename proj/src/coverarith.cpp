#include "covmf/coverarith.hpp"

#include <sstream>

#include "covmf/error.hpp"

namespace covmf {

mpz_class AbelianCoverSpec::total_degree() const {
    mpz_class total = 1;
    for (const auto& s : stages) total *= s.d;
    return total;
}

std::vector<Summand> pushforward_summands(const AbelianCoverSpec& spec) {
    for (const auto& s : spec.stages)
        if (s.d < 2) raise(Errc::InvalidVariety, "cyclic stage needs degree >= 2");
    std::vector<Summand> out;
    std::vector<int> twist(spec.stages.size(), 0);
    while (true) {
        Summand s;
        s.exponents.reserve(twist.size());
        for (int k : twist) s.exponents.push_back(-k);
        out.push_back(std::move(s));
        // next tuple, last index fastest
        int i = static_cast<int>(twist.size()) - 1;
        while (i >= 0) {
            if (++twist[i] < spec.stages[i].d) break;
            twist[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

CurveCoverArithmetic riemann_hurwitz(int g_base, int d, int branch_degree) {
    if (g_base < 0) raise(Errc::NegativeGenus, "base genus must be >= 0");
    if (d < 2) raise(Errc::InvalidVariety, "covering degree must be >= 2");
    if (branch_degree < 0) raise(Errc::InvalidVariety, "branch degree must be >= 0");
    CurveCoverArithmetic a;
    a.g_base = g_base;
    a.d = d;
    a.branch_degree = branch_degree;
    a.ramification_degree = (d - 1) * branch_degree;
    int twice_minus_2 = d * (2 * g_base - 2) + a.ramification_degree;
    if ((twice_minus_2 + 2) % 2 != 0)
        raise(Errc::NonIntegralGenus, "Riemann-Hurwitz gives a non-integral genus");
    a.g_top = (twice_minus_2 + 2) / 2;
    if (a.g_top < 0) raise(Errc::NegativeGenus, "Riemann-Hurwitz gives a negative genus");
    return a;
}

FeasibilityReport feasibility_report(const CurveCoverArithmetic& arith, int rank) {
    if (rank < 1) raise(Errc::InvalidVariety, "rank must be >= 1");
    FeasibilityReport rep;
    rep.arithmetic = arith;
    rep.rank = rank;
    // chi matching: a rank-r bundle with trivial pushforward of rank r*d has
    // chi = r*d*(1 - g_base), hence degree r*d*(1-g_base) + r*(g_top - 1).
    rep.forced_degree = rank * arith.d * (1 - arith.g_base) + rank * (arith.g_top - 1);
    rep.required_h0 = rank * arith.d;
    std::ostringstream os;
    os << "a rank-" << rank << " bundle with trivial pushforward must have degree "
       << rep.forced_degree << " and " << rep.required_h0 << " independent sections";

    if (arith.branch_degree == 0 && arith.g_base >= 1) {
        // etale: the bundle is semistable of degree 0, so h0 <= rank
        rep.h0_bound = rank;
        os << "; it is semistable of degree 0, so it has at most " << rank
           << " -- the covering admits no relatively Ulrich bundle";
        rep.verdict = FeasibilityVerdict::InfeasibleEtale;
        rep.narrative = os.str();
        return rep;
    }
    if (rank == 1 && rep.forced_degree >= 0 && rep.forced_degree <= 2 * arith.g_top - 2) {
        // uniform bound in the special range: h0 <= deg/2 + 1 (Clifford for
        // special bundles; deg + 1 - g <= deg/2 + 1 there for the rest)
        int bound = rep.forced_degree / 2 + 1;
        rep.h0_bound = bound;
        if (bound < rep.required_h0) {
            os << "; a line bundle of degree " << rep.forced_degree << " on a genus-"
               << arith.g_top << " curve has at most " << bound
               << " -- the covering admits no relatively Ulrich line bundle";
            rep.verdict = FeasibilityVerdict::InfeasibleH0;
            rep.narrative = os.str();
            return rep;
        }
        os << "; the section bound " << bound << " does not exclude this";
    } else {
        os << "; no applicable section bound";
    }
    rep.verdict = FeasibilityVerdict::Feasible;
    os << " -- not excluded by these tests (no existence claim)";
    rep.narrative = os.str();
    return rep;
}

CompositionPlan compose_abelian_plan(const AbelianCoverSpec& spec,
                                     const std::vector<int>& per_stage_terms) {
    if (per_stage_terms.size() != spec.stages.size())
        raise(Errc::StageMissingCertificate,
              "need a decomposition term count for every stage (got " +
                  std::to_string(per_stage_terms.size()) + " of " +
                  std::to_string(spec.stages.size()) + ")");
    CompositionPlan plan;
    plan.total_rank = 1;
    for (std::size_t i = 0; i < spec.stages.size(); ++i) {
        const auto& st = spec.stages[i];
        int r = per_stage_terms[i];
        if (st.d < 2) raise(Errc::InvalidVariety, "cyclic stage needs degree >= 2");
        if (r < 1)
            raise(Errc::StageMissingCertificate,
                  "stage " + std::to_string(i) + " has no decomposition terms");
        StagePlan sp;
        sp.stage_index = i;
        sp.d = st.d;
        sp.m_deg = st.m_deg;
        sp.terms = r;
        sp.branch_ref = st.branch_ref;
        if (st.d == 2 && r == 1) {
            sp.stage_rank = 1; // the 2x2 pair gives a line bundle
        } else {
            mpz_class rank;
            mpz_ui_pow_ui(rank.get_mpz_t(), static_cast<unsigned long>(st.d),
                          static_cast<unsigned long>(r));
            sp.stage_rank = rank;
        }
        plan.total_rank *= sp.stage_rank;
        plan.stages.push_back(std::move(sp));
    }
    return plan;
}

} // namespace covmf
