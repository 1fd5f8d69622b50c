#ifndef COVMF_COVERARITH_HPP
#define COVMF_COVERARITH_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace covmf {

/// One cyclic stage of an abelian cover: degree d_i, with branch divisor in
/// the d_i-th power of a line bundle of degree m_deg_i on the base.
struct CoverStage {
    int d = 2;
    int m_deg = 1;
    std::optional<std::string> branch_ref; // optional polynomial reference
    std::optional<int> terms;              // decomposition terms, when known
};

struct AbelianCoverSpec {
    std::vector<CoverStage> stages;

    mpz_class total_degree() const;
};

/// One summand of the pushforward of the structure sheaf: the tensor product
/// of the stage bundles with the recorded (non-positive) exponents.
struct Summand {
    std::vector<int> exponents; // exponent of M_i, in -(d_i - 1)..0
};

/// All prod d_i summands, lexicographic in the twist indices; the cyclic case
/// is O + M^-1 + ... + M^(1-d).
std::vector<Summand> pushforward_summands(const AbelianCoverSpec& spec);

/// Genus bookkeeping of a totally ramified cyclic cover of curves with smooth
/// branch divisor: ramification degree (d-1)*branch_degree and
/// 2g_top - 2 = d(2g_base - 2) + ramification.
struct CurveCoverArithmetic {
    int g_base = 0;
    int d = 0;
    int branch_degree = 0;
    int ramification_degree = 0;
    int g_top = 0;

    bool identity_holds() const {
        return 2 * g_top - 2 == d * (2 * g_base - 2) + ramification_degree;
    }
};

CurveCoverArithmetic riemann_hurwitz(int g_base, int d, int branch_degree);

enum class FeasibilityVerdict { Feasible, InfeasibleEtale, InfeasibleH0 };

struct FeasibilityReport {
    FeasibilityVerdict verdict = FeasibilityVerdict::Feasible;
    CurveCoverArithmetic arithmetic;
    int rank = 1;
    int forced_degree = 0;          // degree a rank-r relatively Ulrich bundle must have
    int required_h0 = 0;            // r * d sections demanded by triviality upstairs
    std::optional<int> h0_bound;    // the applicable upper bound, when one exists
    std::string narrative;

    bool feasible() const { return verdict == FeasibilityVerdict::Feasible; }
};

/// Necessary-condition checks only: "Feasible" means not excluded, never an
/// existence claim. Etale covers of positive-genus bases are excluded by the
/// semistability bound h0 <= r; rank-1 bundles in the special range by
/// h0 <= floor(deg/2) + 1.
FeasibilityReport feasibility_report(const CurveCoverArithmetic& arith, int rank);

struct StagePlan {
    std::size_t stage_index = 0;
    int d = 0;
    int m_deg = 0;
    int terms = 0;
    mpz_class stage_rank;
    std::optional<std::string> branch_ref;
};

struct CompositionPlan {
    std::vector<StagePlan> stages;
    mpz_class total_rank;
};

/// Rank bookkeeping for a tower of cyclic stages: stage rank d_i^(r_i), or 1
/// for a single-term double cover; the total is the product. The tensor /
/// pullback composition itself is the caller's geometry.
CompositionPlan compose_abelian_plan(const AbelianCoverSpec& spec,
                                     const std::vector<int>& per_stage_terms);

} // namespace covmf

#endif
