#ifndef COVMF_MATRIXFACTORIZATION_HPP
#define COVMF_MATRIXFACTORIZATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covmf/gradedring.hpp"
#include "covmf/multipoly.hpp"

namespace covmf {

/// Dense square-ish matrix of polynomials; the arithmetic behind matrix
/// factorizations and their verification.
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, Ring ring)
        : rows_(rows), cols_(cols), ring_(ring), e_(rows * cols, MultiPoly::zero(ring)) {}

    static PolyMatrix identity(std::size_t n, Ring ring);
    static PolyMatrix scalar(std::size_t n, const MultiPoly& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    MultiPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const CycloScalar& c) const;
    PolyMatrix pow(unsigned exponent) const;
    PolyMatrix kron(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;

    ExactMatrix evaluate(const std::vector<Rational>& xs, const Rational& t) const;

  private:
    std::size_t rows_, cols_;
    Ring ring_;
    std::vector<MultiPoly> e_;
};

/// Exact determinant of a polynomial matrix by Laplace expansion memoized on
/// column subsets (no division needed). Exponential in the size; meant for
/// matrices up to ~9.
MultiPoly symbolic_determinant(const PolyMatrix& m);

/// d x d matrix N with N[j, (j+1) mod d] = forms[j+1... ] cycled so that
/// N^d = (prod forms) * I exactly.
struct CyclicRoot {
    int d = 0;
    std::vector<MultiPoly> forms;
    PolyMatrix matrix{0, 0, Ring{}};
};
CyclicRoot cyclic_root(const std::vector<MultiPoly>& forms);

/// Matrix Q with Q^d = target * I; entries all of shape alpha*T + g with g
/// homogeneous of degree n. The d-fold factorization takes every factor equal
/// to Q, except for the 2x2 double-cover pair which stores its partner matrix.
struct MatrixRoot {
    int d = 0;
    int size = 0;
    int n = 0;           // degree of the form entries
    int field_order = 1; // scalars live in Q(zeta_field_order)
    int term_count = 0;  // r: decomposition terms behind this root
    PolyMatrix q{0, 0, Ring{}};
    std::optional<PolyMatrix> cofactor; // pair variant: q * cofactor = target * I
    MultiPoly target{Ring{}};           // T^d - s

    int rank() const { return size / d; }
};

/// The tensor generators E_0..E_r whose sum is the Clifford root: E_0 carries
/// T on the cyclic pattern, E_i the i-th decomposition term (first factor
/// negated), conjugated by clock matrices so that E_i E_j = zeta E_j E_i.
std::vector<PolyMatrix> clifford_generators(const ProductDecomposition& dec);

/// Builds the size-d^(r+1) root of T^d - sum_i prod_j a^j_i over Q(zeta_d).
MatrixRoot clifford_root(const ProductDecomposition& dec);

/// The 2x2 pair B1 = [[T, a], [b, T]], B2 = [[T, -a], [-b, T]] with
/// B1*B2 = (T^2 - ab) * I, packaged as the rank-1 double-cover root.
std::pair<PolyMatrix, PolyMatrix> double_cover_mf(const MultiPoly& a, const MultiPoly& b);
MatrixRoot double_cover_root(const MultiPoly& a, const MultiPoly& b);

struct VerifyIssue {
    enum class Kind { Identity, EntryShape } kind = Kind::Identity;
    std::size_t row = 0, col = 0;
    std::string detail;
};

struct VerifyReport {
    bool identity_ok = false;
    bool shape_ok = false;
    bool degenerate_branch = false; // s = 0: the identity holds but the divisor is trivial
    std::vector<VerifyIssue> issues;
    bool ok() const { return identity_ok && shape_ok; }
};

/// Recomputes the full product symbolically and checks it against target * I
/// entrywise, then checks the alpha*T + g shape of every entry. Failures are
/// reported with matrix positions, never thrown.
VerifyReport verify_root(const MatrixRoot& root);

struct DeterminantReport {
    bool ok = false;
    int samples_used = 0;
    bool symbolic_checked = false;
    std::optional<CycloScalar> unit; // det = unit * target^(size/d)
    std::string detail;
};

/// Checks det Q = c * target^(size/d) for one fixed unit c: exactly (symbolic
/// determinant) for size <= 9, and at `samples` random rational points with
/// target != 0 otherwise. Throws AllSamplesSingular when no usable point is
/// found.
DeterminantReport determinant_check(const MatrixRoot& root, int samples, std::uint64_t seed = 0);

struct UlrichCertificate {
    BaseVariety base;
    int n = 0;
    int d = 0;
    ProductDecomposition decomposition;
    MatrixRoot root;
    int rank = 0;
    bool verified = false;
    std::vector<std::string> log;
};

enum class UlrichStatus { Verified, NotInImage, Failed };

struct UlrichResult {
    UlrichStatus status = UlrichStatus::Failed;
    std::optional<UlrichCertificate> certificate;
    std::vector<std::string> log;
};

/// Full pipeline: decompose the branch section, build the root (the 2x2
/// double-cover specialization when d = 2 with a single term), verify the
/// factorization identity and the determinant law.
UlrichResult ulrich_certificate(const BaseVariety& base, int n, int d, const MultiPoly& s,
                                int det_samples = 5, std::uint64_t seed = 0);

} // namespace covmf

#endif
