#ifndef COVMF_LINALG_HPP
#define COVMF_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "covmf/cyclotomic.hpp"

namespace covmf {

/// Dense matrix over Q(zeta_d). Desk-scale sizes; exactness over speed.
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols, int field_order)
        : rows_(rows), cols_(cols), order_(field_order),
          e_(rows * cols, CycloScalar::zero(field_order)) {}

    static ExactMatrix identity(std::size_t n, int field_order);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int field_order() const { return order_; }

    CycloScalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const CycloScalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    ExactMatrix multiply(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;

  private:
    std::size_t rows_, cols_;
    int order_;
    std::vector<CycloScalar> e_;
};

/// Row space in reduced row-echelon form; pivot columns strictly increasing.
struct Subspace {
    std::size_t ambient_dim = 0;
    ExactMatrix basis{0, 0, 1};
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return pivots.size(); }
};

struct RrefResult {
    Subspace space;
    std::size_t rank = 0;
};

/// Reduced row-echelon form with deterministic pivoting (first nonzero entry,
/// scanning columns left to right).
RrefResult rref(const ExactMatrix& m);

/// Coordinates of v in the stored reduced basis, or nullopt when v is outside
/// the span. Throws DimensionMismatch on length disagreement.
std::optional<std::vector<CycloScalar>> solve_membership(const Subspace& s,
                                                         std::span<const CycloScalar> v);

/// Coefficients c with sum_i c_i * rows[i] = v, or nullopt when inconsistent.
/// Among the many solutions the earliest rows are preferred (free coefficients
/// are zero), which keeps certificates deterministic.
std::optional<std::vector<CycloScalar>> solve_in_rows(
    const std::vector<std::vector<CycloScalar>>& rows, std::span<const CycloScalar> v,
    int field_order);

/// Exact determinant by Gaussian elimination with row swaps.
CycloScalar determinant(const ExactMatrix& m);

/// Incrementally maintained row space in reduced row-echelon form.
class RrefAccumulator {
  public:
    RrefAccumulator(std::size_t ambient_dim, int field_order)
        : ambient_(ambient_dim), order_(field_order) {}

    /// Returns true when the row enlarged the span.
    bool add_row(std::vector<CycloScalar> row);
    bool contains(std::span<const CycloScalar> v) const;
    std::size_t rank() const { return rows_.size(); }
    Subspace to_subspace() const;

  private:
    std::size_t ambient_;
    int order_;
    std::vector<std::vector<CycloScalar>> rows_; // RREF rows, pivot order
    std::vector<std::size_t> pivots_;            // strictly increasing
};

} // namespace covmf

#endif
