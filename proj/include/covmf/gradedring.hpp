#ifndef COVMF_GRADEDRING_HPP
#define COVMF_GRADEDRING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covmf/linalg.hpp"
#include "covmf/multipoly.hpp"

namespace covmf {

/// Base of the covering: P^N itself, or a complete intersection Z in P^N cut
/// out by homogeneous forms. At most N-1 forms, so dim Z >= 1.
class BaseVariety {
  public:
    static BaseVariety projective_space(int n);
    static BaseVariety complete_intersection(int n, std::vector<MultiPoly> forms);

    int ambient_dim() const { return n_; }          // the N of P^N
    int num_vars() const { return n_ + 1; }
    bool is_projective_space() const { return forms_.empty(); }
    const std::vector<MultiPoly>& forms() const { return forms_; }
    std::vector<int> form_degrees() const;
    Ring ring() const;

  private:
    BaseVariety(int n, std::vector<MultiPoly> forms);
    int n_;
    std::vector<MultiPoly> forms_;
};

/// Degree-n piece of the homogeneous coordinate ring, with enough data to
/// reduce any degree-n form to coordinates in a fixed monomial basis. The
/// basis consists of the graded-lex-earliest monomials complementing the
/// degree-n piece of the ideal.
class GradedPiece {
  public:
    GradedPiece(BaseVariety variety, int degree);

    const BaseVariety& variety() const { return variety_; }
    int degree() const { return degree_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<Monomial>& all_monomials() const { return all_; }
    std::size_t ideal_dim() const { return ideal_.dim(); }

    /// Coordinates of a homogeneous degree-n polynomial in the stored basis.
    std::vector<CycloScalar> reduce(const MultiPoly& f) const;
    std::vector<CycloScalar> reduce(const Monomial& m) const;

  private:
    std::vector<CycloScalar> reduce_vector(std::vector<CycloScalar> v, int order) const;
    BaseVariety variety_;
    int degree_;
    std::vector<Monomial> all_;
    std::map<std::vector<int>, std::size_t> index_; // exponent vector -> position in all_
    std::vector<Monomial> basis_;
    Subspace ideal_;                    // RREF of the ideal's degree piece
    std::vector<std::size_t> free_cols_; // non-pivot coordinates
    ExactMatrix basis_solve_{0, 0, 1};  // inverse of basis residues on free_cols_
    bool trivial_ = false;              // no ideal: reduction is coordinate extraction
};

GradedPiece quotient_basis(const BaseVariety& v, int degree);

/// Image of the m-fold multiplication map inside the degree m*n piece: the
/// span of reductions of all m-fold products of degree-n basis monomials.
struct MultImage {
    GradedPiece target;
    Subspace image;
    std::size_t image_dim() const { return image.dim(); }
    std::size_t target_dim() const { return target.dim(); }
};
MultImage multmap_image(const BaseVariety& v, int n, int m);

struct SurjectivityReport {
    int n = 0, m = 0;
    std::size_t image_dim = 0;
    std::size_t target_dim = 0;
    bool surjective = false;
};
SurjectivityReport is_surjective(const BaseVariety& v, int n, int m);

/// Certificate s = sum_i a^1_i ... a^d_i with every factor homogeneous of
/// degree n on the base.
struct ProductDecomposition {
    int d = 0;
    int degree_n = 0;
    std::vector<std::vector<MultiPoly>> terms;

    MultiPoly expand() const;
    bool matches(const BaseVariety& v, const MultiPoly& s) const;
};

/// Expresses s as an exact combination of pure d-fold products of degree-n
/// basis monomials; nullopt when s is outside the image of the d-fold
/// multiplication map (no relatively Ulrich bundle arises this way).
std::optional<ProductDecomposition> decompose_in_image(const BaseVariety& v, int n, int d,
                                                       const MultiPoly& s);

/// Sound emptiness proof for the common zero locus of the forms in P^N: the
/// first degree D <= degree_cap at which the generated ideal contains the
/// whole degree-D piece, or nullopt (inconclusive). Forms of different
/// degrees are allowed; each is multiplied by the monomials that land it in
/// degree D.
std::optional<int> elimination_certificate(const std::vector<MultiPoly>& forms, int degree_cap);

} // namespace covmf

#endif
