#ifndef COVMF_ELLIPTIC_HPP
#define COVMF_ELLIPTIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covmf/linalg.hpp"
#include "covmf/rational.hpp"

namespace covmf {

/// Smooth plane curve y^2 = x^3 + A x + B; the section spaces of O(k*O) at the
/// point at infinity are spanned by x^a y^b with 2a + 3b <= k, b <= 1.
struct WeierstrassCurve {
    Rational A, B;

    WeierstrassCurve(Rational a, Rational b);
    Rational discriminant() const; // 4A^3 + 27B^2
};

struct PoleBasisElement {
    int x_exp = 0;
    int y_exp = 0; // 0 or 1

    int pole_order() const { return 2 * x_exp + 3 * y_exp; }
    bool operator==(const PoleBasisElement&) const = default;
    std::string str() const;
};

/// Basis of the sections with pole order at most k at infinity, ordered by
/// y-exponent then x-exponent. Size is k for k >= 1 and 1 for k = 0.
std::vector<PoleBasisElement> pole_basis(int pole_cap);

/// Function-field element in reduced form: polynomial in x, y with y-degree
/// at most 1 (y^2 always rewritten through the curve equation).
class EllElement {
  public:
    EllElement() = default;
    static EllElement from_basis(const PoleBasisElement& e, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    int pole_order() const;

    EllElement operator+(const EllElement& o) const;
    EllElement operator-(const EllElement& o) const;
    EllElement scaled(const Rational& r) const;
    bool operator==(const EllElement& o) const { return terms_ == o.terms_; }

    /// Coordinates over pole_basis(pole_cap); throws DegreeMismatch when the
    /// element has a worse pole.
    std::vector<CycloScalar> coordinates(int pole_cap) const;
    std::string str() const;

    void add_term(int x_exp, int y_exp, const Rational& c);

  private:
    std::map<std::pair<int, int>, Rational> terms_;
};

/// Product in the function field, re-reduced so every y-exponent is <= 1.
EllElement ell_multiply(const WeierstrassCurve& c, const EllElement& f, const EllElement& g);

struct EllMultReport {
    int pole_cap = 0;       // k: source sections have pole order <= k
    int fold = 0;           // m
    std::vector<PoleBasisElement> source_basis;
    std::vector<PoleBasisElement> target_basis;
    Subspace image;
    std::vector<PoleBasisElement> cokernel; // basis elements missing from the image
    std::size_t image_dim() const { return image.dim(); }
    std::size_t target_dim() const { return target_basis.size(); }
    bool surjective() const { return cokernel.empty(); }
};

/// Image of the m-fold multiplication map H^0(L(kO))^(x m) -> H^0(L(mkO)).
EllMultReport multmap_image_ell(const WeierstrassCurve& c, int pole_cap, int fold);

/// Membership of a section of pole order <= m*k in the m-fold image;
/// nullopt is the not-in-image verdict (a cover branched there admits no
/// relatively Ulrich bundle).
std::optional<std::vector<CycloScalar>> decompose_in_ell_image(const WeierstrassCurve& c,
                                                               int pole_cap, int fold,
                                                               const EllElement& s);

} // namespace covmf

#endif
