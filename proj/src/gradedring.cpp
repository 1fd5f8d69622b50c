#include "covmf/gradedring.hpp"

#include <algorithm>
#include <map>

#include "covmf/error.hpp"

namespace covmf {

BaseVariety::BaseVariety(int n, std::vector<MultiPoly> forms) : n_(n), forms_(std::move(forms)) {
    if (n_ < 1) raise(Errc::InvalidVariety, "ambient projective space needs N >= 1");
    if (static_cast<int>(forms_.size()) > n_ - 1)
        raise(Errc::InvalidVariety, "too many defining forms: dim Z would drop below 1");
    Ring r = ring();
    for (const auto& f : forms_) {
        if (f.is_zero()) raise(Errc::InvalidVariety, "zero defining form");
        if (!(f.ring() == r)) raise(Errc::ShapeMismatch, "defining form in the wrong ring");
        if (!f.is_homogeneous()) raise(Errc::NonHomogeneous, "defining form is not homogeneous");
    }
}

BaseVariety BaseVariety::projective_space(int n) { return BaseVariety(n, {}); }

BaseVariety BaseVariety::complete_intersection(int n, std::vector<MultiPoly> forms) {
    return BaseVariety(n, std::move(forms));
}

std::vector<int> BaseVariety::form_degrees() const {
    std::vector<int> d;
    d.reserve(forms_.size());
    for (const auto& f : forms_) d.push_back(f.weighted_degree());
    return d;
}

Ring BaseVariety::ring() const {
    int order = 1;
    for (const auto& f : forms_) order = std::max(order, f.ring().field_order);
    return Ring{order, n_ + 1, false, 1};
}

namespace {

std::map<std::vector<int>, std::size_t> index_of_monomials(const std::vector<Monomial>& ms) {
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < ms.size(); ++i) idx.emplace(ms[i].exponents, i);
    return idx;
}

// Rows spanning the degree-D piece of the ideal generated by the forms:
// every (monomial of degree D - deg f) * f, in coordinates over the degree-D
// monomial list.
std::vector<std::vector<CycloScalar>> ideal_piece_rows(const std::vector<MultiPoly>& forms,
                                                       int degree, int num_vars, int order,
                                                       const std::map<std::vector<int>, std::size_t>& idx,
                                                       std::size_t dim) {
    std::vector<std::vector<CycloScalar>> rows;
    for (const auto& f : forms) {
        int shift = degree - f.weighted_degree();
        if (shift < 0) continue;
        for (const auto& m : monomials_of_degree(num_vars, shift)) {
            std::vector<CycloScalar> row(dim, CycloScalar::zero(order));
            for (const auto& [e, c] : f.terms()) {
                std::vector<int> prod(e);
                for (int i = 0; i < num_vars; ++i) prod[i] += m.exponents[i];
                row[idx.at(prod)] = c.promoted(order);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ExactMatrix rows_to_matrix(const std::vector<std::vector<CycloScalar>>& rows, std::size_t dim,
                           int order) {
    ExactMatrix m(rows.size(), dim, order);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

GradedPiece::GradedPiece(BaseVariety variety, int degree) : variety_(std::move(variety)), degree_(degree) {
    if (degree < 0) raise(Errc::DegreeNegative, "graded piece of negative degree");
    const Ring r = variety_.ring();
    const int order = r.field_order;
    all_ = monomials_of_degree(r.num_vars, degree);
    index_ = index_of_monomials(all_);

    if (variety_.is_projective_space()) {
        trivial_ = true;
        basis_ = all_;
        for (std::size_t j = 0; j < all_.size(); ++j) free_cols_.push_back(j);
        return;
    }

    auto rows = ideal_piece_rows(variety_.forms(), degree, r.num_vars, order, index_, all_.size());
    ideal_ = rref(rows_to_matrix(rows, all_.size(), order)).space;

    // Greedy basis: earliest monomials whose residues are independent of the
    // ideal piece (and of the residues already chosen).
    std::vector<std::size_t> chosen;
    RrefAccumulator span(all_.size(), order);
    for (std::size_t i = 0; i < ideal_.dim(); ++i) {
        std::vector<CycloScalar> row(all_.size(), CycloScalar::zero(order));
        for (std::size_t j = 0; j < all_.size(); ++j) row[j] = ideal_.basis.at(i, j);
        span.add_row(std::move(row));
    }
    for (std::size_t k = 0; k < all_.size() && span.rank() < all_.size(); ++k) {
        std::vector<CycloScalar> unit(all_.size(), CycloScalar::zero(order));
        unit[k] = CycloScalar::one(order);
        if (span.add_row(std::move(unit))) chosen.push_back(k);
    }
    basis_.reserve(chosen.size());
    for (std::size_t k : chosen) basis_.push_back(all_[k]);

    // Reduction data: residues of basis monomials restricted to the ideal's
    // non-pivot coordinates form an invertible q x q system.
    std::vector<bool> is_pivot(all_.size(), false);
    for (std::size_t p : ideal_.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < all_.size(); ++j)
        if (!is_pivot[j]) free_cols_.push_back(j);
    const std::size_t q = basis_.size();
    if (q != free_cols_.size())
        raise(Errc::InvalidVariety, "quotient dimension bookkeeping failed");
    // residue of e_k on the free coordinates: subtract pivot eliminations
    auto residue_on_free = [&](std::size_t k) {
        std::vector<CycloScalar> v(all_.size(), CycloScalar::zero(order));
        v[k] = CycloScalar::one(order);
        for (std::size_t i = 0; i < ideal_.dim(); ++i) {
            CycloScalar factor = v[ideal_.pivots[i]];
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < all_.size(); ++j)
                v[j] -= factor * ideal_.basis.at(i, j);
        }
        std::vector<CycloScalar> out(q, CycloScalar::zero(order));
        for (std::size_t j = 0; j < q; ++j) out[j] = v[free_cols_[j]];
        return out;
    };
    // invert the residue matrix via rref of [R | I]
    ExactMatrix aug(q, 2 * q, order);
    for (std::size_t col = 0; col < q; ++col) {
        auto res = residue_on_free(chosen[col]);
        for (std::size_t i = 0; i < q; ++i) aug.at(i, col) = res[i];
    }
    for (std::size_t i = 0; i < q; ++i) aug.at(i, q + i) = CycloScalar::one(order);
    RrefResult rr = rref(aug);
    if (rr.rank != q) raise(Errc::InvalidVariety, "basis residues are not independent");
    basis_solve_ = ExactMatrix(q, q, order);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) basis_solve_.at(i, j) = rr.space.basis.at(i, q + j);
}

std::vector<CycloScalar> GradedPiece::reduce_vector(std::vector<CycloScalar> v, int order) const {
    if (trivial_) return v;
    // eliminate the ideal part
    for (std::size_t i = 0; i < ideal_.dim(); ++i) {
        CycloScalar f = v[ideal_.pivots[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < all_.size(); ++j) v[j] -= f * ideal_.basis.at(i, j);
    }
    const std::size_t q = basis_.size();
    std::vector<CycloScalar> out(q, CycloScalar::zero(order));
    for (std::size_t i = 0; i < q; ++i) {
        CycloScalar acc = CycloScalar::zero(order);
        for (std::size_t j = 0; j < q; ++j) {
            const CycloScalar& coeff = basis_solve_.at(i, j);
            if (coeff.is_zero() || v[free_cols_[j]].is_zero()) continue;
            acc += coeff * v[free_cols_[j]];
        }
        out[i] = acc;
    }
    return out;
}

std::vector<CycloScalar> GradedPiece::reduce(const MultiPoly& f) const {
    const Ring r = variety_.ring();
    if (f.ring().num_vars != r.num_vars || f.ring().has_T)
        raise(Errc::ShapeMismatch, "polynomial does not live on the base");
    if (!f.is_homogeneous() || (!f.is_zero() && f.weighted_degree() != degree_))
        raise(Errc::DegreeMismatch, "polynomial is not homogeneous of the piece degree");
    const int order = std::max(r.field_order, f.ring().field_order);
    std::vector<CycloScalar> v(all_.size(), CycloScalar::zero(order));
    for (const auto& [e, c] : f.terms()) v[index_.at(e)] = c.promoted(order);
    return reduce_vector(std::move(v), order);
}

std::vector<CycloScalar> GradedPiece::reduce(const Monomial& m) const {
    const int order = variety_.ring().field_order;
    if (m.degree() != degree_) raise(Errc::DegreeMismatch, "monomial degree mismatch");
    std::vector<CycloScalar> v(all_.size(), CycloScalar::zero(order));
    v[index_.at(m.exponents)] = CycloScalar::one(order);
    return reduce_vector(std::move(v), order);
}

GradedPiece quotient_basis(const BaseVariety& v, int degree) { return GradedPiece(v, degree); }

namespace {

// Multisets of size m over {0..count-1}, non-decreasing index tuples in
// lexicographic order (the graded-lex product ordering over the basis).
void enumerate_multisets(std::size_t count, int m, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    std::size_t start = cur.empty() ? 0 : cur.back();
    for (std::size_t i = start; i < count; ++i) {
        cur.push_back(i);
        enumerate_multisets(count, m - 1, cur, out);
        cur.pop_back();
    }
}

Monomial product_monomial(const std::vector<Monomial>& basis, const std::vector<std::size_t>& tuple) {
    Monomial p{std::vector<int>(basis.front().exponents.size(), 0)};
    for (std::size_t i : tuple)
        for (std::size_t k = 0; k < p.exponents.size(); ++k)
            p.exponents[k] += basis[i].exponents[k];
    return p;
}

} // namespace

MultImage multmap_image(const BaseVariety& v, int n, int m) {
    if (n < 0) raise(Errc::DegreeNegative, "multiplication map needs n >= 0");
    if (m < 1) raise(Errc::DegreeNegative, "multiplication map needs m >= 1");
    GradedPiece source = quotient_basis(v, n);
    GradedPiece target = quotient_basis(v, n * m);
    const int order = v.ring().field_order;
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur;
    enumerate_multisets(source.dim(), m, cur, tuples);
    ExactMatrix rows(tuples.size(), target.dim(), order);
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        auto coords = target.reduce(product_monomial(source.basis(), tuples[r]));
        for (std::size_t j = 0; j < coords.size(); ++j) rows.at(r, j) = coords[j];
    }
    Subspace image = rref(rows).space;
    return MultImage{std::move(target), std::move(image)};
}

SurjectivityReport is_surjective(const BaseVariety& v, int n, int m) {
    MultImage img = multmap_image(v, n, m);
    SurjectivityReport rep;
    rep.n = n;
    rep.m = m;
    rep.image_dim = img.image_dim();
    rep.target_dim = img.target_dim();
    rep.surjective = rep.image_dim == rep.target_dim;
    return rep;
}

MultiPoly ProductDecomposition::expand() const {
    if (terms.empty() || terms.front().empty())
        raise(Errc::EmptyDecomposition, "cannot expand an empty decomposition");
    const Ring r = terms.front().front().ring();
    MultiPoly acc = MultiPoly::zero(r);
    for (const auto& tuple : terms) {
        MultiPoly prod = MultiPoly::constant(r, Rational(1));
        for (const auto& f : tuple) prod *= f;
        acc += prod;
    }
    return acc;
}

bool ProductDecomposition::matches(const BaseVariety& v, const MultiPoly& s) const {
    GradedPiece piece = quotient_basis(v, d * degree_n);
    auto lhs = piece.reduce(expand());
    auto rhs = piece.reduce(s);
    return lhs == rhs;
}

std::optional<ProductDecomposition> decompose_in_image(const BaseVariety& v, int n, int d,
                                                       const MultiPoly& s) {
    if (n < 0) raise(Errc::DegreeNegative, "decomposition needs n >= 0");
    if (d < 1) raise(Errc::DegreeNegative, "decomposition needs d >= 1");
    if (!s.is_homogeneous() || (!s.is_zero() && s.weighted_degree() != n * d))
        raise(Errc::DegreeMismatch, "branch section must be homogeneous of degree d*n");
    const int order = std::max(v.ring().field_order, s.ring().field_order);
    GradedPiece source = quotient_basis(v, n);
    GradedPiece target = quotient_basis(v, n * d);

    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur;
    enumerate_multisets(source.dim(), d, cur, tuples);
    std::vector<std::vector<CycloScalar>> rows;
    rows.reserve(tuples.size());
    for (const auto& t : tuples) rows.push_back(target.reduce(product_monomial(source.basis(), t)));

    auto coeffs = solve_in_rows(rows, target.reduce(s), order);
    if (!coeffs) return std::nullopt;

    Ring r = v.ring();
    r.field_order = order;
    ProductDecomposition dec;
    dec.d = d;
    dec.degree_n = n;
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        if ((*coeffs)[k].is_zero()) continue;
        std::vector<MultiPoly> tuple;
        tuple.reserve(d);
        for (int j = 0; j < d; ++j) {
            CycloScalar c = (j == 0) ? (*coeffs)[k] : CycloScalar::one(order);
            tuple.push_back(MultiPoly::from_monomial(r, source.basis()[tuples[k][j]], c));
        }
        dec.terms.push_back(std::move(tuple));
    }
    return dec;
}

std::optional<int> elimination_certificate(const std::vector<MultiPoly>& forms, int degree_cap) {
    if (forms.empty()) raise(Errc::EmptyDecomposition, "no forms given");
    const Ring r = forms.front().ring();
    int min_deg = -1;
    for (const auto& f : forms) {
        if (!(f.ring() == r)) raise(Errc::ShapeMismatch, "forms live in different rings");
        if (f.is_zero()) raise(Errc::InvalidVariety, "zero form has no zero-locus certificate");
        if (!f.is_homogeneous()) raise(Errc::NonHomogeneous, "forms must be homogeneous");
        int deg = f.weighted_degree();
        min_deg = (min_deg < 0) ? deg : std::min(min_deg, deg);
    }
    for (int degree = min_deg; degree <= degree_cap; ++degree) {
        auto all = monomials_of_degree(r.num_vars, degree);
        auto idx = index_of_monomials(all);
        auto rows = ideal_piece_rows(forms, degree, r.num_vars, r.field_order, idx, all.size());
        if (rows.empty()) continue;
        if (rref(rows_to_matrix(rows, all.size(), r.field_order)).rank == all.size())
            return degree;
    }
    return std::nullopt;
}

} // namespace covmf
