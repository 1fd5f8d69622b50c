#include "covmf/matrixfactorization.hpp"

#include <random>
#include <sstream>

#include "covmf/error.hpp"

namespace covmf {

PolyMatrix PolyMatrix::identity(std::size_t n, Ring ring) {
    PolyMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(ring, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const MultiPoly& diag) {
    PolyMatrix m(n, n, diag.ring());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = diag;
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        raise(Errc::DimensionMismatch, "matrix sum shape mismatch");
    PolyMatrix r(rows_, cols_, ring_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) raise(Errc::DimensionMismatch, "matrix product shape mismatch");
    PolyMatrix r(rows_, o.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const MultiPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const MultiPoly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::scaled(const CycloScalar& c) const {
    PolyMatrix r(rows_, cols_, ring_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(c);
    return r;
}

PolyMatrix PolyMatrix::pow(unsigned exponent) const {
    if (rows_ != cols_) raise(Errc::DimensionMismatch, "power of non-square matrix");
    PolyMatrix result = identity(rows_, ring_);
    PolyMatrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

PolyMatrix PolyMatrix::kron(const PolyMatrix& o) const {
    PolyMatrix r(rows_ * o.rows_, cols_ * o.cols_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l) {
                    if (o.at(k, l).is_zero()) continue;
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
                }
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

ExactMatrix PolyMatrix::evaluate(const std::vector<Rational>& xs, const Rational& t) const {
    ExactMatrix m(rows_, cols_, ring_.field_order);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j).evaluate(xs, ring_.has_T ? std::optional<Rational>(t) : std::nullopt);
    return m;
}

MultiPoly symbolic_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) raise(Errc::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return MultiPoly::constant(m.ring(), Rational(1));
    if (n > 16) raise(Errc::DimensionMismatch, "symbolic determinant limited to size 16");
    // minors[mask] = det of the submatrix on rows 0..popcount(mask)-1 and the
    // column set encoded by mask; filled in order of increasing popcount.
    std::vector<MultiPoly> minors(std::size_t(1) << n, MultiPoly::zero(m.ring()));
    minors[0] = MultiPoly::constant(m.ring(), Rational(1));
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        int k = __builtin_popcount(mask);
        std::size_t row = static_cast<std::size_t>(k - 1);
        MultiPoly acc = MultiPoly::zero(m.ring());
        int pos = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (1U << col))) continue;
            const MultiPoly& entry = m.at(row, col);
            if (!entry.is_zero()) {
                MultiPoly sub = minors[mask & ~(1U << col)] * entry;
                if ((k - 1 + pos) % 2 == 0)
                    acc += sub;
                else
                    acc -= sub;
            }
            ++pos;
        }
        minors[mask] = std::move(acc);
    }
    return minors[(std::size_t(1) << n) - 1];
}

CyclicRoot cyclic_root(const std::vector<MultiPoly>& forms) {
    if (forms.empty()) raise(Errc::EmptyDecomposition, "cyclic root needs at least one form");
    const int d = static_cast<int>(forms.size());
    const Ring ring = forms.front().ring();
    const int degree = forms.front().weighted_degree();
    for (const auto& f : forms) {
        if (!(f.ring() == ring)) raise(Errc::ShapeMismatch, "forms live in different rings");
        if (!f.is_homogeneous() || (!f.is_zero() && f.weighted_degree() != degree))
            raise(Errc::DegreeMismatch, "forms must be homogeneous of one common degree");
    }
    CyclicRoot root;
    root.d = d;
    root.forms = forms;
    root.matrix = PolyMatrix(d, d, ring);
    for (int j = 0; j < d; ++j) root.matrix.at(j, (j + 1) % d) = forms[j];
    return root;
}

namespace {

// Field order for a degree-d root: zeta_d is needed for d >= 3, and d <= 2
// stays rational.
int root_field_order(int d, int base_order) {
    int order = d >= 3 ? d : 2;
    if (base_order >= 3 && base_order != order)
        raise(Errc::OrderMismatch, "decomposition coefficients live in an incompatible field");
    return std::max(order, base_order);
}

PolyMatrix clock_matrix(int d, Ring ring) {
    PolyMatrix m(d, d, ring);
    CycloScalar zeta = CycloScalar::zeta(ring.field_order);
    // zeta_(field_order) may have higher order than d; use the d-th root below
    // the caller guarantees field_order == d for d >= 3
    for (int j = 0; j < d; ++j)
        m.at(j, j) = MultiPoly::constant(ring, zeta.pow(static_cast<unsigned long>(j)));
    return m;
}

} // namespace

std::vector<PolyMatrix> clifford_generators(const ProductDecomposition& dec) {
    if (dec.terms.empty()) raise(Errc::EmptyDecomposition, "decomposition has no terms");
    const int d = dec.d;
    const int r = static_cast<int>(dec.terms.size());
    if (d < 1) raise(Errc::DegreeMismatch, "fold count must be >= 1");
    for (const auto& tuple : dec.terms)
        if (static_cast<int>(tuple.size()) != d)
            raise(Errc::ShapeMismatch, "every decomposition term needs d factors");

    const Ring base = dec.terms.front().front().ring();
    const int order = root_field_order(d, base.field_order);
    Ring ring = Ring{order, base.num_vars, true, dec.degree_n};

    auto lift = [&](const MultiPoly& f) {
        MultiPoly g = MultiPoly::zero(ring);
        for (const auto& [e, c] : f.terms()) {
            std::vector<int> ee = e;
            ee.push_back(0);
            g += MultiPoly::from_monomial(ring, std::move(ee), c.promoted(order));
        }
        return g;
    };

    PolyMatrix clock = clock_matrix(d, ring);
    PolyMatrix eye = PolyMatrix::identity(d, ring);

    std::vector<PolyMatrix> gens;
    gens.reserve(r + 1);
    for (int i = 0; i <= r; ++i) {
        // slot i carries the cyclic matrix, slots before it the clock, after it
        // the identity
        std::vector<MultiPoly> forms;
        forms.reserve(d);
        if (i == 0) {
            for (int j = 0; j < d; ++j) forms.push_back(MultiPoly::t_variable(ring));
        } else {
            for (int j = 0; j < d; ++j) {
                MultiPoly f = lift(dec.terms[i - 1][j]);
                if (j == 0) f = -f; // absorb the minus sign of -s_i
                forms.push_back(std::move(f));
            }
        }
        PolyMatrix cyc = cyclic_root(forms).matrix;
        PolyMatrix acc = (i == 0) ? cyc : clock;
        for (int s = 1; s <= r; ++s) {
            if (s < i)
                acc = acc.kron(clock);
            else if (s == i)
                acc = acc.kron(cyc);
            else
                acc = acc.kron(eye);
        }
        gens.push_back(std::move(acc));
    }
    return gens;
}

MatrixRoot clifford_root(const ProductDecomposition& dec) {
    auto gens = clifford_generators(dec);
    const int d = dec.d;
    const int r = static_cast<int>(dec.terms.size());
    const Ring ring = gens.front().ring();

    PolyMatrix q = gens.front();
    for (std::size_t i = 1; i < gens.size(); ++i) q = q + gens[i];

    // target = T^d - sum_i prod_j a^j_i, in the T-ring
    MultiPoly target = MultiPoly::constant(ring, Rational(1));
    for (int k = 0; k < d; ++k) target *= MultiPoly::t_variable(ring);
    target -= dec.expand().promoted_order(ring.field_order).lifted_with_T(dec.degree_n);

    MatrixRoot root;
    root.d = d;
    root.size = static_cast<int>(q.rows());
    root.n = dec.degree_n;
    root.field_order = ring.field_order;
    root.term_count = r;
    root.q = std::move(q);
    root.target = std::move(target);
    return root;
}

std::pair<PolyMatrix, PolyMatrix> double_cover_mf(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.ring() == b.ring())) raise(Errc::ShapeMismatch, "forms live in different rings");
    if (a.weighted_degree() != b.weighted_degree() && !a.is_zero() && !b.is_zero())
        raise(Errc::DegreeMismatch, "forms must have equal degree");
    int n = std::max(a.weighted_degree(), b.weighted_degree());
    if (n < 0) n = 1; // both zero: degenerate but allowed
    const int order = root_field_order(2, a.ring().field_order);
    Ring ring = a.ring().with_T(n);
    ring.field_order = order;
    MultiPoly t = MultiPoly::t_variable(ring);
    MultiPoly al = a.promoted_order(order).lifted_with_T(n);
    MultiPoly bl = b.promoted_order(order).lifted_with_T(n);
    PolyMatrix b1(2, 2, ring), b2(2, 2, ring);
    b1.at(0, 0) = t;
    b1.at(0, 1) = al;
    b1.at(1, 0) = bl;
    b1.at(1, 1) = t;
    b2.at(0, 0) = t;
    b2.at(0, 1) = -al;
    b2.at(1, 0) = -bl;
    b2.at(1, 1) = t;
    return {std::move(b1), std::move(b2)};
}

MatrixRoot double_cover_root(const MultiPoly& a, const MultiPoly& b) {
    auto [b1, b2] = double_cover_mf(a, b);
    const Ring ring = b1.ring();
    MultiPoly target = MultiPoly::t_variable(ring) * MultiPoly::t_variable(ring) -
                       a.promoted_order(ring.field_order).lifted_with_T(ring.t_weight) *
                           b.promoted_order(ring.field_order).lifted_with_T(ring.t_weight);
    MatrixRoot root;
    root.d = 2;
    root.size = 2;
    root.n = ring.t_weight;
    root.field_order = ring.field_order;
    root.term_count = 1;
    root.q = std::move(b1);
    root.cofactor = std::move(b2);
    root.target = std::move(target);
    return root;
}

namespace {

// alpha*T + g with g homogeneous of degree n: homogeneous of weighted degree
// n with T-degree at most 1 (T carries weight n, so a T term is pure).
std::optional<std::string> entry_shape_issue(const MultiPoly& e, int n) {
    if (e.is_zero()) return std::nullopt;
    if (e.t_degree() > 1) return "entry has T-degree above 1";
    if (!e.is_homogeneous() || e.weighted_degree() != n)
        return "entry is not homogeneous of the section degree";
    return std::nullopt;
}

} // namespace

VerifyReport verify_root(const MatrixRoot& root) {
    VerifyReport rep;
    const std::size_t m = root.q.rows();
    // the factorization identity
    PolyMatrix product = root.cofactor ? root.q * (*root.cofactor)
                                       : root.q.pow(static_cast<unsigned>(root.d));
    PolyMatrix expected = PolyMatrix::scalar(m, root.target);
    rep.identity_ok = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (product.at(i, j) == expected.at(i, j)) continue;
            rep.identity_ok = false;
            rep.issues.push_back(VerifyIssue{VerifyIssue::Kind::Identity, i, j,
                                             "product entry differs from target identity"});
        }
    if (root.cofactor) {
        // the pair must factor in both orders
        PolyMatrix reverse = (*root.cofactor) * root.q;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (reverse.at(i, j) == expected.at(i, j)) continue;
                rep.identity_ok = false;
                rep.issues.push_back(VerifyIssue{VerifyIssue::Kind::Identity, i, j,
                                                 "reversed product differs from target identity"});
            }
    }
    // entry shapes
    rep.shape_ok = true;
    auto check_shape = [&](const PolyMatrix& mat) {
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j) {
                auto issue = entry_shape_issue(mat.at(i, j), root.n);
                if (!issue) continue;
                rep.shape_ok = false;
                rep.issues.push_back(VerifyIssue{VerifyIssue::Kind::EntryShape, i, j, *issue});
            }
    };
    check_shape(root.q);
    if (root.cofactor) check_shape(*root.cofactor);

    // degenerate branch: target == T^d exactly (s = 0)
    MultiPoly tpow = MultiPoly::constant(root.q.ring(), Rational(1));
    for (int k = 0; k < root.d; ++k) tpow *= MultiPoly::t_variable(root.q.ring());
    rep.degenerate_branch = (root.target == tpow);
    return rep;
}

DeterminantReport determinant_check(const MatrixRoot& root, int samples, std::uint64_t seed) {
    if (samples < 1) raise(Errc::DimensionMismatch, "determinant check needs samples >= 1");
    DeterminantReport rep;
    const int power = root.rank();
    const Ring ring = root.q.ring();

    MultiPoly target_pow = MultiPoly::constant(ring, Rational(1));
    for (int k = 0; k < power; ++k) target_pow *= root.target;

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);

    std::optional<CycloScalar> unit;
    int used = 0;
    for (int k = 0; k < samples; ++k) {
        // draw until the target does not vanish at the point
        std::vector<Rational> xs;
        Rational t(0);
        CycloScalar tval = CycloScalar::zero(ring.field_order);
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            xs.clear();
            for (int i = 0; i < ring.num_vars; ++i) xs.emplace_back(num(rng), den(rng));
            t = Rational(num(rng), den(rng));
            tval = root.target.evaluate(xs, t);
            found = !tval.is_zero();
        }
        if (!found) raise(Errc::AllSamplesSingular, "all sampled points annihilate the target");
        CycloScalar det = determinant(root.q.evaluate(xs, t));
        CycloScalar expect = target_pow.evaluate(xs, t);
        CycloScalar ratio = det / expect;
        if (!unit) {
            unit = ratio;
        } else if (!(*unit == ratio)) {
            rep.ok = false;
            rep.samples_used = used + 1;
            rep.detail = "determinant ratio varies across sample points";
            return rep;
        }
        ++used;
    }
    rep.samples_used = used;
    rep.unit = unit;
    rep.ok = true;

    if (root.size <= 9) {
        MultiPoly det = symbolic_determinant(root.q);
        MultiPoly scaled_target = target_pow.scaled(*unit);
        rep.symbolic_checked = true;
        if (det != scaled_target) {
            rep.ok = false;
            rep.detail = "symbolic determinant differs from unit * target^(m/d)";
            return rep;
        }
    }
    rep.detail = "det = (" + unit->str() + ") * target^" + std::to_string(power);
    return rep;
}

UlrichResult ulrich_certificate(const BaseVariety& base, int n, int d, const MultiPoly& s,
                                int det_samples, std::uint64_t seed) {
    UlrichResult result;
    auto dec = decompose_in_image(base, n, d, s);
    if (!dec) {
        result.status = UlrichStatus::NotInImage;
        result.log.push_back("branch section is outside the image of the " + std::to_string(d) +
                             "-fold multiplication map; no relatively Ulrich bundle arises from "
                             "this criterion");
        return result;
    }
    result.log.push_back("decomposition found with " + std::to_string(dec->terms.size()) +
                         " term(s)");

    bool degenerate = dec->terms.empty();
    if (degenerate) {
        // s reduces to zero: factor T^d itself through one all-zero term
        Ring base_ring = base.ring();
        dec->terms.push_back(std::vector<MultiPoly>(d, MultiPoly::zero(base_ring)));
        result.log.push_back("branch section reduces to zero; emitting a degenerate certificate");
    }

    MatrixRoot root;
    if (d == 2 && dec->terms.size() == 1 && !degenerate) {
        root = double_cover_root(dec->terms[0][0], dec->terms[0][1]);
        result.log.push_back("single-term double cover: using the 2x2 pair of rank 1");
    } else {
        root = clifford_root(*dec);
        result.log.push_back("built Clifford root of size " + std::to_string(root.size));
    }

    VerifyReport ver = verify_root(root);
    if (ver.degenerate_branch)
        result.log.push_back("warning: degenerate branch section (s = 0); the identity holds but "
                             "the covering is not reduced");
    if (!ver.ok()) {
        result.status = UlrichStatus::Failed;
        for (const auto& issue : ver.issues)
            result.log.push_back("verification failure at (" + std::to_string(issue.row) + "," +
                                 std::to_string(issue.col) + "): " + issue.detail);
        return result;
    }
    result.log.push_back("factorization identity and entry shapes verified exactly");

    if (det_samples > 0) {
        DeterminantReport det = determinant_check(root, det_samples, seed);
        if (!det.ok) {
            result.status = UlrichStatus::Failed;
            result.log.push_back("determinant law failed: " + det.detail);
            return result;
        }
        result.log.push_back("determinant law: " + det.detail +
                             (det.symbolic_checked ? " (symbolic)" : " (sampled)"));
    }

    UlrichCertificate cert{base, n, d, *dec, root, root.rank(), true, result.log};
    result.status = UlrichStatus::Verified;
    result.certificate = std::move(cert);
    return result;
}

} // namespace covmf
