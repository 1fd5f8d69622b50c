#include "covmf/elliptic.hpp"

#include <sstream>

#include "covmf/error.hpp"

namespace covmf {

WeierstrassCurve::WeierstrassCurve(Rational a, Rational b) : A(std::move(a)), B(std::move(b)) {
    if (discriminant().is_zero())
        raise(Errc::InvalidVariety, "singular Weierstrass curve: 4A^3 + 27B^2 = 0");
}

Rational WeierstrassCurve::discriminant() const {
    return Rational(4) * A * A * A + Rational(27) * B * B;
}

std::string PoleBasisElement::str() const {
    if (x_exp == 0 && y_exp == 0) return "1";
    std::ostringstream os;
    if (x_exp > 0) {
        os << "x";
        if (x_exp > 1) os << "^" << x_exp;
    }
    if (y_exp > 0) {
        if (x_exp > 0) os << "*";
        os << "y";
    }
    return os.str();
}

std::vector<PoleBasisElement> pole_basis(int pole_cap) {
    if (pole_cap < 0) raise(Errc::DegreeNegative, "pole order bound must be >= 0");
    std::vector<PoleBasisElement> out;
    for (int b = 0; b <= 1; ++b)
        for (int a = 0; 2 * a + 3 * b <= pole_cap; ++a) out.push_back(PoleBasisElement{a, b});
    return out;
}

EllElement EllElement::from_basis(const PoleBasisElement& e, const Rational& c) {
    EllElement v;
    v.add_term(e.x_exp, e.y_exp, c);
    return v;
}

void EllElement::add_term(int x_exp, int y_exp, const Rational& c) {
    if (c.is_zero()) return;
    if (y_exp > 1) raise(Errc::ShapeMismatch, "element not reduced: y-exponent above 1");
    auto key = std::make_pair(x_exp, y_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int EllElement::pole_order() const {
    int p = 0;
    for (const auto& [e, c] : terms_) p = std::max(p, 2 * e.first + 3 * e.second);
    return p;
}

EllElement EllElement::operator+(const EllElement& o) const {
    EllElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
    return r;
}

EllElement EllElement::operator-(const EllElement& o) const {
    EllElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

EllElement EllElement::scaled(const Rational& s) const {
    EllElement r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c * s);
    return r;
}

std::vector<CycloScalar> EllElement::coordinates(int pole_cap) const {
    auto basis = pole_basis(pole_cap);
    std::vector<CycloScalar> v(basis.size(), CycloScalar::zero(1));
    for (const auto& [e, c] : terms_) {
        bool found = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].x_exp == e.first && basis[i].y_exp == e.second) {
                v[i] = CycloScalar::from_rational(1, c);
                found = true;
                break;
            }
        }
        if (!found)
            raise(Errc::DegreeMismatch, "element has pole order above the requested bound");
    }
    return v;
}

std::string EllElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        PoleBasisElement pb{e.first, e.second};
        if (pb.x_exp == 0 && pb.y_exp == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << pb.str();
        }
        first = false;
    }
    return os.str();
}

EllElement ell_multiply(const WeierstrassCurve& c, const EllElement& f, const EllElement& g) {
    // raw product, y-exponents up to 2
    std::map<std::pair<int, int>, Rational> raw;
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            auto key = std::make_pair(ef.first + eg.first, ef.second + eg.second);
            raw[key] += cf * cg;
        }
    EllElement out;
    for (const auto& [e, coeff] : raw) {
        if (coeff.is_zero()) continue;
        if (e.second <= 1) {
            out.add_term(e.first, e.second, coeff);
        } else {
            // y^2 = x^3 + A x + B
            out.add_term(e.first + 3, e.second - 2, coeff);
            out.add_term(e.first + 1, e.second - 2, coeff * c.A);
            out.add_term(e.first, e.second - 2, coeff * c.B);
        }
    }
    return out;
}

EllMultReport multmap_image_ell(const WeierstrassCurve& c, int pole_cap, int fold) {
    if (fold < 1) raise(Errc::DegreeNegative, "fold must be >= 1");
    EllMultReport rep;
    rep.pole_cap = pole_cap;
    rep.fold = fold;
    rep.source_basis = pole_basis(pole_cap);
    rep.target_basis = pole_basis(pole_cap * fold);

    // all fold-size multisets of source basis elements
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            tuples.push_back(cur);
            return;
        }
        std::size_t start = cur.empty() ? 0 : cur.back();
        for (std::size_t i = start; i < rep.source_basis.size(); ++i) {
            cur.push_back(i);
            self(self, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, fold);

    ExactMatrix rows(tuples.size(), rep.target_basis.size(), 1);
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        EllElement prod = EllElement::from_basis(PoleBasisElement{0, 0});
        for (std::size_t i : tuples[r])
            prod = ell_multiply(c, prod, EllElement::from_basis(rep.source_basis[i]));
        auto coords = prod.coordinates(pole_cap * fold);
        for (std::size_t j = 0; j < coords.size(); ++j) rows.at(r, j) = coords[j];
    }
    rep.image = rref(rows).space;
    std::vector<bool> pivot(rep.target_basis.size(), false);
    for (std::size_t p : rep.image.pivots) pivot[p] = true;
    for (std::size_t j = 0; j < rep.target_basis.size(); ++j)
        if (!pivot[j]) rep.cokernel.push_back(rep.target_basis[j]);
    return rep;
}

std::optional<std::vector<CycloScalar>> decompose_in_ell_image(const WeierstrassCurve& c,
                                                               int pole_cap, int fold,
                                                               const EllElement& s) {
    EllMultReport rep = multmap_image_ell(c, pole_cap, fold);
    return solve_membership(rep.image, s.coordinates(pole_cap * fold));
}

} // namespace covmf
