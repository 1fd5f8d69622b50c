#include "covmf/multipoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "covmf/error.hpp"

namespace covmf {

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << i;
        if (exponents[i] > 1) os << "^" << exponents[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

namespace {
void enumerate_exponents(int vars_left, int degree_left, std::vector<int>& cur,
                         std::vector<Monomial>& out) {
    if (vars_left == 1) {
        cur.push_back(degree_left);
        out.push_back(Monomial{cur});
        cur.pop_back();
        return;
    }
    for (int e = degree_left; e >= 0; --e) {
        cur.push_back(e);
        enumerate_exponents(vars_left - 1, degree_left - e, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Monomial> monomials_of_degree(int num_vars, int degree) {
    if (num_vars < 1) raise(Errc::InvalidVariety, "need at least one variable");
    if (degree < 0) raise(Errc::DegreeNegative, "monomials_of_degree needs degree >= 0");
    std::vector<Monomial> out;
    std::vector<int> cur;
    enumerate_exponents(num_vars, degree, cur, out);
    return out;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return r;
}

MultiPoly::MultiPoly(Ring ring)
    : ring_(ring), terms_(TermOrder{ring.num_vars, ring.has_T, ring.t_weight}) {}

MultiPoly MultiPoly::constant(Ring ring, const CycloScalar& c) {
    MultiPoly p(ring);
    p.add_term(std::vector<int>(ring.slots(), 0), c.promoted(ring.field_order));
    return p;
}

MultiPoly MultiPoly::constant(Ring ring, const Rational& c) {
    return constant(ring, CycloScalar::from_rational(ring.field_order, c));
}

MultiPoly MultiPoly::variable(Ring ring, int index) {
    if (index < 0 || index >= ring.num_vars)
        raise(Errc::ShapeMismatch, "variable index out of range");
    std::vector<int> e(ring.slots(), 0);
    e[index] = 1;
    return from_monomial(ring, std::move(e), CycloScalar::one(ring.field_order));
}

MultiPoly MultiPoly::t_variable(Ring ring) {
    if (!ring.has_T) raise(Errc::ShapeMismatch, "ring has no T variable");
    std::vector<int> e(ring.slots(), 0);
    e[ring.num_vars] = 1;
    return from_monomial(ring, std::move(e), CycloScalar::one(ring.field_order));
}

MultiPoly MultiPoly::from_monomial(Ring ring, std::vector<int> exponents, const CycloScalar& c) {
    if (static_cast<int>(exponents.size()) != ring.slots())
        raise(Errc::ShapeMismatch, "exponent vector length does not match ring");
    for (int e : exponents)
        if (e < 0) raise(Errc::ShapeMismatch, "negative exponent");
    MultiPoly p(ring);
    p.add_term(exponents, c.promoted(ring.field_order));
    return p;
}

MultiPoly MultiPoly::from_monomial(Ring ring, const Monomial& m, const CycloScalar& c) {
    std::vector<int> e = m.exponents;
    if (static_cast<int>(e.size()) != ring.num_vars)
        raise(Errc::ShapeMismatch, "monomial does not match ring variable count");
    if (ring.has_T) e.push_back(0);
    return from_monomial(ring, std::move(e), c);
}

void MultiPoly::add_term(const std::vector<int>& e, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

namespace {
void require_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b)) raise(Errc::ShapeMismatch, "polynomials live in different rings");
}
} // namespace

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(ring_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_ring(ring_, o.ring_);
    MultiPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_same_ring(ring_, o.ring_);
    MultiPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_ring(ring_, o.ring_);
    MultiPoly p(ring_);
    std::vector<int> e(ring_.slots());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < ring_.slots(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::scaled(const CycloScalar& c) const {
    MultiPoly p(ring_);
    if (c.is_zero()) return p;
    CycloScalar cc = c.promoted(ring_.field_order);
    for (const auto& [e, v] : terms_) p.add_term(e, v * cc);
    return p;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

int MultiPoly::weighted_degree() const {
    if (terms_.empty()) return -1;
    // terms are sorted by weighted degree descending
    return terms_.key_comp().weighted_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = weighted_degree();
    const auto& cmp = terms_.key_comp();
    for (const auto& [e, c] : terms_)
        if (cmp.weighted_degree(e) != d) return false;
    return true;
}

int MultiPoly::t_degree() const {
    if (!ring_.has_T) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[ring_.num_vars]);
    return d;
}

CycloScalar MultiPoly::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    if (it == terms_.end()) return CycloScalar::zero(ring_.field_order);
    return it->second;
}

CycloScalar MultiPoly::evaluate(const std::vector<Rational>& xs,
                                const std::optional<Rational>& t) const {
    if (static_cast<int>(xs.size()) != ring_.num_vars)
        raise(Errc::DimensionMismatch, "evaluation point has wrong arity");
    if (ring_.has_T && !t) raise(Errc::DimensionMismatch, "ring has T but no T value given");
    CycloScalar acc = CycloScalar::zero(ring_.field_order);
    for (const auto& [e, c] : terms_) {
        Rational m(1);
        for (int i = 0; i < ring_.num_vars; ++i)
            for (int k = 0; k < e[i]; ++k) m *= xs[i];
        if (ring_.has_T)
            for (int k = 0; k < e[ring_.num_vars]; ++k) m *= *t;
        acc += c * CycloScalar::from_rational(ring_.field_order, m);
    }
    return acc;
}

MultiPoly MultiPoly::partial_derivative(int index) const {
    if (index < 0 || index >= ring_.num_vars)
        raise(Errc::ShapeMismatch, "derivative index out of range");
    MultiPoly p(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        std::vector<int> ee = e;
        CycloScalar factor = c * CycloScalar::from_rational(ring_.field_order, Rational(ee[index]));
        --ee[index];
        p.add_term(ee, factor);
    }
    return p;
}

MultiPoly MultiPoly::lifted_with_T(int t_weight) const {
    if (ring_.has_T) {
        if (ring_.t_weight == t_weight) return *this;
        raise(Errc::ShapeMismatch, "polynomial already has T with a different weight");
    }
    MultiPoly p(ring_.with_T(t_weight));
    for (const auto& [e, c] : terms_) {
        std::vector<int> ee = e;
        ee.push_back(0);
        p.terms_.emplace(std::move(ee), c);
    }
    return p;
}

MultiPoly MultiPoly::promoted_order(int field_order) const {
    if (ring_.field_order == field_order) return *this;
    Ring r = ring_;
    r.field_order = field_order;
    MultiPoly p(r);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c.promoted(field_order));
    return p;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        // power product, T printed first to match the term order
        std::ostringstream pp;
        bool have_var = false;
        if (ring_.has_T && e[ring_.num_vars] > 0) {
            pp << "T";
            if (e[ring_.num_vars] > 1) pp << "^" << e[ring_.num_vars];
            have_var = true;
        }
        for (int i = 0; i < ring_.num_vars; ++i) {
            if (e[i] == 0) continue;
            if (have_var) pp << "*";
            pp << "x" << i;
            if (e[i] > 1) pp << "^" << e[i];
            have_var = true;
        }

        auto r = c.as_rational();
        if (r) {
            if (first) {
                if (r->sign() < 0) os << "-";
            } else {
                os << (r->sign() < 0 ? " - " : " + ");
            }
            Rational a = r->abs();
            if (!have_var) {
                os << a.str();
            } else {
                if (!a.is_one()) os << a.str() << "*";
                os << pp.str();
            }
        } else {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (have_var) os << "*" << pp.str();
        }
        first = false;
    }
    return os.str();
}

std::string format_poly(const MultiPoly& p) { return p.str(); }

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

namespace {

class PolyParser {
  public:
    PolyParser(Ring ring, std::string_view text) : ring_(ring), s_(text) {}

    MultiPoly parse() {
        MultiPoly acc(ring_);
        skip_ws();
        if (done()) throw ParseError("empty polynomial", 0);
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (get() == '-');
        acc += parse_term(negative);
        skip_ws();
        while (!done()) {
            char op = get();
            if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_ - 1);
            acc += parse_term(op == '-');
            skip_ws();
        }
        return acc;
    }

  private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    MultiPoly parse_term(bool negative) {
        skip_ws();
        if (done()) throw ParseError("expected a term", pos_);
        CycloScalar coeff = CycloScalar::one(ring_.field_order);
        std::vector<int> exps(ring_.slots(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (done()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff * parse_rational();
            } else if (c == '(') {
                coeff = coeff * parse_cyclo();
            } else if (c == 'x' || c == 'T') {
                parse_variable(exps);
            } else {
                break;
            }
            saw_factor = true;
            skip_ws();
            if (!done() && peek() == '*') {
                get();
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("expected a coefficient or variable", pos_);
        if (negative) coeff = -coeff;
        return MultiPoly::from_monomial(ring_, std::move(exps), coeff);
    }

    CycloScalar parse_rational() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string num(s_.substr(start, pos_ - start));
        std::string den = "1";
        std::size_t save = pos_;
        skip_ws();
        if (!done() && peek() == '/') {
            get();
            skip_ws();
            std::size_t dstart = pos_;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected denominator digits", pos_);
            den = std::string(s_.substr(dstart, pos_ - dstart));
        } else {
            pos_ = save;
        }
        auto r = Rational::parse(num + "/" + den);
        if (!r) throw ParseError("bad rational literal", start);
        return CycloScalar::from_rational(ring_.field_order, *r);
    }

    // "(c0 + c1*z + c2*z^2)" with rational c_k
    CycloScalar parse_cyclo() {
        std::size_t open = pos_;
        get(); // '('
        int phi = euler_phi(ring_.field_order);
        std::vector<Rational> coeffs(phi);
        bool first = true;
        while (true) {
            skip_ws();
            if (done()) throw ParseError("unterminated scalar", open);
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = (get() == '-');
            } else if (!first) {
                if (peek() == ')') {
                    get();
                    break;
                }
                throw ParseError("expected '+', '-' or ')'", pos_);
            }
            skip_ws();
            Rational value(1);
            bool saw_number = false;
            if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
                auto c = parse_rational().as_rational();
                value = *c;
                saw_number = true;
                skip_ws();
                if (!done() && peek() == '*') {
                    get();
                    skip_ws();
                }
            }
            int zexp = 0;
            if (!done() && peek() == 'z') {
                get();
                zexp = 1;
                if (!done() && peek() == '^') {
                    get();
                    zexp = parse_int();
                }
            } else if (!saw_number) {
                throw ParseError("expected rational or 'z'", pos_);
            }
            if (zexp >= phi)
                throw ParseError("z power exceeds field degree", pos_);
            coeffs[zexp] += neg ? -value : value;
            first = false;
            skip_ws();
            if (!done() && peek() == ')') {
                get();
                break;
            }
        }
        return CycloScalar(ring_.field_order, std::move(coeffs));
    }

    void parse_variable(std::vector<int>& exps) {
        std::size_t start = pos_;
        char c = get();
        int slot;
        if (c == 'T') {
            if (!ring_.has_T) throw ParseError("variable T not available in this ring", start);
            slot = ring_.num_vars;
        } else {
            if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected variable index after 'x'", pos_);
            int idx = parse_int();
            if (idx >= ring_.num_vars)
                throw ParseError("variable index out of range", start);
            slot = idx;
        }
        int e = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            get();
            skip_ws();
            e = parse_int();
        }
        exps[slot] += e;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", start);
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    Ring ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(Ring ring, std::string_view text, bool require_homogeneous) {
    PolyParser parser(ring, text);
    MultiPoly p = parser.parse();
    if (require_homogeneous && !p.is_homogeneous())
        raise(Errc::NonHomogeneous, "polynomial is not homogeneous: " + std::string(text));
    return p;
}

} // namespace covmf
