#include "covmf/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "covmf/error.hpp"

namespace covmf {

UniPoly UniPoly::monomial(int degree, const Rational& coeff) {
    if (coeff.is_zero()) return UniPoly{};
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(int(i)) + o.coeff(int(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(int(i)) - o.coeff(int(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly{};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& r) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * r;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly{}, rem};
    std::vector<Rational> q(rem.degree() - divisor.degree() + 1);
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / divisor.leading();
        q[shift] = factor;
        rem = rem - (divisor * UniPoly::monomial(shift, factor));
    }
    return {UniPoly(std::move(q)), rem};
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

int euler_phi(int d) {
    if (d < 1) raise(Errc::InvalidVariety, "euler_phi needs d >= 1");
    int result = d, n = d;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

UniPoly cyclotomic_polynomial(int d) {
    if (d < 1) raise(Errc::InvalidVariety, "cyclotomic_polynomial needs d >= 1");
    // z^d - 1
    std::vector<Rational> c(d + 1);
    c[0] = Rational(-1);
    c[d] = Rational(1);
    UniPoly num(std::move(c));
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [q, r] = num.divmod(cyclotomic_polynomial(e));
        if (!r.is_zero()) raise(Errc::InvalidVariety, "cyclotomic division not exact");
        num = q;
    }
    return num;
}

namespace {

// Reduction data for one order, built once and shared.
struct CycloTable {
    int phi = 0;
    UniPoly modulus;
    // zpow[k] = coefficients of z^(phi+k) reduced mod Phi_d, k = 0..phi-2.
    std::vector<std::vector<Rational>> zpow;
};

const CycloTable& cyclo_table(int d) {
    static std::mutex mu;
    static std::map<int, CycloTable> tables;
    std::lock_guard<std::mutex> lk(mu);
    auto it = tables.find(d);
    if (it != tables.end()) return it->second;
    CycloTable t;
    t.modulus = cyclotomic_polynomial(d);
    t.phi = t.modulus.degree();
    if (t.phi != euler_phi(d)) raise(Errc::InvalidVariety, "cyclotomic degree mismatch");
    if (t.phi >= 2) {
        t.zpow.resize(t.phi - 1);
        // z^phi = -(Phi - z^phi); higher powers by repeated multiplication by z.
        std::vector<Rational> cur(t.phi);
        for (int i = 0; i < t.phi; ++i) cur[i] = -t.modulus.coeff(i);
        t.zpow[0] = cur;
        for (int k = 1; k < t.phi - 1; ++k) {
            std::vector<Rational> next(t.phi);
            // multiply by z, folding the overflow term through zpow[0]
            Rational top = cur[t.phi - 1];
            for (int i = t.phi - 1; i >= 1; --i) next[i] = cur[i - 1];
            next[0] = Rational(0);
            if (!top.is_zero())
                for (int i = 0; i < t.phi; ++i) next[i] += top * t.zpow[0][i];
            t.zpow[k] = next;
            cur = next;
        }
    }
    return tables.emplace(d, std::move(t)).first->second;
}

} // namespace

CycloScalar::CycloScalar(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    const auto& t = cyclo_table(order);
    if (static_cast<int>(c_.size()) != t.phi)
        raise(Errc::OrderMismatch, "coefficient vector length must equal phi(order)");
}

CycloScalar CycloScalar::from_rational(int order, const Rational& r) {
    std::vector<Rational> c(euler_phi(order));
    c[0] = r;
    return CycloScalar(order, std::move(c));
}

CycloScalar CycloScalar::zeta(int order) {
    if (order == 1) return from_rational(1, Rational(1));
    if (order == 2) return from_rational(2, Rational(-1));
    std::vector<Rational> c(euler_phi(order));
    c[1] = Rational(1);
    return CycloScalar(order, std::move(c));
}

bool CycloScalar::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool CycloScalar::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> CycloScalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

CycloScalar CycloScalar::promoted(int order) const {
    if (order == order_) return *this;
    auto r = as_rational();
    if (!r) raise(Errc::OrderMismatch, "cannot embed a non-rational scalar into another order");
    return from_rational(order, *r);
}

namespace {
// Align two scalars on one order; plain rationals embed anywhere.
std::pair<CycloScalar, CycloScalar> aligned(const CycloScalar& a, const CycloScalar& b) {
    if (a.order() == b.order()) return {a, b};
    if (a.is_rational()) return {a.promoted(b.order()), b};
    if (b.is_rational()) return {a, b.promoted(a.order())};
    raise(Errc::OrderMismatch, "scalar orders differ: " + std::to_string(a.order()) + " vs " +
                                   std::to_string(b.order()));
}
} // namespace

CycloScalar CycloScalar::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return CycloScalar(order_, std::move(c));
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
    auto [a, b] = aligned(*this, o);
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return CycloScalar(a.order_, std::move(c));
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const { return *this + (-o); }

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
    auto [a, b] = aligned(*this, o);
    const auto& t = cyclo_table(a.order_);
    int phi = t.phi;
    std::vector<Rational> conv(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.c_[j].is_zero()) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rational> c(conv.begin(), conv.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k].is_zero()) continue;
        const auto& row = t.zpow[k - phi];
        for (int i = 0; i < phi; ++i) c[i] += conv[k] * row[i];
    }
    return CycloScalar(a.order_, std::move(c));
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero scalar");
    if (auto r = as_rational()) return from_rational(order_, r->inverse());
    const auto& t = cyclo_table(order_);
    // extended Euclid: u*a + v*Phi = gcd (a nonzero, Phi irreducible => gcd constant)
    UniPoly r0 = t.modulus, r1 = UniPoly(std::vector<Rational>(c_));
    UniPoly u0 = UniPoly{}, u1 = UniPoly::constant(Rational(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, rem] = r0.divmod(r1);
        UniPoly u2 = u0 - q * u1;
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    if (r1.is_zero()) raise(Errc::DivisionByZero, "scalar not invertible");
    UniPoly inv = u1.scaled(r1.coeff(0).inverse());
    auto [q, rem] = inv.divmod(t.modulus);
    (void)q;
    std::vector<Rational> c(t.phi);
    for (int i = 0; i < t.phi; ++i) c[i] = rem.coeff(i);
    return CycloScalar(order_, std::move(c));
}

CycloScalar CycloScalar::pow(unsigned long e) const {
    CycloScalar result = one(order_);
    CycloScalar base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

bool CycloScalar::operator==(const CycloScalar& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    auto a = as_rational();
    auto b = o.as_rational();
    return a && b && *a == *b;
}

std::string CycloScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (first) {
            if (c_[k].sign() < 0) os << "-";
        } else {
            os << (c_[k].sign() < 0 ? " - " : " + ");
        }
        Rational a = c_[k].abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.str(); }

} // namespace covmf
