#ifndef COVMF_TESTS_TESTUTIL_HPP
#define COVMF_TESTS_TESTUTIL_HPP

#include <random>
#include <vector>

#include "covmf/multipoly.hpp"

namespace covmf::testutil {

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int num_range = 9,
                                        int den_range = 5) {
    for (;;) {
        Rational r = random_rational(rng, num_range, den_range);
        if (!r.is_zero()) return r;
    }
}

inline CycloScalar random_scalar(std::mt19937_64& rng, int order) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(euler_phi(order)));
    for (auto& c : coeffs) c = random_rational(rng);
    return CycloScalar(order, std::move(coeffs));
}

inline CycloScalar random_nonzero_scalar(std::mt19937_64& rng, int order) {
    for (;;) {
        CycloScalar s = random_scalar(rng, order);
        if (!s.is_zero()) return s;
    }
}

/// Dense-ish random homogeneous form: every monomial of the degree gets a
/// random coefficient, roughly half of them zero.
inline MultiPoly random_form(std::mt19937_64& rng, Ring ring, int degree) {
    std::uniform_int_distribution<int> keep(0, 1);
    for (;;) {
        MultiPoly p = MultiPoly::zero(ring);
        for (const auto& m : monomials_of_degree(ring.num_vars, degree)) {
            if (keep(rng) == 0) continue;
            p += MultiPoly::from_monomial(
                ring, m, CycloScalar::from_rational(ring.field_order, random_rational(rng)));
        }
        if (!p.is_zero()) return p;
    }
}

/// Random homogeneous form with at most max_terms monomials, all nonzero.
inline MultiPoly random_sparse_form(std::mt19937_64& rng, Ring ring, int degree, int max_terms) {
    auto monomials = monomials_of_degree(ring.num_vars, degree);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    for (;;) {
        MultiPoly p = MultiPoly::zero(ring);
        int k = count(rng);
        for (int i = 0; i < k; ++i)
            p += MultiPoly::from_monomial(
                ring, monomials[pick(rng)],
                CycloScalar::from_rational(ring.field_order, random_nonzero_rational(rng)));
        if (!p.is_zero()) return p;
    }
}

} // namespace covmf::testutil

#endif
