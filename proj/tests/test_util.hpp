#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "schubert/polynomial.hpp"

namespace testutil {

inline schubert::Permutation perm(std::initializer_list<int> one_line) {
    return schubert::Permutation(std::vector<int>(one_line));
}

inline schubert::Polynomial alpha(int nvars, int k) {
    return schubert::Polynomial::variable(nvars, k);
}

inline schubert::Polynomial constant(int nvars, long c) {
    return schubert::Polynomial::constant(nvars, schubert::Rational(c));
}

// Dense-ish random polynomial with small integer coefficients.
inline schubert::Polynomial random_polynomial(std::mt19937& gen, int nvars, int max_degree,
                                              int terms) {
    schubert::Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        schubert::Monomial m(static_cast<std::size_t>(nvars), 0);
        int budget = static_cast<int>(gen() % static_cast<unsigned>(max_degree + 1));
        for (int d = 0; d < budget; ++d) m[gen() % static_cast<unsigned>(nvars)] += 1;
        const long c = static_cast<long>(gen() % 9) - 4;
        p.add_term(m, schubert::Rational(c));
    }
    return p;
}

// Random nonzero root-span form L_i - L_j.
inline schubert::LinearForm random_root(std::mt19937& gen, int n) {
    int i = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
    int j = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
    while (j == i) j = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
    if (i > j) std::swap(i, j);
    return schubert::LinearForm::positive_root(n, i, j);
}

inline schubert::Permutation random_permutation(std::mt19937& gen, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = img.size(); i > 1; --i) std::swap(img[i - 1], img[gen() % i]);
    return schubert::Permutation(std::move(img));
}

}  // namespace testutil
