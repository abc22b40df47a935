#pragma once

#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/rational.hpp"

namespace schubert {

// Rational linear form sum_i coeffs[i] * L_{i+1} in the coordinates L_1..L_n.
// Stored verbatim; the sl_n relation sum L_i = 0 is handled at conversion
// time (to_alpha), not by normalization here.
class LinearForm {
public:
    explicit LinearForm(int n);  // zero form

    int rank() const { return static_cast<int>(coeffs_.size()); }
    const Rational& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i) - 1]; }
    Rational& coeff(int i) { return coeffs_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    Rational coeff_sum() const;

    LinearForm operator+(const LinearForm& other) const;
    LinearForm operator-(const LinearForm& other) const;
    LinearForm operator-() const;
    bool operator==(const LinearForm&) const = default;

    /// Action of w: L_j goes to L_{w(j)}.
    LinearForm acted_by(const Permutation& w) const;

    static LinearForm coordinate(int n, int i);              // L_i
    static LinearForm simple_root(int n, int i);             // alpha_i = L_i - L_{i+1}
    static LinearForm positive_root(int n, int i, int j);    // L_i - L_j, i < j
    static LinearForm fundamental_weight(int n, int i);      // chi_i = L_1 + ... + L_i

private:
    std::vector<Rational> coeffs_;
};

}  // namespace schubert
