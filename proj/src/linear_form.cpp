#include "schubert/linear_form.hpp"

#include <stdexcept>

namespace schubert {

LinearForm::LinearForm(int n) {
    if (n < 1) throw std::invalid_argument("LinearForm: rank must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(n), Rational(0));
}

bool LinearForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Rational LinearForm::coeff_sum() const {
    Rational s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
    if (rank() != other.rank()) throw std::invalid_argument("LinearForm: rank mismatch");
    LinearForm out(rank());
    for (int i = 1; i <= rank(); ++i) out.coeff(i) = coeff(i) + other.coeff(i);
    return out;
}

LinearForm LinearForm::operator-(const LinearForm& other) const {
    if (rank() != other.rank()) throw std::invalid_argument("LinearForm: rank mismatch");
    LinearForm out(rank());
    for (int i = 1; i <= rank(); ++i) out.coeff(i) = coeff(i) - other.coeff(i);
    return out;
}

LinearForm LinearForm::operator-() const {
    LinearForm out(rank());
    for (int i = 1; i <= rank(); ++i) out.coeff(i) = -coeff(i);
    return out;
}

LinearForm LinearForm::acted_by(const Permutation& w) const {
    if (w.rank() != rank()) throw std::invalid_argument("LinearForm: rank mismatch with permutation");
    LinearForm out(rank());
    for (int i = 1; i <= rank(); ++i) out.coeff(w(i)) += coeff(i);
    return out;
}

LinearForm LinearForm::coordinate(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("LinearForm: coordinate index out of range");
    LinearForm f(n);
    f.coeff(i) = 1;
    return f;
}

LinearForm LinearForm::simple_root(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("LinearForm: simple root index out of range");
    LinearForm f(n);
    f.coeff(i) = 1;
    f.coeff(i + 1) = -1;
    return f;
}

LinearForm LinearForm::positive_root(int n, int i, int j) {
    if (i < 1 || j > n || i >= j) throw std::invalid_argument("LinearForm: need 1 <= i < j <= n");
    LinearForm f(n);
    f.coeff(i) = 1;
    f.coeff(j) = -1;
    return f;
}

LinearForm LinearForm::fundamental_weight(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("LinearForm: weight index out of range");
    LinearForm f(n);
    for (int j = 1; j <= i; ++j) f.coeff(j) = 1;
    return f;
}

}  // namespace schubert
