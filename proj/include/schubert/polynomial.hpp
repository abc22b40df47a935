#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/linear_form.hpp"
#include "schubert/permutation.hpp"
#include "schubert/rational.hpp"

namespace schubert {

// Exponent vector over the variables a_1..a_nvars (the simple roots).
using Monomial = std::vector<int>;

// Graded lexicographic, descending, so that map iteration runs from the
// leading term down to the constant.  This is the canonical term order for
// equality and display.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Raised by exact division when the quotient would not be polynomial.  Never
// swallowed: a failure here means the input is outside the integral span.
struct NonExactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact multivariate polynomial in the simple-root variables over Q.  No zero
// coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit Polynomial(int nvars);  // zero
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int k);  // a_k, 1 <= k <= nvars

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree, -1 for the zero polynomial
    bool is_homogeneous(int d) const;
    const TermMap& terms() const { return terms_; }
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// True iff every coefficient is a nonnegative integer.
    bool has_nonnegative_integer_coefficients() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial pow(int e) const;
    bool operator==(const Polynomial&) const = default;

    void add_term(const Monomial& m, const Rational& c);

    /// Canonical text form, e.g. "a2 + 2*a3 + 2*a4 + a5" or "a1^2*a2 - 1/2".
    std::string to_string() const;

private:
    int nvars_;
    TermMap terms_;
};

/// Converts a root-span linear form (coefficient sum zero) into the
/// simple-root basis via partial sums; throws std::invalid_argument when the
/// coefficient sum is nonzero.
Polynomial to_alpha(const LinearForm& f);

/// Ring automorphism induced by w: each a_k is rewritten through L
/// coordinates, permuted, and converted back.
Polynomial weyl_act(const Permutation& w, const Polynomial& f);

/// Exact division by a nonzero root-span linear form; throws NonExactDivision
/// when the remainder does not vanish.
Polynomial exact_div_linear(const Polynomial& f, const LinearForm& ell);

/// Constant term of f; the map f xi^w -> f(0) sigma_w onto ordinary cohomology.
Rational specialize_zero(const Polynomial& f);

}  // namespace schubert
