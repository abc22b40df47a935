#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/polynomial.hpp"
#include "test_util.hpp"

using namespace schubert;
using testutil::alpha;
using testutil::constant;
using testutil::perm;

TEST_CASE("ring arithmetic") {
    const Polynomial a1 = alpha(2, 1), a2 = alpha(2, 2);
    CHECK((a1 + (-a1)).is_zero());
    CHECK((a1 * a2).terms().size() == 1);
    CHECK((a1 * a2).coefficient({1, 1}) == 1);

    const Polynomial sq = (a1 + a2) * (a1 + a2);
    Polynomial expected(2);
    expected.add_term({2, 0}, 1);
    expected.add_term({1, 1}, 2);
    expected.add_term({0, 2}, 1);
    CHECK(sq == expected);

    CHECK_THROWS_AS(alpha(2, 1) + alpha(3, 1), std::invalid_argument);
    CHECK((a1 * Rational(0)).is_zero());
    CHECK(a1 * Rational(3, 2) == a1 * constant(2, 3) * Rational(1, 2));
    CHECK(a1.pow(3) == a1 * a1 * a1);
}

TEST_CASE("degree and homogeneity") {
    CHECK(Polynomial(2).degree() == -1);
    CHECK(constant(2, 5).degree() == 0);
    const Polynomial p = alpha(2, 1) * alpha(2, 1) + alpha(2, 2) * alpha(2, 2);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous(2));
    CHECK_FALSE((p + constant(2, 1)).is_homogeneous(2));
}

TEST_CASE("to_alpha partial sums") {
    CHECK(to_alpha(LinearForm::coordinate(7, 2) - LinearForm::coordinate(7, 6)) ==
          alpha(6, 2) + alpha(6, 3) + alpha(6, 4) + alpha(6, 5));
    CHECK(to_alpha(LinearForm::simple_root(3, 1)) == alpha(2, 1));
    CHECK_THROWS_AS(to_alpha(LinearForm::fundamental_weight(3, 1)), std::invalid_argument);
}

TEST_CASE("to_alpha inverts the root substitution on degree-one forms") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 5u);
        LinearForm f(n);
        for (int k = 1; k <= n - 1; ++k) {
            const long c = static_cast<long>(gen() % 9u) - 4;
            // accumulate c * (L_k - L_{k+1})
            f.coeff(k) += c;
            f.coeff(k + 1) += -c;
        }
        const Polynomial p = to_alpha(f);
        LinearForm back(n);
        for (const auto& [m, c] : p.terms())
            for (int k = 1; k <= n - 1; ++k)
                if (m[static_cast<std::size_t>(k) - 1] == 1) {
                    back.coeff(k) += c;
                    back.coeff(k + 1) += -c;
                }
        CHECK(back == f);
    }
}

TEST_CASE("weyl_act on simple roots") {
    CHECK(weyl_act(perm({1, 3, 2}), alpha(2, 1)) == alpha(2, 1) + alpha(2, 2));
    CHECK(weyl_act(Permutation(3), alpha(2, 1) * alpha(2, 2)) == alpha(2, 1) * alpha(2, 2));
    CHECK(weyl_act(permutation_from_word({4}, 7), alpha(6, 3)) == alpha(6, 3) + alpha(6, 4));
}

TEST_CASE("weyl_act is a ring action") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(gen() % 3u);
        const Permutation u = testutil::random_permutation(gen, n);
        const Permutation v = testutil::random_permutation(gen, n);
        const Polynomial f = testutil::random_polynomial(gen, n - 1, 3, 4);
        const Polynomial g = testutil::random_polynomial(gen, n - 1, 3, 4);
        CHECK(weyl_act(u, weyl_act(v, f)) == weyl_act(u * v, f));
        CHECK(weyl_act(u, f * g) == weyl_act(u, f) * weyl_act(u, g));
        CHECK(weyl_act(u, f + g) == weyl_act(u, f) + weyl_act(u, g));
    }
}

TEST_CASE("exact division by a linear form") {
    const Polynomial a1 = alpha(2, 1), a2 = alpha(2, 2);
    CHECK(exact_div_linear(a1 * a1, LinearForm::simple_root(3, 1)) == a1);

    const LinearForm a1_plus_a2 = LinearForm::positive_root(3, 1, 3);  // L1 - L3
    CHECK(exact_div_linear(a1 * a1 - a2 * a2, a1_plus_a2) == a1 - a2);

    CHECK_THROWS_AS(exact_div_linear(a1, LinearForm::simple_root(3, 2)), NonExactDivision);
    CHECK_THROWS_AS(exact_div_linear(a1, LinearForm(3)), std::invalid_argument);
    CHECK(exact_div_linear(Polynomial(2), LinearForm::simple_root(3, 1)).is_zero());
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 gen(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 5u);
        const Polynomial f = testutil::random_polynomial(gen, n - 1, 3, 5);
        const LinearForm ell = testutil::random_root(gen, n);
        CHECK(exact_div_linear(f * to_alpha(ell), ell) == f);
    }
}

TEST_CASE("specialize_zero") {
    CHECK(specialize_zero(Polynomial(6)) == 0);
    CHECK(specialize_zero(constant(6, 1)) == 1);
    const Polynomial degree_one_value =
        alpha(6, 2) + alpha(6, 3) * Rational(2) + alpha(6, 4) * Rational(2) + alpha(6, 5);
    CHECK(specialize_zero(degree_one_value) == 0);
}

TEST_CASE("specialize_zero is a ring homomorphism") {
    std::mt19937 gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = testutil::random_polynomial(gen, 3, 3, 4);
        const Polynomial g = testutil::random_polynomial(gen, 3, 3, 4);
        CHECK(specialize_zero(f + g) == specialize_zero(f) + specialize_zero(g));
        CHECK(specialize_zero(f * g) == specialize_zero(f) * specialize_zero(g));
    }
}

TEST_CASE("text rendering") {
    const Polynomial p =
        alpha(6, 2) + alpha(6, 3) * Rational(2) + alpha(6, 4) * Rational(2) + alpha(6, 5);
    CHECK(p.to_string() == "a2 + 2*a3 + 2*a4 + a5");
    CHECK(Polynomial(3).to_string() == "0");
    CHECK(constant(3, 1).to_string() == "1");
    CHECK((-constant(3, 1)).to_string() == "-1");
    CHECK((alpha(2, 1) * alpha(2, 1) - alpha(2, 2) * Rational(1, 2)).to_string() ==
          "a1^2 - 1/2*a2");
    CHECK((alpha(2, 1) * alpha(2, 2).pow(2) * Rational(3)).to_string() == "3*a1*a2^2");
}

TEST_CASE("nonnegative integer detection") {
    CHECK((alpha(2, 1) + constant(2, 2)).has_nonnegative_integer_coefficients());
    CHECK_FALSE((alpha(2, 1) * Rational(1, 2)).has_nonnegative_integer_coefficients());
    CHECK_FALSE((-alpha(2, 1)).has_nonnegative_integer_coefficients());
}
