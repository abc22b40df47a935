#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/json_io.hpp"
#include "test_util.hpp"

using namespace schubert;
using testutil::perm;

TEST_CASE("polynomial json round trip") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int nvars = 1 + static_cast<int>(gen() % 5u);
        Polynomial p = testutil::random_polynomial(gen, nvars, 4, 6);
        p = p * Rational(1, 3);  // force non-integer coefficients through
        CHECK(polynomial_from_json(polynomial_to_json(p), nvars) == p);
    }
    CHECK(polynomial_from_json(polynomial_to_json(Polynomial(3)), 3).is_zero());
}

TEST_CASE("polynomial json rejects a zero denominator") {
    auto j = nlohmann::json::parse(R"({"terms":[{"exp":[1,0],"num":"1","den":"0"}]})");
    CHECK_THROWS_AS(polynomial_from_json(j, 2), std::invalid_argument);
}

TEST_CASE("expansion json round trip") {
    const Permutation w = permutation_from_word({4, 3, 5, 4}, 7);
    const SchubertExpansion e = pieri_expand(4, 2, w);
    const auto j = expansion_to_json(e, 4, 2, w, true);
    CHECK(expansion_from_json(j) == e);

    const Permutation s2 = perm({1, 3, 2});
    const SchubertExpansion small = pieri_expand(2, 1, s2);
    CHECK(expansion_from_json(expansion_to_json(small, 2, 1, s2, false)) == small);
}

TEST_CASE("expansion json carries the witness traces") {
    const Permutation w = permutation_from_word({4, 3, 5, 4}, 7);
    const auto j = expansion_to_json(pieri_expand(4, 2, w), 4, 2, w, true);
    CHECK(j.at("n") == 7);
    CHECK(j.at("c") == nlohmann::json({4, 2}));
    CHECK(j.at("w") == "s4 s3 s5 s4");

    bool found = false;
    for (const auto& term : j.at("terms")) {
        if (term.at("u") != "s2 s4 s3 s5 s4") continue;
        found = true;
        CHECK(term.at("one_line") == nlohmann::json({1, 3, 5, 6, 2, 4, 7}));
        CHECK(term.at("trace").at("p") == 1);
        CHECK(term.at("trace").at("I") == nlohmann::json({2}));
        CHECK(term.at("trace").at("lambda") == nlohmann::json({1, 1, 0}));
        CHECK(parse_permutation(term.at("trace").at("assoc").get<std::string>(), 7) ==
              perm({1, 5, 6, 2, 3, 4, 7}));
    }
    CHECK(found);
}

TEST_CASE("coefficient json") {
    const Permutation w = permutation_from_word({4, 3, 5, 4}, 7);
    const Permutation u = permutation_from_word({2, 4, 3, 5, 4}, 7);
    const auto j = coefficient_to_json(4, 2, w, u, pieri_coefficient_traced(4, 2, w, u));
    CHECK(j.at("u") == "s2 s4 s3 s5 s4");
    CHECK(j.at("trace").at("lambda") == nlohmann::json({1, 1, 0}));
    CHECK(polynomial_from_json(j.at("coeff"), 6) == pieri_coefficient(4, 2, w, u));
}
