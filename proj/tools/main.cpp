// Command-line front end: Schubert-basis products, single structure
// constants, full tables, and the verification suites.
//
// Exit codes: 0 ok, 2 usage or parameter error, 3 verification or oracle
// failure.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "schubert/json_io.hpp"
#include "schubert/pieri.hpp"
#include "schubert/verify.hpp"

namespace {

using namespace schubert;

struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SchubertExpansion solve_expansion(int k, int m, const Permutation& w) {
    auto group = SymmetricGroup::shared(w.rank());
    XiTable xi(group);
    return expand_schubert(
        pointwise_product(xi.xi_function(c_km(k, m, w.rank())), xi.xi_function(w)), xi);
}

SchubertExpansion expansion_by_oracle(const std::string& oracle, int k, int m,
                                      const Permutation& w) {
    if (oracle == "pieri") return pieri_expand(k, m, w);
    if (oracle == "recursion") return monk_expand(k, m, w);
    if (oracle == "solve") return solve_expansion(k, m, w);
    // oracle == "all": compute every route and insist on exact agreement
    SchubertExpansion rule = pieri_expand(k, m, w);
    if (!(rule == monk_expand(k, m, w)) || !(rule == solve_expansion(k, m, w)))
        throw OracleMismatch("oracle disagreement at k=" + std::to_string(k) +
                             " m=" + std::to_string(m) + " w=" + format_word(w));
    return rule;
}

void print_expansion_text(const SchubertExpansion& e, int k, int m, const Permutation& w) {
    std::cout << "n=" << e.rank() << " c[" << k << "," << m << "] w=" << format_word(w) << " ("
              << e.size() << " terms)\n";
    for (const auto& [u, coeff] : e.coefficients())
        std::cout << "u=" << format_word(u) << " : " << coeff.to_string() << "\n";
}

int run_product(int n, int k, int m, const std::string& w_text, const std::string& format,
                const std::string& oracle) {
    const Permutation w = parse_permutation(w_text, n);
    const SchubertExpansion e = expansion_by_oracle(oracle, k, m, w);
    if (format == "json")
        std::cout << expansion_to_json(e, k, m, w, true).dump(2) << "\n";
    else
        print_expansion_text(e, k, m, w);
    return 0;
}

int run_coeff(int n, int k, int m, const std::string& w_text, const std::string& u_text,
              const std::string& format, const std::string& oracle) {
    const Permutation w = parse_permutation(w_text, n);
    const Permutation u = parse_permutation(u_text, n);
    PieriCoefficient pc = pieri_coefficient_traced(k, m, w, u);  // trace doubles as witness
    if (oracle == "recursion") {
        pc.value = monk_recursion_coefficient(k, m, w, u);
    } else if (oracle == "solve") {
        pc.value = solve_expansion(k, m, w).at(u);
    } else if (oracle == "all") {
        if (!(monk_recursion_coefficient(k, m, w, u) == pc.value))
            throw OracleMismatch("rule/recursion disagreement for u=" + format_word(u));
        if (!(solve_expansion(k, m, w).at(u) == pc.value))
            throw OracleMismatch("rule/solve disagreement for u=" + format_word(u));
    }
    if (format == "json")
        std::cout << coefficient_to_json(k, m, w, u, pc).dump(2) << "\n";
    else
        std::cout << pc.value.to_string() << "\n";
    return 0;
}

int run_table(int n, int k, int m, const std::string& format, const std::string& oracle) {
    auto group = SymmetricGroup::shared(n);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const Permutation& w : group->elements())
            rows.push_back(expansion_to_json(expansion_by_oracle(oracle, k, m, w), k, m, w, true));
        std::cout << nlohmann::json{{"n", n}, {"c", {k, m}}, {"rows", std::move(rows)}}.dump(2)
                  << "\n";
    } else {
        for (const Permutation& w : group->elements()) {
            print_expansion_text(expansion_by_oracle(oracle, k, m, w), k, m, w);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(int n, const std::string& suite, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument("verify: n=" + std::to_string(n) +
                                    " outside the configured bound (max-n=" +
                                    std::to_string(max_n) + ")");
    bool ok = true;
    for (const SuiteResult& r : verify_suite(suite, n)) {
        std::cout << "suite " << r.name << ": " << (r.passed() ? "PASS" : "FAIL")
                  << " checks=" << r.checks;
        if (!r.passed()) std::cout << " failures=" << r.failures.size();
        std::cout << "\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        ok = ok && r.passed();
    }
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant Schubert calculus on the complete flag manifold"};
    app.require_subcommand(1);

    int n = 0, k = 0, m = 0, max_n = 5;
    std::string w_text, u_text, format = "text", oracle = "pieri", suite = "all";

    const auto format_check = CLI::IsMember({"text", "json"});
    const auto oracle_check = CLI::IsMember({"pieri", "recursion", "solve", "all"});

    CLI::App* product = app.add_subcommand("product", "Expand xi^{c[k,m]} * xi^w");
    product->add_option("--n", n, "rank of S_n")->required();
    product->add_option("--k", k, "column index")->required();
    product->add_option("--m", m, "degree")->required();
    product->add_option("--w", w_text, "permutation (word, one-line, or digit form; empty = e)");
    product->add_option("--format", format)->check(format_check);
    product->add_option("--oracle", oracle)->check(oracle_check);

    CLI::App* coeff = app.add_subcommand("coeff", "Single structure constant with its witness");
    coeff->add_option("--n", n)->required();
    coeff->add_option("--k", k)->required();
    coeff->add_option("--m", m)->required();
    coeff->add_option("--w", w_text);
    coeff->add_option("--u", u_text)->required();
    coeff->add_option("--format", format)->check(format_check);
    coeff->add_option("--oracle", oracle)->check(oracle_check);

    CLI::App* table = app.add_subcommand("table", "Products for every w in S_n");
    table->add_option("--n", n)->required();
    table->add_option("--k", k)->required();
    table->add_option("--m", m)->required();
    table->add_option("--format", format)->check(format_check);
    table->add_option("--oracle", oracle)->check(oracle_check);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--n", n)->required();
    verify->add_option("--suite", suite,
                       "billey-independence | oracle-agreement | positivity | lemmas | "
                       "classical-limit | all");
    verify->add_option("--max-n", max_n, "rank guard for sweeps (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (product->parsed()) return run_product(n, k, m, w_text, format, oracle);
        if (coeff->parsed()) return run_coeff(n, k, m, w_text, u_text, format, oracle);
        if (table->parsed()) return run_table(n, k, m, format, oracle);
        return run_verify(n, suite, max_n);
    } catch (const OracleMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NonExactDivision& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
