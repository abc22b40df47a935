#include "schubert/json_io.hpp"

namespace schubert {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"exp", m},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return json{{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j, int nvars) {
    Polynomial p(nvars);
    for (const auto& t : j.at("terms")) {
        Monomial m = t.at("exp").get<Monomial>();
        p.add_term(m, rational_from_strings(t.at("num").get<std::string>(),
                                            t.at("den").get<std::string>()));
    }
    return p;
}

namespace {

json trace_to_json(int degree, const AssociatedTrace& trace) {
    return json{{"p", degree},
                {"I", trace.index_set},
                {"lambda", trace.lambda},
                {"assoc", format_word(trace.result)}};
}

}  // namespace

json expansion_to_json(const SchubertExpansion& e, int k, int m, const Permutation& w,
                       bool with_traces) {
    json terms = json::array();
    for (const auto& [u, coeff] : e.coefficients()) {
        json term{{"u", format_word(u)},
                  {"one_line", u.one_line()},
                  {"coeff", polynomial_to_json(coeff)}};
        if (with_traces) {
            const PieriCoefficient pc = pieri_coefficient_traced(k, m, w, u);
            if (pc.trace) term["trace"] = trace_to_json(*pc.degree, *pc.trace);
        }
        terms.push_back(std::move(term));
    }
    return json{{"n", e.rank()},
                {"c", {k, m}},
                {"w", format_word(w)},
                {"terms", std::move(terms)}};
}

SchubertExpansion expansion_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    SchubertExpansion e(n);
    for (const auto& t : j.at("terms")) {
        Permutation u(t.at("one_line").get<std::vector<int>>());
        if (u.rank() != n) throw std::invalid_argument("expansion_from_json: rank mismatch");
        e.set(u, polynomial_from_json(t.at("coeff"), n - 1));
    }
    return e;
}

json coefficient_to_json(int k, int m, const Permutation& w, const Permutation& u,
                         const PieriCoefficient& pc) {
    json out{{"n", w.rank()},
             {"c", {k, m}},
             {"w", format_word(w)},
             {"u", format_word(u)},
             {"one_line", u.one_line()},
             {"coeff", polynomial_to_json(pc.value)}};
    if (pc.trace) out["trace"] = trace_to_json(*pc.degree, *pc.trace);
    return out;
}

}  // namespace schubert
