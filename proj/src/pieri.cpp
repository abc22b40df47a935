#include "schubert/pieri.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

namespace {

void check_k(int k, int n) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("special superiority: need 1 <= k <= n-1");
}

}  // namespace

std::optional<int> special_superior_degree(const Permutation& w, const Permutation& u, int k) {
    if (w.rank() != u.rank()) throw std::invalid_argument("special_superior_degree: rank mismatch");
    check_k(k, w.rank());
    const int lw = length(w);
    int total = 0;
    for (const Cycle& c : cycle_decomposition(w.inverse() * u)) {
        const int q = c.entries[0];
        const int r = static_cast<int>(c.entries.size()) - 1;
        if (q <= k) return std::nullopt;
        // entries after q sit in columns <= k with w-values ascending to w(q)
        for (int t = 1; t <= r; ++t)
            if (c.entries[static_cast<std::size_t>(t)] > k) return std::nullopt;
        for (int t = 1; t < r; ++t)
            if (w(c.entries[static_cast<std::size_t>(t)]) >= w(c.entries[static_cast<std::size_t>(t) + 1]))
                return std::nullopt;
        if (w(c.entries.back()) >= w(q)) return std::nullopt;
        if (length(w * c.as_permutation(w.rank())) != lw + r) return std::nullopt;
        total += r;
    }
    // The cycles must also be additive jointly, not only one at a time:
    // disjoint cycles that each raise the length by their own degree can
    // still interleave and overshoot (w = [2,1,4,3], u = [4,3,2,1], k = 2).
    if (length(u) != lw + total) return std::nullopt;
    return total;
}

std::optional<SuperiorWitness> is_special_superior(const Permutation& w, const Permutation& u,
                                                   int k, int p) {
    if (p < 0) throw std::invalid_argument("is_special_superior: degree must be >= 0");
    auto degree = special_superior_degree(w, u, k);
    if (!degree || *degree != p) return std::nullopt;
    return SuperiorWitness{cycle_decomposition(w.inverse() * u), p, k};
}

namespace {

struct SuperiorEnumerator {
    const Permutation& w;
    int k;
    int n;
    int lw;
    int degree;
    std::vector<char> used;  // columns <= k consumed by chosen cycles
    std::vector<Permutation> out;

    void run(int q, int remaining, const Permutation& current) {
        if (q > n) {
            if (remaining == 0 && length(current) == lw + degree) out.push_back(current);
            return;
        }
        run(q + 1, remaining, current);  // no cycle at this q
        if (remaining == 0) return;
        std::vector<int> candidates;
        for (int i = 1; i <= k; ++i)
            if (!used[static_cast<std::size_t>(i)] && w(i) < w(q)) candidates.push_back(i);
        const int c = static_cast<int>(candidates.size());
        for (std::uint32_t mask = 1; mask < (1u << c); ++mask) {
            std::vector<int> members;
            for (int t = 0; t < c; ++t)
                if (mask & (1u << t)) members.push_back(candidates[static_cast<std::size_t>(t)]);
            if (static_cast<int>(members.size()) > remaining) continue;
            std::sort(members.begin(), members.end(),
                      [&](int a, int b) { return w(a) < w(b); });
            Cycle cycle;
            cycle.entries.push_back(q);
            cycle.entries.insert(cycle.entries.end(), members.begin(), members.end());
            const Permutation zeta = cycle.as_permutation(n);
            const int r = static_cast<int>(members.size());
            if (length(w * zeta) != lw + r) continue;
            for (int i : members) used[static_cast<std::size_t>(i)] = 1;
            run(q + 1, remaining - r, current * zeta);
            for (int i : members) used[static_cast<std::size_t>(i)] = 0;
        }
    }
};

}  // namespace

std::vector<Permutation> special_superior_set(const Permutation& w, int k, int p) {
    check_k(k, w.rank());
    if (p < 0) throw std::invalid_argument("special_superior_set: degree must be >= 0");
    SuperiorEnumerator enumerator{w, k, w.rank(), length(w), p,
                                  std::vector<char>(static_cast<std::size_t>(k) + 1, 0),
                                  {}};
    enumerator.run(k + 1, p, w);
    std::sort(enumerator.out.begin(), enumerator.out.end(), LengthLexLess{});
    return enumerator.out;
}

AssociatedTrace associated_element(const Permutation& u, const Permutation& w, int k) {
    auto degree = special_superior_degree(w, u, k);
    if (!degree) throw std::invalid_argument("associated_element: u is not special k-superior to w");
    const int p = *degree;
    const int n = w.rank();
    const Permutation zeta = w.inverse() * u;

    AssociatedTrace trace{{}, {}, {}, {}, w};
    for (int i = 1; i <= k; ++i)
        if (zeta(i) != i) trace.index_set.push_back(i);

    // r_j: the j-th largest column <= k outside the index set;
    // lambda_j counts index-set members below it.
    int bound = k;
    for (int j = 1; j <= k - p; ++j) {
        int r = bound;
        while (r >= 1 && std::binary_search(trace.index_set.begin(), trace.index_set.end(), r)) --r;
        if (r < 1) throw std::logic_error("associated_element: ran out of free columns");
        const int lam = static_cast<int>(
            std::lower_bound(trace.index_set.begin(), trace.index_set.end(), r) -
            trace.index_set.begin());
        trace.r_seq.push_back(r);
        trace.lambda.push_back(lam);
        bound = r - 1;
    }

    // pi_j = s_{lambda'+j-1} ... s_{j+1} s_j with lambda' = lambda_{k-p-j+1};
    // empty exactly when lambda' = 0.
    for (int j = 1; j <= k - p; ++j) {
        const int lam = trace.lambda[static_cast<std::size_t>(k - p - j)];
        std::vector<int> word;
        for (int s = lam + j - 1; s >= j; --s) word.push_back(s);
        for (int s : word) trace.result = trace.result * simple_reflection(s, n);
        trace.pi_words.push_back(std::move(word));
    }
    return trace;
}

namespace {

void check_pieri_params(int k, int m, int n) {
    if (m < 1 || m > k || k > n - 1)
        throw std::invalid_argument("pieri: need 1 <= m <= k <= n-1");
}

}  // namespace

PieriCoefficient pieri_coefficient_traced(int k, int m, const Permutation& w,
                                          const Permutation& u) {
    check_pieri_params(k, m, w.rank());
    const int n = w.rank();
    PieriCoefficient out{Polynomial(n - 1), special_superior_degree(w, u, k), std::nullopt};
    if (!out.degree || *out.degree > m) return out;
    AssociatedTrace trace = associated_element(u, w, k);
    out.value = xi_value(c_km(k - *out.degree, m - *out.degree, n), trace.result);
    out.trace = std::move(trace);
    return out;
}

Polynomial pieri_coefficient(int k, int m, const Permutation& w, const Permutation& u) {
    return pieri_coefficient_traced(k, m, w, u).value;
}

SchubertExpansion pieri_expand(int k, int m, const Permutation& w) {
    check_pieri_params(k, m, w.rank());
    const int n = w.rank();
    SchubertExpansion out(n);
    for (int p = 0; p <= m; ++p) {
        for (const Permutation& u : special_superior_set(w, k, p)) {
            const AssociatedTrace trace = associated_element(u, w, k);
            out.set(u, xi_value(c_km(k - p, m - p, n), trace.result));
        }
    }
    return out;
}

namespace {

// Shared-memo evaluation of the column recursion for a fixed w.
struct MonkRecursion {
    const Permutation& w;
    std::shared_ptr<const SymmetricGroup> group;
    SchubertExpansion base;  // xi^{s_1} xi^w, the k = 1 floor of the recursion
    std::unordered_map<std::uint64_t, Polynomial> memo;

    explicit MonkRecursion(const Permutation& w_)
        : w(w_), group(SymmetricGroup::shared(w_.rank())), base(chevalley_expand(1, w_)) {}

    Polynomial coeff(int k, int m, const Permutation& u) {
        const int n = w.rank();
        if (m == 0)
            return u == w ? Polynomial::constant(n - 1, 1) : Polynomial(n - 1);
        if (m > k) return Polynomial(n - 1);
        if (k == 1) return base.at(u);  // m == 1 here

        const std::uint64_t key =
            ((static_cast<std::uint64_t>(k) << 4 | static_cast<std::uint64_t>(m)) << 32) |
            group->index_of(u);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        LinearForm ell(n);  // L_{k-m+1} - u L_k
        ell.coeff(k - m + 1) += 1;
        ell.coeff(u(k)) -= 1;
        Polynomial result = coeff(k - 1, m, u) + to_alpha(ell) * coeff(k - 1, m - 1, u);

        const int lu = length(u);
        for (int q = k + 1; q <= n; ++q) {
            auto [ut, up] = multiply_transposition(u, k, q);
            if (!up && length(ut) == lu - 1) result += coeff(k - 1, m - 1, ut);
        }
        for (int q = 1; q < k; ++q) {
            auto [ut, up] = multiply_transposition(u, q, k);
            if (!up && length(ut) == lu - 1) result -= coeff(k - 1, m - 1, ut);
        }
        return memo.emplace(key, std::move(result)).first->second;
    }
};

}  // namespace

Polynomial monk_recursion_coefficient(int k, int m, const Permutation& w, const Permutation& u) {
    if (w.rank() != u.rank()) throw std::invalid_argument("monk_recursion_coefficient: rank mismatch");
    if (m < 0 || m > k || k > w.rank() - 1)
        throw std::invalid_argument("monk_recursion_coefficient: need 0 <= m <= k <= n-1");
    MonkRecursion rec(w);
    return rec.coeff(k, m, u);
}

SchubertExpansion monk_expand(int k, int m, const Permutation& w) {
    if (m < 0 || m > k || k > w.rank() - 1)
        throw std::invalid_argument("monk_expand: need 0 <= m <= k <= n-1");
    MonkRecursion rec(w);
    SchubertExpansion out(w.rank());
    for (const Permutation& u : rec.group->elements()) out.set(u, rec.coeff(k, m, u));
    return out;
}

bool decomp_identity_check(int k, int m, int n) {
    if (k < 2 || k > n - 1 || m < 1 || m > k)
        throw std::invalid_argument("decomp_identity_check: need 2 <= k <= n-1, 1 <= m <= k");
    auto group = SymmetricGroup::shared(n);
    XiTable xi(group);

    WeylFunction lhs = xi.xi_function(c_km(k, m, n));
    WeylFunction c_shorter =
        (m > k - 1) ? WeylFunction(group) : xi.xi_function(c_km(k - 1, m, n));
    WeylFunction c_lower = xi.xi_function(c_km(k - 1, m - 1, n));
    WeylFunction factor =
        pointwise_diff(xi.xi_function(simple_reflection(k, n)),
                       xi.xi_function(simple_reflection(k - 1, n)));
    const Polynomial shift =
        to_alpha(LinearForm::coordinate(n, k - m + 1) - LinearForm::coordinate(n, k));
    for (std::size_t idx = 0; idx < group->size(); ++idx)
        factor.set(idx, factor.at(idx) + shift);

    WeylFunction rhs = pointwise_sum(c_shorter, pointwise_product(factor, c_lower));
    return lhs == rhs;
}

}  // namespace schubert
