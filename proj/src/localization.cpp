#include "schubert/localization.hpp"

#include <stdexcept>

namespace schubert {

namespace {

// Subsequence search over the word of the evaluation point.  Maintains the
// invariant l(partial^{-1} v) == need, which both prunes dead branches and
// guarantees the chosen subword stays reduced.
struct BilleySearch {
    const Permutation& v;
    const std::vector<int>& word;
    const std::vector<Polynomial>& beta;
    int n;
    Polynomial sum;

    void run(int pos, const Permutation& partial, int need, const Polynomial& acc) {
        if (need == 0) {
            sum += acc;
            return;
        }
        if (static_cast<int>(word.size()) - pos < need) return;
        Permutation taken = partial * simple_reflection(word[static_cast<std::size_t>(pos)], n);
        if (length(taken.inverse() * v) == need - 1)
            run(pos + 1, taken, need - 1, acc * beta[static_cast<std::size_t>(pos)]);
        run(pos + 1, partial, need, acc);
    }
};

}  // namespace

Polynomial xi_value_with_word(const Permutation& v, const std::vector<int>& w_word, int n) {
    if (v.rank() != n) throw std::invalid_argument("xi_value_with_word: rank mismatch");
    const int m = length(v);
    const int l = static_cast<int>(w_word.size());
    if (length(permutation_from_word(w_word, n)) != l)
        throw std::invalid_argument("xi_value_with_word: word is not reduced");
    Polynomial zero(n - 1);
    if (m > l) return zero;

    std::vector<Polynomial> beta;
    beta.reserve(w_word.size());
    Permutation prefix(n);
    for (int letter : w_word) {
        beta.push_back(to_alpha(LinearForm::simple_root(n, letter).acted_by(prefix)));
        prefix = prefix * simple_reflection(letter, n);
    }

    BilleySearch search{v, w_word, beta, n, zero};
    search.run(0, Permutation(n), m, Polynomial::constant(n - 1, 1));
    return search.sum;
}

Polynomial xi_value(const Permutation& v, const Permutation& w) {
    if (v.rank() != w.rank()) throw std::invalid_argument("xi_value: rank mismatch");
    if (!bruhat_leq(v, w)) return Polynomial(v.rank() - 1);
    return xi_value_with_word(v, canonical_reduced_word(w), w.rank());
}

Polynomial xi_simple_value(int i, const Permutation& v) {
    const int n = v.rank();
    if (i < 1 || i > n - 1) throw std::invalid_argument("xi_simple_value: index out of range");
    const LinearForm chi = LinearForm::fundamental_weight(n, i);
    return to_alpha(chi - chi.acted_by(v));
}

std::vector<LinearForm> inversion_roots(const Permutation& w) {
    const int n = w.rank();
    const Permutation winv = w.inverse();
    std::vector<LinearForm> roots;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (winv(i) > winv(j)) roots.push_back(LinearForm::positive_root(n, i, j));
    return roots;
}

Polynomial xi_diagonal(const Permutation& w) {
    Polynomial prod = Polynomial::constant(w.rank() - 1, 1);
    for (const LinearForm& root : inversion_roots(w)) prod = prod * to_alpha(root);
    return prod;
}

XiTable::XiTable(std::shared_ptr<const SymmetricGroup> group) : group_(std::move(group)) {
    words_.reserve(group_->size());
    for (const Permutation& w : group_->elements()) words_.push_back(canonical_reduced_word(w));
}

const Polynomial& XiTable::value(std::size_t v_idx, std::size_t w_idx) {
    const std::uint64_t key = static_cast<std::uint64_t>(v_idx) * group_->size() + w_idx;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const Permutation& v = group_->element(v_idx);
    const Permutation& w = group_->element(w_idx);
    Polynomial val = bruhat_leq(v, w) ? xi_value_with_word(v, words_[w_idx], group_->rank())
                                      : Polynomial(group_->rank() - 1);
    return cache_.emplace(key, std::move(val)).first->second;
}

const Polynomial& XiTable::value(const Permutation& v, const Permutation& w) {
    return value(group_->index_of(v), group_->index_of(w));
}

WeylFunction XiTable::xi_function(const Permutation& v) {
    WeylFunction f(group_);
    const std::size_t v_idx = group_->index_of(v);
    for (std::size_t w_idx = 0; w_idx < group_->size(); ++w_idx) f.set(w_idx, value(v_idx, w_idx));
    return f;
}

WeylFunction divided_difference(int i, const WeylFunction& f) {
    const int n = f.rank();
    if (i < 1 || i > n - 1) throw std::invalid_argument("divided_difference: index out of range");
    const auto& group = f.group();
    WeylFunction out(group);
    const Permutation si = simple_reflection(i, n);
    for (std::size_t idx = 0; idx < group->size(); ++idx) {
        const Permutation& w = group->element(idx);
        Polynomial num = f.at(group->index_of(w * si)) - f.at(idx);
        if (num.is_zero()) continue;
        LinearForm denom(n);  // w alpha_i = L_{w(i)} - L_{w(i+1)}
        denom.coeff(w(i)) = 1;
        denom.coeff(w(i + 1)) = -1;
        out.set(idx, exact_div_linear(num, denom));
    }
    return out;
}

SchubertExpansion expand_schubert(const WeylFunction& f, XiTable& xi) {
    const auto& group = f.group();
    if (group->rank() != xi.group()->rank())
        throw std::invalid_argument("expand_schubert: table rank mismatch");
    SchubertExpansion out(group->rank());

    WeylFunction residual = f;
    for (std::size_t idx = 0; idx < group->size(); ++idx) {
        const Permutation& u = group->element(idx);
        Polynomial num = residual.at(idx);
        if (num.is_zero()) continue;
        // later basis elements vanish at u, so num = p_u * xi^u(u)
        for (const LinearForm& root : inversion_roots(u)) num = exact_div_linear(num, root);
        for (std::size_t x = idx; x < group->size(); ++x) {
            if (!bruhat_leq(u, group->element(x))) continue;
            residual.set(x, residual.at(x) - num * xi.value(idx, x));
        }
        out.set(u, std::move(num));
    }
    if (!residual.is_zero())
        throw NonExactDivision("expand_schubert: nonzero residual, function outside the span");
    return out;
}

SchubertExpansion expand_schubert(const WeylFunction& f) {
    XiTable xi(f.group());
    return expand_schubert(f, xi);
}

SchubertExpansion chevalley_expand(int i, const Permutation& w) {
    const int n = w.rank();
    if (i < 1 || i > n - 1) throw std::invalid_argument("chevalley_expand: index out of range");
    SchubertExpansion out(n);
    out.set(w, xi_simple_value(i, w));
    const int lw = length(w);
    for (int a = 1; a <= i; ++a) {
        for (int b = i + 1; b <= n; ++b) {
            auto [wt, up] = multiply_transposition(w, a, b);
            if (up && length(wt) == lw + 1) out.set(wt, Polynomial::constant(n - 1, 1));
        }
    }
    return out;
}

}  // namespace schubert
