#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "schubert/weyl_function.hpp"

namespace schubert {

/// Localization value xi^v(w) by the reduced-word subsequence formula: fix a
/// reduced word w = s_{i_1}..s_{i_l}, set beta_j = s_{i_1}..s_{i_{j-1}}
/// alpha_{i_j}, and sum beta_{j_1}..beta_{j_m} over subsequences that are
/// reduced words of v.  Vanishes unless v <= w.
Polynomial xi_value(const Permutation& v, const Permutation& w);

/// Same sum over an explicit reduced word of the evaluation point; the result
/// is word-independent.
Polynomial xi_value_with_word(const Permutation& v, const std::vector<int>& w_word, int n);

/// xi^{s_i}(v) = chi_i - v chi_i.
Polynomial xi_simple_value(int i, const Permutation& v);

/// Diagonal value xi^w(w): product of the positive roots sent negative by
/// w^{-1}, i.e. L_i - L_j over i < j with w^{-1}(i) > w^{-1}(j).
Polynomial xi_diagonal(const Permutation& w);

/// The l(w) linear factors of xi_diagonal(w).
std::vector<LinearForm> inversion_roots(const Permutation& w);

// Memoized table of values xi^v(w) over a fixed group; the workhorse behind
// the triangular solve and the verification sweeps.
class XiTable {
public:
    explicit XiTable(std::shared_ptr<const SymmetricGroup> group);

    const std::shared_ptr<const SymmetricGroup>& group() const { return group_; }
    const Polynomial& value(std::size_t v_idx, std::size_t w_idx);
    const Polynomial& value(const Permutation& v, const Permutation& w);

    /// xi^v as a total function.
    WeylFunction xi_function(const Permutation& v);

private:
    std::shared_ptr<const SymmetricGroup> group_;
    std::unordered_map<std::uint64_t, Polynomial> cache_;
    std::vector<std::vector<int>> words_;  // canonical reduced words by index
};

/// (A_i f)(w) = (f(w s_i) - f(w)) / (w alpha_i); every division must be exact
/// or NonExactDivision is thrown (f outside the ring).
WeylFunction divided_difference(int i, const WeylFunction& f);

/// Unique expansion f = sum_u p_u xi^u via the triangular solve in
/// enumerate_group order; throws NonExactDivision when f is outside the
/// integral span of the basis.
SchubertExpansion expand_schubert(const WeylFunction& f, XiTable& xi);
SchubertExpansion expand_schubert(const WeylFunction& f);

/// Degree-one product: xi^{s_i} xi^w = xi^{s_i}(w) xi^w + sum of xi^{w t_{a,b}}
/// over covers w -> w t_{a,b} with a <= i < b.
SchubertExpansion chevalley_expand(int i, const Permutation& w);

}  // namespace schubert
