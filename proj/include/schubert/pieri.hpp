#pragma once

#include <optional>
#include <vector>

#include "schubert/localization.hpp"

namespace schubert {

// Witness that u = w * zeta_1 ... zeta_r is special k-superior to w of degree
// p.  The zeta_i are the disjoint cycles of w^{-1}u; each crosses column k
// exactly once (one entry q > k, the rest <= k), carries strictly decreasing
// w-values along its transposition chain, and adds its full degree to the
// length of w.
struct SuperiorWitness {
    std::vector<Cycle> cycles;
    int degree = 0;
    int k = 0;
};

/// The degree p with u in S_w(k,p), or nullopt when u is not special
/// k-superior to w for any degree.  The degree is determined by the pair.
std::optional<int> special_superior_degree(const Permutation& w, const Permutation& u, int k);

/// Witness if u lies in S_w(k,p); p = 0 accepts exactly u = w.
std::optional<SuperiorWitness> is_special_superior(const Permutation& w, const Permutation& u,
                                                   int k, int p);

/// All of S_w(k,p), built by direct enumeration of admissible disjoint cycle
/// families (not by filtering the group); sorted in enumerate_group order.
std::vector<Permutation> special_superior_set(const Permutation& w, int k, int p);

// Full record of the associated-element construction, kept auditable.
struct AssociatedTrace {
    std::vector<int> index_set;             // I: indices <= k moved by w^{-1}u
    std::vector<int> r_seq;                 // r_1 > r_2 > ... > r_{k-p}
    std::vector<int> lambda;                // partition lambda_1 >= ... >= lambda_{k-p} >= 0
    std::vector<std::vector<int>> pi_words;
    Permutation result;                     // v(u,w,k) = w pi_1 ... pi_{k-p}
};

/// The associated element v(u,w,k); throws std::invalid_argument when u is
/// not special k-superior to w.
AssociatedTrace associated_element(const Permutation& u, const Permutation& w, int k);

/// Structure constant of xi^u in xi^{c[k,m]} xi^w: equals
/// xi^{c[k-p,m-p]}(v(u,w,k)) when u in S_w(k,p) with p <= m, and zero when u
/// is not special k-superior of any degree <= m.  c[k-p,0] is the identity,
/// so the p = m case contributes the constant 1.
Polynomial pieri_coefficient(int k, int m, const Permutation& w, const Permutation& u);

struct PieriCoefficient {
    Polynomial value;
    std::optional<int> degree;              // the p with u in S_w(k,p), if any
    std::optional<AssociatedTrace> trace;   // present when degree <= m
};

PieriCoefficient pieri_coefficient_traced(int k, int m, const Permutation& w,
                                          const Permutation& u);

/// The whole expansion of xi^{c[k,m]} xi^w by the superiority rule; zero
/// coefficients dropped.
SchubertExpansion pieri_expand(int k, int m, const Permutation& w);

/// Independent second route to the same coefficient: column recursion
/// grounded in the degree-one product formula, with the conventions
/// p_{c[k,0]} = [u = w] and p_{c[k-1,m]} = 0 for m > k-1.
Polynomial monk_recursion_coefficient(int k, int m, const Permutation& w, const Permutation& u);

/// The recursion evaluated over every u at once (shared memo).
SchubertExpansion monk_expand(int k, int m, const Permutation& w);

/// Verifies, pointwise over all of S_n,
/// xi^{c[k,m]} = xi^{c[k-1,m]} + (xi^{s_k} - xi^{s_{k-1}} + L_{k-m+1} - L_k) xi^{c[k-1,m-1]},
/// with xi^{c[k-1,m]} the zero function when m > k-1.
bool decomp_identity_check(int k, int m, int n);

}  // namespace schubert
