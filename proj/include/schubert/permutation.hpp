#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schubert {

// Element of the symmetric group S_n in one-line notation.  Indices and
// values are 1-based.  Composition is (u*v)(i) = u(v(i)); consequently right
// multiplication by t_{i,j} swaps one-line positions i and j, and left
// multiplication swaps the values i and j.
class Permutation {
public:
    explicit Permutation(int n);  // identity
    explicit Permutation(std::vector<int> one_line);

    int rank() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;

    friend Permutation operator*(const Permutation& u, const Permutation& v);
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

/// Inversion count #{(i,j) : i<j, w(i)>w(j)}; equals the minimal word length.
int length(const Permutation& w);

Permutation simple_reflection(int i, int n);
Permutation transposition(int i, int j, int n);  // t_{i,j}, requires i < j

/// Product s_{letters[0]} s_{letters[1]} ... in left-to-right order.
Permutation permutation_from_word(const std::vector<int>& letters, int n);

/// w * t_{i,j} together with the flag l(w t_{i,j}) > l(w); the flag always
/// equals w(i) < w(j).
std::pair<Permutation, bool> multiply_transposition(const Permutation& w, int i, int j);

/// Bruhat order: true iff v can be raised to w along a chain of
/// length-increasing transposition multiplications.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// Non-trivial cycle in functional notation: entries (q, c_1, ..., c_p) with q
// the largest member, zeta(q) = c_1, zeta(c_t) = c_{t+1}, zeta(c_p) = q.
// Equivalently zeta = t_{i_1,q} ... t_{i_p,q} with i_t = c_{p+1-t}.
struct Cycle {
    std::vector<int> entries;

    Permutation as_permutation(int n) const;
    bool operator==(const Cycle&) const = default;
};

/// Disjoint cycles of w, fixed points omitted, each normalized to lead with
/// its largest entry; ordered by leading entry.
std::vector<Cycle> cycle_decomposition(const Permutation& w);

/// c[k,m] = s_{k-m+1} ... s_{k-1} s_k (identity when m = 0); its length is m.
Permutation c_km(int k, int m, int n);

std::vector<int> right_descents(const Permutation& w);  // i with w(i) > w(i+1)
std::vector<int> left_descents(const Permutation& w);   // i with l(s_i w) < l(w)

/// Lexicographically smallest reduced word of w.
std::vector<int> canonical_reduced_word(const Permutation& w);

/// Every reduced word of w (exponential; intended for small ranks).
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

/// Letters appearing in the reduced words of w (word-independent).
std::vector<int> word_support(const Permutation& w);

/// All n! elements sorted by length, ties broken by lexicographic one-line
/// notation.  This is the canonical iteration order everywhere.
std::vector<Permutation> enumerate_group(int n);

// Comparator realizing the enumerate_group order.
struct LengthLexLess {
    bool operator()(const Permutation& a, const Permutation& b) const;
};

// Cached enumeration of S_n with index lookup.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n);

    int rank() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t idx) const { return elements_[idx]; }
    std::size_t index_of(const Permutation& w) const;

    /// Process-wide cache, one instance per rank.
    static std::shared_ptr<const SymmetricGroup> shared(int n);

private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };

    int n_;
    std::vector<Permutation> elements_;
    std::unordered_map<std::vector<int>, std::size_t, VecHash> index_;
};

// Text forms.  Word form "s3 s4" ("e" for the identity), one-line form
// "[1,2,4,5,3,6,7]", digit form "1254367" (input only, n <= 9).
std::string format_word(const Permutation& w);
std::string format_one_line(const Permutation& w);
Permutation parse_permutation(const std::string& text, int n);

}  // namespace schubert
