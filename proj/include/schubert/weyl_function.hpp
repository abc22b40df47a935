#pragma once

#include <map>
#include <memory>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// Total map S_n -> polynomials, stored densely in enumerate_group order.
// Elements of the function ring restricted to a fixed rank live here.
class WeylFunction {
public:
    explicit WeylFunction(std::shared_ptr<const SymmetricGroup> group);

    int rank() const { return group_->rank(); }
    int nvars() const { return group_->rank() - 1; }
    const std::shared_ptr<const SymmetricGroup>& group() const { return group_; }

    const Polynomial& at(std::size_t idx) const { return values_[idx]; }
    const Polynomial& at(const Permutation& w) const { return values_[group_->index_of(w)]; }
    void set(std::size_t idx, Polynomial p) { values_[idx] = std::move(p); }
    void set(const Permutation& w, Polynomial p) { values_[group_->index_of(w)] = std::move(p); }

    bool is_zero() const;
    bool operator==(const WeylFunction& other) const;

private:
    std::shared_ptr<const SymmetricGroup> group_;
    std::vector<Polynomial> values_;
};

WeylFunction pointwise_product(const WeylFunction& f, const WeylFunction& g);
WeylFunction pointwise_sum(const WeylFunction& f, const WeylFunction& g);
WeylFunction pointwise_diff(const WeylFunction& f, const WeylFunction& g);
WeylFunction scale(const WeylFunction& f, const Polynomial& p);

// Finitely supported map Permutation -> coefficient polynomial, i.e. an
// expansion sum_u p_u xi^u.  No zero polynomials stored; iteration follows
// the canonical (length, lex) order.
class SchubertExpansion {
public:
    using CoeffMap = std::map<Permutation, Polynomial, LengthLexLess>;

    explicit SchubertExpansion(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    std::size_t size() const { return coeffs_.size(); }
    bool contains(const Permutation& u) const { return coeffs_.count(u) > 0; }
    Polynomial at(const Permutation& u) const;  // zero when absent
    void set(const Permutation& u, Polynomial p);
    const CoeffMap& coefficients() const { return coeffs_; }

    bool operator==(const SchubertExpansion&) const = default;

private:
    int rank_;
    CoeffMap coeffs_;
};

}  // namespace schubert
