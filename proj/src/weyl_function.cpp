#include "schubert/weyl_function.hpp"

#include <stdexcept>

namespace schubert {

WeylFunction::WeylFunction(std::shared_ptr<const SymmetricGroup> group)
    : group_(std::move(group)),
      values_(group_->size(), Polynomial(group_->rank() - 1)) {}

bool WeylFunction::is_zero() const {
    for (const auto& p : values_)
        if (!p.is_zero()) return false;
    return true;
}

bool WeylFunction::operator==(const WeylFunction& other) const {
    return group_->rank() == other.group_->rank() && values_ == other.values_;
}

namespace {

void check_same_group(const WeylFunction& f, const WeylFunction& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("WeylFunction: rank mismatch");
}

}  // namespace

WeylFunction pointwise_product(const WeylFunction& f, const WeylFunction& g) {
    check_same_group(f, g);
    WeylFunction out(f.group());
    for (std::size_t i = 0; i < f.group()->size(); ++i) out.set(i, f.at(i) * g.at(i));
    return out;
}

WeylFunction pointwise_sum(const WeylFunction& f, const WeylFunction& g) {
    check_same_group(f, g);
    WeylFunction out(f.group());
    for (std::size_t i = 0; i < f.group()->size(); ++i) out.set(i, f.at(i) + g.at(i));
    return out;
}

WeylFunction pointwise_diff(const WeylFunction& f, const WeylFunction& g) {
    check_same_group(f, g);
    WeylFunction out(f.group());
    for (std::size_t i = 0; i < f.group()->size(); ++i) out.set(i, f.at(i) - g.at(i));
    return out;
}

WeylFunction scale(const WeylFunction& f, const Polynomial& p) {
    WeylFunction out(f.group());
    for (std::size_t i = 0; i < f.group()->size(); ++i) out.set(i, f.at(i) * p);
    return out;
}

Polynomial SchubertExpansion::at(const Permutation& u) const {
    auto it = coeffs_.find(u);
    return it == coeffs_.end() ? Polynomial(rank_ - 1) : it->second;
}

void SchubertExpansion::set(const Permutation& u, Polynomial p) {
    if (u.rank() != rank_) throw std::invalid_argument("SchubertExpansion: rank mismatch");
    if (p.is_zero())
        coeffs_.erase(u);
    else
        coeffs_.insert_or_assign(u, std::move(p));
}

}  // namespace schubert
