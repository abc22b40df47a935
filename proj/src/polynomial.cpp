#include "schubert/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schubert {

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("Polynomial: negative variable count");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
    if (k < 1 || k > nvars) throw std::invalid_argument("Polynomial: variable index out of range");
    Polynomial p(nvars);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(k) - 1] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // leading term of the graded order has the maximal total degree
    const Monomial& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0) != d) return false;
    return true;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial(static_cast<std::size_t>(nvars_), 0));
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::has_nonnegative_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("Polynomial: monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial: rank mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial: rank mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial: rank mismatch");
    Polynomial out(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
    Polynomial out = Polynomial::constant(nvars_, 1);
    for (int i = 0; i < e; ++i) out = out * (*this);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << '-';
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += 'a' + std::to_string(i + 1);
            if (m[i] > 1) vars += '^' + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << '*';
            out << vars;
        }
    }
    return out.str();
}

Polynomial to_alpha(const LinearForm& f) {
    if (f.coeff_sum() != 0)
        throw std::invalid_argument("to_alpha: coefficient sum nonzero, form not in the root span");
    const int n = f.rank();
    Polynomial p(n - 1);
    Rational partial(0);
    for (int k = 1; k <= n - 1; ++k) {
        partial += f.coeff(k);
        if (partial != 0) {
            Monomial m(static_cast<std::size_t>(n - 1), 0);
            m[static_cast<std::size_t>(k) - 1] = 1;
            p.add_term(m, partial);
        }
    }
    return p;
}

Polynomial weyl_act(const Permutation& w, const Polynomial& f) {
    const int nvars = f.nvars();
    if (w.rank() != nvars + 1) throw std::invalid_argument("weyl_act: rank mismatch");
    std::vector<Polynomial> image;
    image.reserve(static_cast<std::size_t>(nvars));
    for (int k = 1; k <= nvars; ++k)
        image.push_back(to_alpha(LinearForm::simple_root(nvars + 1, k).acted_by(w)));
    Polynomial out(nvars);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(nvars, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * image[i].pow(m[i]);
        out += term;
    }
    return out;
}

Polynomial exact_div_linear(const Polynomial& f, const LinearForm& ell) {
    const Polynomial d = to_alpha(ell);
    if (d.is_zero()) throw std::invalid_argument("exact_div_linear: division by zero form");
    const int nvars = f.nvars();
    if (d.nvars() != nvars) throw std::invalid_argument("exact_div_linear: rank mismatch");

    // Leading variable of the divisor (lowest index with nonzero coefficient).
    const Monomial& lead = d.terms().begin()->first;
    std::size_t j = 0;
    while (lead[j] == 0) ++j;
    const Rational dj = d.terms().begin()->second;

    // Univariate division in a_{j+1}: repeatedly clear the top a_j-degree
    // slice of the remainder.  The remainder must vanish.
    Polynomial quotient(nvars);
    Polynomial r = f;
    for (;;) {
        int top = 0;
        for (const auto& [m, c] : r.terms()) top = std::max(top, m[j]);
        if (top == 0) break;
        Polynomial slice(nvars);
        for (const auto& [m, c] : r.terms()) {
            if (m[j] != top) continue;
            Monomial q(m);
            q[j] -= 1;
            slice.add_term(q, c / dj);
        }
        quotient += slice;
        r -= slice * d;
    }
    if (!r.is_zero())
        throw NonExactDivision("exact_div_linear: remainder " + r.to_string() +
                               " dividing by " + d.to_string());
    return quotient;
}

Rational specialize_zero(const Polynomial& f) { return f.constant_term(); }

}  // namespace schubert
