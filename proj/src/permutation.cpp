#include "schubert/permutation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubert {

Permutation::Permutation(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: rank must be >= 1");
    img_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int n = rank();
    if (n < 1) throw std::invalid_argument("Permutation: rank must be >= 1");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: not a bijection of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= rank(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= rank(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("Permutation product: rank mismatch");
    std::vector<int> img(u.img_.size());
    for (int i = 1; i <= u.rank(); ++i) img[static_cast<std::size_t>(i) - 1] = u(v(i));
    return Permutation(std::move(img));
}

int length(const Permutation& w) {
    int count = 0;
    const int n = w.rank();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

Permutation simple_reflection(int i, int n) { return transposition(i, i + 1, n); }

Permutation transposition(int i, int j, int n) {
    if (i < 1 || j > n || i >= j) throw std::invalid_argument("transposition: need 1 <= i < j <= n");
    Permutation t(n);
    std::vector<int> img = t.one_line();
    std::swap(img[static_cast<std::size_t>(i) - 1], img[static_cast<std::size_t>(j) - 1]);
    return Permutation(std::move(img));
}

Permutation permutation_from_word(const std::vector<int>& letters, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    for (int letter : letters) {
        if (letter < 1 || letter > n - 1)
            throw std::invalid_argument("permutation_from_word: letter out of range");
        // right multiplication by s_letter swaps one-line positions
        std::swap(img[static_cast<std::size_t>(letter) - 1], img[static_cast<std::size_t>(letter)]);
    }
    return Permutation(std::move(img));
}

std::pair<Permutation, bool> multiply_transposition(const Permutation& w, int i, int j) {
    if (i >= j) throw std::invalid_argument("multiply_transposition: need i < j");
    if (i < 1 || j > w.rank()) throw std::invalid_argument("multiply_transposition: index out of range");
    const bool increases = w(i) < w(j);
    std::vector<int> img = w.one_line();
    std::swap(img[static_cast<std::size_t>(i) - 1], img[static_cast<std::size_t>(j) - 1]);
    return {Permutation(std::move(img)), increases};
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.rank() != w.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
    const int n = v.rank();
    // Ehresmann criterion: sorted prefixes of v dominate entrywise.
    std::vector<int> pv, pw;
    pv.reserve(static_cast<std::size_t>(n));
    pw.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        pv.insert(std::lower_bound(pv.begin(), pv.end(), v(i)), v(i));
        pw.insert(std::lower_bound(pw.begin(), pw.end(), w(i)), w(i));
        for (int t = 0; t < i; ++t)
            if (pv[static_cast<std::size_t>(t)] > pw[static_cast<std::size_t>(t)]) return false;
    }
    return true;
}

Permutation Cycle::as_permutation(int n) const {
    Permutation id(n);
    std::vector<int> img = id.one_line();
    const std::size_t r = entries.size();
    for (std::size_t t = 0; t < r; ++t) {
        int from = entries[t];
        int to = entries[(t + 1) % r];
        img[static_cast<std::size_t>(from) - 1] = to;
    }
    return Permutation(std::move(img));
}

std::vector<Cycle> cycle_decomposition(const Permutation& w) {
    const int n = w.rank();
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Cycle> cycles;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start)] || w(start) == start) continue;
        std::vector<int> orbit;
        int x = start;
        do {
            visited[static_cast<std::size_t>(x)] = 1;
            orbit.push_back(x);
            x = w(x);
        } while (x != start);
        auto max_it = std::max_element(orbit.begin(), orbit.end());
        std::rotate(orbit.begin(), max_it, orbit.end());
        cycles.push_back(Cycle{std::move(orbit)});
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.entries[0] < b.entries[0]; });
    return cycles;
}

Permutation c_km(int k, int m, int n) {
    if (m < 0 || m > k || k > n - 1) throw std::invalid_argument("c_km: need 0 <= m <= k <= n-1");
    std::vector<int> word;
    for (int i = k - m + 1; i <= k; ++i) word.push_back(i);
    return permutation_from_word(word, n);
}

std::vector<int> right_descents(const Permutation& w) {
    std::vector<int> ds;
    for (int i = 1; i < w.rank(); ++i)
        if (w(i) > w(i + 1)) ds.push_back(i);
    return ds;
}

std::vector<int> left_descents(const Permutation& w) { return right_descents(w.inverse()); }

std::vector<int> canonical_reduced_word(const Permutation& w) {
    // Greedy smallest left descent of the remainder; equivalently peel right
    // descents of the inverse.  Yields the global lexicographic minimum.
    std::vector<int> x = w.inverse().one_line();
    const int n = static_cast<int>(x.size());
    std::vector<int> word;
    for (;;) {
        int descent = 0;
        for (int i = 1; i < n; ++i) {
            if (x[static_cast<std::size_t>(i) - 1] > x[static_cast<std::size_t>(i)]) {
                descent = i;
                break;
            }
        }
        if (descent == 0) break;
        word.push_back(descent);
        std::swap(x[static_cast<std::size_t>(descent) - 1], x[static_cast<std::size_t>(descent)]);
    }
    return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    if (w.is_identity()) return {{}};
    std::vector<std::vector<int>> words;
    for (int i : right_descents(w)) {
        Permutation shorter = w * simple_reflection(i, w.rank());
        for (auto word : all_reduced_words(shorter)) {
            word.push_back(i);
            words.push_back(std::move(word));
        }
    }
    return words;
}

std::vector<int> word_support(const Permutation& w) {
    std::vector<int> word = canonical_reduced_word(w);
    std::sort(word.begin(), word.end());
    word.erase(std::unique(word.begin(), word.end()), word.end());
    return word;
}

std::vector<Permutation> enumerate_group(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_group: rank must be >= 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> all;
    do {
        all.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    std::stable_sort(all.begin(), all.end(), [](const Permutation& a, const Permutation& b) {
        return length(a) < length(b);
    });
    return all;
}

bool LengthLexLess::operator()(const Permutation& a, const Permutation& b) const {
    const int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a.one_line() < b.one_line();
}

std::size_t SymmetricGroup::VecHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n), elements_(enumerate_group(n)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].one_line(), i);
}

std::size_t SymmetricGroup::index_of(const Permutation& w) const {
    auto it = index_.find(w.one_line());
    if (it == index_.end()) throw std::invalid_argument("SymmetricGroup: element of wrong rank");
    return it->second;
}

std::shared_ptr<const SymmetricGroup> SymmetricGroup::shared(int n) {
    static std::map<int, std::shared_ptr<const SymmetricGroup>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_shared<const SymmetricGroup>(n)).first;
    return it->second;
}

std::string format_word(const Permutation& w) {
    std::vector<int> word = canonical_reduced_word(w);
    if (word.empty()) return "e";
    std::ostringstream out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out << ' ';
        out << 's' << word[i];
    }
    return out.str();
}

std::string format_one_line(const Permutation& w) {
    std::ostringstream out;
    out << '[';
    for (int i = 1; i <= w.rank(); ++i) {
        if (i > 1) out << ',';
        out << w(i);
    }
    out << ']';
    return out.str();
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Permutation parse_permutation(const std::string& text, int n) {
    const std::string s = trimmed(text);
    if (s.empty() || s == "e") return Permutation(n);

    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("parse_permutation: unbalanced brackets");
        std::vector<int> img;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trimmed(item);
            if (item.empty()) throw std::invalid_argument("parse_permutation: empty entry");
            img.push_back(std::stoi(item));
        }
        if (static_cast<int>(img.size()) != n)
            throw std::invalid_argument("parse_permutation: one-line form has wrong rank");
        return Permutation(std::move(img));
    }

    if (s.find('s') != std::string::npos) {
        std::istringstream in(s);
        std::string token;
        std::vector<int> word;
        while (in >> token) {
            if (token.size() < 2 || token[0] != 's')
                throw std::invalid_argument("parse_permutation: bad word token '" + token + "'");
            word.push_back(std::stoi(token.substr(1)));
        }
        return permutation_from_word(word, n);
    }

    if (std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        if (n > 9) throw std::invalid_argument("parse_permutation: digit form requires n <= 9");
        if (static_cast<int>(s.size()) != n)
            throw std::invalid_argument("parse_permutation: digit form has wrong rank");
        std::vector<int> img;
        for (char c : s) img.push_back(c - '0');
        return Permutation(std::move(img));
    }

    throw std::invalid_argument("parse_permutation: unrecognized form '" + s + "'");
}

}  // namespace schubert
