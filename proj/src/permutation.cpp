#include "hbl/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hbl {

Permutation::Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Permutation Permutation::from_images(const std::vector<std::size_t>& one_based) {
    Permutation w;
    const std::size_t n = one_based.size();
    std::vector<char> seen(n, 0);
    w.img_.reserve(n);
    for (std::size_t x : one_based) {
        if (x < 1 || x > n || seen[x - 1]) throw std::invalid_argument("Permutation: not a bijection");
        seen[x - 1] = 1;
        w.img_.push_back(x - 1);
    }
    return w;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw std::out_of_range("Permutation::transposition: index out of range");
    Permutation w(n);
    std::swap(w.img_[i - 1], w.img_[i]);
    return w;
}

Permutation Permutation::from_word(std::size_t n, const std::vector<std::size_t>& word) {
    Permutation w(n);
    for (std::size_t i : word) w = w.times_transposition(i);
    return w;
}

Permutation Permutation::cycle_element(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw std::out_of_range("Permutation::cycle_element: k out of range");
    std::vector<std::size_t> word;
    for (std::size_t i = 1; i < k; ++i) word.push_back(i);
    return from_word(n, word);
}

std::vector<Permutation> Permutation::all(std::size_t n) {
    std::vector<Permutation> out;
    Permutation w(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.img_.begin(), w.img_.end()));
    return out;
}

std::size_t Permutation::length() const {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

std::vector<std::size_t> Permutation::reduced_word() const {
    // w = v_i w' with l(w') = l(w) - 1 iff w(i) > w(i+1); greedy smallest i is lexicographically least.
    std::vector<std::size_t> word;
    std::vector<std::size_t> cur = img_;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < cur.size() && cur[i] < cur[i + 1]) ++i;
        if (i + 1 >= cur.size()) break;
        word.push_back(i + 1);
        std::swap(cur[i], cur[i + 1]);
    }
    return word;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> type;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation w;
    w.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) w.img_[img_[i]] = i;
    return w;
}

Permutation Permutation::extended(std::size_t m) const {
    if (m < img_.size()) throw std::invalid_argument("Permutation::extended: cannot shrink");
    Permutation w = *this;
    for (std::size_t i = img_.size(); i < m; ++i) w.img_.push_back(i);
    return w;
}

Permutation operator*(const Permutation& w, const Permutation& v) {
    if (w.size() != v.size()) throw std::invalid_argument("Permutation product: size mismatch");
    Permutation r;
    r.img_.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r.img_[i] = v.img_[w.img_[i]];
    return r;
}

Permutation Permutation::times_transposition(std::size_t i) const {
    if (i < 1 || i >= img_.size()) throw std::out_of_range("Permutation: transposition index out of range");
    Permutation r = *this;
    for (auto& x : r.img_) {
        if (x == i - 1)
            x = i;
        else if (x == i)
            x = i - 1;
    }
    return r;
}

Permutation Permutation::transposition_times(std::size_t i) const {
    if (i < 1 || i >= img_.size()) throw std::out_of_range("Permutation: transposition index out of range");
    Permutation r = *this;
    std::swap(r.img_[i - 1], r.img_[i]);
    return r;
}

bool Permutation::right_ascent(std::size_t i) const {
    // w v_i swaps values i-1 and i (0-based); length grows iff i-1 occurs before i.
    std::size_t pos_a = 0, pos_b = 0;
    for (std::size_t k = 0; k < img_.size(); ++k) {
        if (img_[k] == i - 1) pos_a = k;
        if (img_[k] == i) pos_b = k;
    }
    return pos_a < pos_b;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i] + 1);
    }
    return s + "]";
}

}  // namespace hbl
