#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hbl {

/// Permutation of {1..n} in one-line form, stored 0-based internally.
/// Products apply the left factor first: (w*v)(i) = v(w(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t n);  // identity
    /// One-line form with 1-based images, e.g. {2,1,3}. Throws if not a bijection.
    static Permutation from_images(const std::vector<std::size_t>& one_based);
    /// Basic transposition v_i = (i, i+1), 1 <= i < n.
    static Permutation transposition(std::size_t n, std::size_t i);
    /// Product v_{w[0]} v_{w[1]} ... of basic transpositions.
    static Permutation from_word(std::size_t n, const std::vector<std::size_t>& word);
    /// c_k = v_1 v_2 ... v_{k-1} in S_n (k <= n); c_1 is the identity.
    static Permutation cycle_element(std::size_t n, std::size_t k);
    /// All n! permutations in lexicographic order of one-line form.
    static std::vector<Permutation> all(std::size_t n);

    std::size_t size() const { return img_.size(); }
    /// Image of i (1-based in and out).
    std::size_t operator()(std::size_t i) const { return img_.at(i - 1) + 1; }

    /// Inversion count.
    std::size_t length() const;
    /// Lexicographically smallest reduced word (indices 1..n-1).
    std::vector<std::size_t> reduced_word() const;
    /// Cycle type as a partition (non-increasing).
    std::vector<std::size_t> cycle_type() const;

    bool is_identity() const;
    Permutation inverse() const;
    /// Embeds into S_m (m >= n), fixing n+1..m.
    Permutation extended(std::size_t m) const;

    friend Permutation operator*(const Permutation& w, const Permutation& v);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    /// Right multiplication by v_i swaps the values i and i+1; left
    /// multiplication swaps positions i and i+1.
    Permutation times_transposition(std::size_t i) const;
    Permutation transposition_times(std::size_t i) const;
    /// l(w v_i) > l(w)?
    bool right_ascent(std::size_t i) const;

    std::string to_string() const;

private:
    std::vector<std::size_t> img_;
};

}  // namespace hbl
