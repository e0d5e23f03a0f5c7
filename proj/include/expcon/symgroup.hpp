#pragma once

#include <compare>
#include <string>
#include <vector>

#include "expcon/partitions.hpp"
#include "expcon/qt.hpp"

namespace expcon {

enum class Side { left, right };

/// Element of S_n in one-line notation (images of 1..n).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation simple(int n, int i); // s_i, 1 <= i <= n-1

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; } // 1-based
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

    std::string to_string() const; // reduced word, e.g. "s1 s2 s1"; identity prints "1"

  private:
    std::vector<int> images_;
};

/// u then v is compose(u, v): x -> u(v(x)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

/// Inversion count == reduced word length.
int length(const Permutation& w);

/// s_i * w (left) or w * s_i (right), with the signed length change (+1/-1).
std::pair<Permutation, int> apply_simple(const Permutation& w, int i, Side side);

Partition cycle_type(const Permutation& w);

/// Lexicographically-first reduced word (by repeated left multiplication).
std::vector<int> reduced_word(const Permutation& w);

/// Canonical minimal-length representative of the class of cycle type nu:
/// per part a cycle s_a s_{a+1} ... on consecutive positions.
Permutation min_class_rep(const Partition& nu);

/// All of W_pi = S_{pi_1} x ... x S_{pi_l} inside S_n.
std::vector<Permutation> young_subgroup(const Composition& pi);

/// W_pi(q) = sum over W_pi of q^length, by direct summation.
QTLaurent poincare(const Composition& pi);

/// All n! elements in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// The canonical column order for permutation-indexed tables: grouped by
/// conjugacy class (classes in canonical partition order), within a class by
/// decreasing length, then ascending one-line order.
std::vector<Permutation> canonical_class_order(int n);

/// Accepts a generator word ("s1 s2 s1", "1" for the identity) or one-line
/// notation ("2 3 1"); n disambiguates and pads generator words.
Permutation parse_permutation(const std::string& s, int n);

} // namespace expcon
