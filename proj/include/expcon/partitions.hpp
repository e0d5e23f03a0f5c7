#pragma once

#include <compare>
#include <string>
#include <vector>

#include "expcon/errors.hpp"

namespace expcon {

/// Composition of n: ordered sequence of positive parts.
using Composition = std::vector<int>;

/// Integer partition: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition of_composition(const Composition& pi);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based, 0 beyond length
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    /// Plain lexicographic compare on the part vectors (used for map keys;
    /// the canonical table order is descending lexicographic).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;              // "2,1"
    static Partition parse(const std::string&); // accepts "2,1" and "1^3"

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n in descending lexicographic order; this is the
/// canonical row/column index for every matrix in the artifact.
std::vector<Partition> partitions_of(int n);

/// n(lambda) = sum (i-1)*lambda_i
int n_stat(const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// Dominance order on partitions of equal size.
bool dominates(const Partition& lambda, const Partition& mu);

/// Cells are 1-based (row, col) inside the diagram.
int arm(const Partition& lambda, int row, int col);
int leg(const Partition& lambda, int row, int col);

/// Number of semistandard tableaux of shape lambda and content pi.
long kostka(const Partition& lambda, const Partition& pi);

/// All compositions of n with positive parts, in descending lexicographic order.
std::vector<Composition> compositions_of(int n);

std::string composition_to_string(const Composition& pi);
Composition parse_composition(const std::string& s);

} // namespace expcon
