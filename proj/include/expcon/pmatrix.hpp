#pragma once

#include <vector>

#include "expcon/partitions.hpp"
#include "expcon/qt.hpp"
#include "expcon/symgroup.hpp"

namespace expcon {

/// Exact matrix indexed by partitions in canonical order.
class PartitionMatrix {
  public:
    PartitionMatrix() = default;
    PartitionMatrix(std::vector<Partition> rows, std::vector<Partition> cols);
    static PartitionMatrix identity(const std::vector<Partition>& labels);
    static PartitionMatrix diagonal(const std::vector<Partition>& labels,
                                    const std::vector<QTFraction>& diag);

    const std::vector<Partition>& row_labels() const { return rows_; }
    const std::vector<Partition>& col_labels() const { return cols_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return static_cast<int>(cols_.size()); }

    QTFraction& at(int i, int j) { return e_[i][j]; }
    const QTFraction& at(int i, int j) const { return e_[i][j]; }
    QTFraction& at(const Partition& r, const Partition& c);
    const QTFraction& at(const Partition& r, const Partition& c) const;
    int row_index(const Partition& r) const;
    int col_index(const Partition& c) const;

    PartitionMatrix operator*(const PartitionMatrix& o) const;
    PartitionMatrix transpose() const;
    /// Exact inverse by Gaussian elimination; SingularSystem if singular.
    PartitionMatrix inverse() const;
    bool is_identity() const;

    friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b);
    friend bool operator!=(const PartitionMatrix& a, const PartitionMatrix& b) { return !(a == b); }

    /// Entrywise map through an arbitrary substitution (q,t) -> images.
    PartitionMatrix substituted(const QTFraction& q_image, const QTFraction& t_image) const;

  private:
    std::vector<Partition> rows_, cols_;
    std::vector<std::vector<QTFraction>> e_;
};

/// Solve X * system = rhs for one row vector X (system square over the
/// fraction field); used for basis-change extraction.
std::vector<QTFraction> solve_linear(const std::vector<std::vector<QTFraction>>& system_rows,
                                     const std::vector<QTFraction>& rhs);

/// Exact matrix with partition rows and permutation columns (expansion matrix,
/// Lusztig tables by w). Entries are Laurent polynomials in q.
struct MixedMatrix {
    std::vector<Partition> rows;
    std::vector<Permutation> cols;
    std::vector<std::vector<QTLaurent>> entries;

    const QTLaurent& at(const Partition& r, const Permutation& c) const;
    QTLaurent& at(const Partition& r, const Permutation& c);
    int row_index(const Partition& r) const;
    int col_index(const Permutation& c) const;
};

} // namespace expcon
