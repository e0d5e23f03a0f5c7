#include "expcon/pmatrix.hpp"

#include <algorithm>

namespace expcon {

PartitionMatrix::PartitionMatrix(std::vector<Partition> rows, std::vector<Partition> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)),
      e_(rows_.size(), std::vector<QTFraction>(cols_.size())) {}

PartitionMatrix PartitionMatrix::identity(const std::vector<Partition>& labels) {
    PartitionMatrix m(labels, labels);
    for (int i = 0; i < m.row_count(); ++i) m.at(i, i) = QTFraction::one();
    return m;
}

PartitionMatrix PartitionMatrix::diagonal(const std::vector<Partition>& labels,
                                          const std::vector<QTFraction>& diag) {
    if (labels.size() != diag.size()) throw SizeMismatch("diagonal length mismatch");
    PartitionMatrix m(labels, labels);
    for (int i = 0; i < m.row_count(); ++i) m.at(i, i) = diag[i];
    return m;
}

int PartitionMatrix::row_index(const Partition& r) const {
    auto it = std::find(rows_.begin(), rows_.end(), r);
    if (it == rows_.end()) throw IndexOutOfRange("row label " + r.to_string() + " not present");
    return static_cast<int>(it - rows_.begin());
}

int PartitionMatrix::col_index(const Partition& c) const {
    auto it = std::find(cols_.begin(), cols_.end(), c);
    if (it == cols_.end()) throw IndexOutOfRange("column label " + c.to_string() + " not present");
    return static_cast<int>(it - cols_.begin());
}

QTFraction& PartitionMatrix::at(const Partition& r, const Partition& c) {
    return e_[row_index(r)][col_index(c)];
}

const QTFraction& PartitionMatrix::at(const Partition& r, const Partition& c) const {
    return e_[row_index(r)][col_index(c)];
}

PartitionMatrix PartitionMatrix::operator*(const PartitionMatrix& o) const {
    if (col_count() != o.row_count()) throw SizeMismatch("matrix product dimension mismatch");
    PartitionMatrix r(rows_, o.cols_);
    for (int i = 0; i < row_count(); ++i)
        for (int k = 0; k < col_count(); ++k) {
            if (e_[i][k].is_zero()) continue;
            for (int j = 0; j < o.col_count(); ++j) {
                if (o.e_[k][j].is_zero()) continue;
                r.e_[i][j] += e_[i][k] * o.e_[k][j];
            }
        }
    return r;
}

PartitionMatrix PartitionMatrix::transpose() const {
    PartitionMatrix r(cols_, rows_);
    for (int i = 0; i < row_count(); ++i)
        for (int j = 0; j < col_count(); ++j) r.e_[j][i] = e_[i][j];
    return r;
}

PartitionMatrix PartitionMatrix::inverse() const {
    if (row_count() != col_count()) throw SingularSystem("inverse of non-square matrix");
    int n = row_count();
    auto a = e_;
    PartitionMatrix inv = identity(rows_);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularSystem("matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv.e_[pivot], inv.e_[col]);
        QTFraction pinv = a[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            a[col][j] *= pinv;
            inv.e_[col][j] *= pinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            QTFraction f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv.e_[r][j] -= f * inv.e_[col][j];
            }
        }
    }
    return inv;
}

bool PartitionMatrix::is_identity() const {
    if (row_count() != col_count()) return false;
    for (int i = 0; i < row_count(); ++i)
        for (int j = 0; j < col_count(); ++j) {
            if (i == j && !e_[i][j].is_one()) return false;
            if (i != j && !e_[i][j].is_zero()) return false;
        }
    return true;
}

bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int i = 0; i < a.row_count(); ++i)
        for (int j = 0; j < a.col_count(); ++j)
            if (a.e_[i][j] != b.e_[i][j]) return false;
    return true;
}

PartitionMatrix PartitionMatrix::substituted(const QTFraction& q_image,
                                             const QTFraction& t_image) const {
    PartitionMatrix r(rows_, cols_);
    for (int i = 0; i < row_count(); ++i)
        for (int j = 0; j < col_count(); ++j) r.e_[i][j] = substitute(e_[i][j], q_image, t_image);
    return r;
}

std::vector<QTFraction> solve_linear(const std::vector<std::vector<QTFraction>>& system_rows,
                                     const std::vector<QTFraction>& rhs) {
    int n = static_cast<int>(system_rows.size());
    if (n == 0 || static_cast<int>(rhs.size()) != n)
        throw SizeMismatch("linear system dimension mismatch");
    // solve x * S = rhs  <=>  S^T x^T = rhs^T
    std::vector<std::vector<QTFraction>> a(n, std::vector<QTFraction>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = system_rows[j][i];
        a[i][n] = rhs[i];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularSystem("singular linear system");
        std::swap(a[pivot], a[col]);
        QTFraction pinv = a[col][col].inverse();
        for (int j = col; j <= n; ++j) a[col][j] *= pinv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            QTFraction f = a[r][col];
            for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<QTFraction> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

const QTLaurent& MixedMatrix::at(const Partition& r, const Permutation& c) const {
    return entries[row_index(r)][col_index(c)];
}

QTLaurent& MixedMatrix::at(const Partition& r, const Permutation& c) {
    return entries[row_index(r)][col_index(c)];
}

int MixedMatrix::row_index(const Partition& r) const {
    auto it = std::find(rows.begin(), rows.end(), r);
    if (it == rows.end()) throw IndexOutOfRange("row label " + r.to_string() + " not present");
    return static_cast<int>(it - rows.begin());
}

int MixedMatrix::col_index(const Permutation& c) const {
    auto it = std::find(cols.begin(), cols.end(), c);
    if (it == cols.end()) throw IndexOutOfRange("column label " + c.to_string() + " not present");
    return static_cast<int>(it - cols.begin());
}

} // namespace expcon
