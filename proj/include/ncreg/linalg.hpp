#ifndef NCREG_LINALG_HPP
#define NCREG_LINALG_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "ncreg/errors.hpp"

namespace ncreg {

/// One sparse row/vector: (index, nonzero value) pairs sorted by index.
template <class K>
using SparseVec = std::vector<std::pair<int, typename K::Elem>>;

/// a + c*b, merged. Drops entries that cancel.
template <class K>
SparseVec<K> axpy(const K& field, const SparseVec<K>& a,
                  const typename K::Elem& c, const SparseVec<K>& b) {
  SparseVec<K> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      auto v = field.mul(c, b[j].second);
      if (!field.is_zero(v)) r.emplace_back(b[j].first, v);
      ++j;
    } else {
      auto v = field.add(a[i].second, field.mul(c, b[j].second));
      if (!field.is_zero(v)) r.emplace_back(a[i].first, v);
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    auto v = field.mul(c, b[j].second);
    if (!field.is_zero(v)) r.emplace_back(b[j].first, v);
  }
  return r;
}

template <class K>
const typename K::Elem* vec_at(const SparseVec<K>& v, int idx) {
  auto it = std::lower_bound(
      v.begin(), v.end(), idx,
      [](const auto& entry, int i) { return entry.first < i; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

/// Exact sparse matrix in row-major form. No stored zeros.
template <class K>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec<K>& row(int i) const { return data_[i]; }
  SparseVec<K>& row(int i) { return data_[i]; }

  /// Accumulating insert; call finalize(field) once before reading.
  void add(int i, int j, typename K::Elem v) {
    data_[i].emplace_back(j, std::move(v));
  }
  void set_row(int i, SparseVec<K> r) { data_[i] = std::move(r); }

  void finalize(const K& field) {
    for (auto& r : data_) {
      std::sort(r.begin(), r.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVec<K> merged;
      for (auto& e : r) {
        if (!merged.empty() && merged.back().first == e.first) {
          merged.back().second = field.add(merged.back().second, e.second);
          if (field.is_zero(merged.back().second)) merged.pop_back();
        } else if (!field.is_zero(e.second)) {
          merged.push_back(std::move(e));
        }
      }
      r = std::move(merged);
    }
  }

  typename K::Elem get(const K& field, int i, int j) const {
    auto* p = vec_at<K>(data_[i], j);
    return p ? *p : field.zero();
  }

  SparseMatrix transposed() const {
    SparseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    return t;  // rows already sorted because i ascends
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec<K>> data_;
};

template <class K>
struct RrefResult {
  int rank = 0;
  SparseMatrix<K> rref;          // pivot rows first in pivot-column order
  std::vector<int> pivot_cols;   // ascending
};

/// Reduced row-echelon form by exact Gaussian elimination. Pivot choice is
/// deterministic: leftmost column first, then the candidate row that appears
/// lowest in the current working order (original order for untouched rows).
template <class K>
RrefResult<K> rref(const K& field, const SparseMatrix<K>& m) {
  std::vector<SparseVec<K>> work;
  work.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) work.push_back(m.row(i));

  std::vector<SparseVec<K>> pivots;
  std::vector<int> pivot_cols;
  std::vector<bool> used(work.size(), false);

  for (int col = 0; col < m.cols(); ++col) {
    // find the first unused row whose leading entry is this column
    int found = -1;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (used[r] || work[r].empty()) continue;
      if (work[r].front().first == col) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found < 0) continue;
    used[found] = true;

    SparseVec<K> piv =
        axpy(field, SparseVec<K>{}, field.inv(work[found].front().second),
             work[found]);
    work[found].clear();

    // eliminate this column everywhere (full reduction)
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (used[r] || work[r].empty()) continue;
      if (const auto* v = vec_at<K>(work[r], col))
        work[r] = axpy(field, work[r], field.neg(*v), piv);
    }
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      if (const auto* v = vec_at<K>(pivots[p], col))
        pivots[p] = axpy(field, pivots[p], field.neg(*v), piv);
    }
    pivots.push_back(std::move(piv));
    pivot_cols.push_back(col);
  }

  RrefResult<K> out;
  out.rank = static_cast<int>(pivots.size());
  out.pivot_cols = std::move(pivot_cols);
  out.rref = SparseMatrix<K>(m.rows(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    out.rref.set_row(static_cast<int>(i), std::move(pivots[i]));
  return out;
}

template <class K>
int rank(const K& field, const SparseMatrix<K>& m) {
  return rref(field, m).rank;
}

/// Canonical basis of the right null space: one vector per free column, in
/// column order, with the free coordinate set to 1.
template <class K>
std::vector<SparseVec<K>> kernel_basis(const K& field,
                                       const SparseMatrix<K>& m) {
  RrefResult<K> r = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;

  std::vector<SparseVec<K>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec<K> v;
    for (int p = 0; p < r.rank; ++p) {
      if (const auto* a = vec_at<K>(r.rref.row(p), f))
        v.emplace_back(r.pivot_cols[p], field.neg(*a));
    }
    v.emplace_back(f, field.one());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

/// m * v for a sparse column vector v.
template <class K>
SparseVec<K> matvec(const K& field, const SparseMatrix<K>& m,
                    const SparseVec<K>& v) {
  SparseVec<K> out;
  for (int i = 0; i < m.rows(); ++i) {
    auto acc = field.zero();
    const auto& row = m.row(i);
    std::size_t a = 0, b = 0;
    while (a < row.size() && b < v.size()) {
      if (row[a].first < v[b].first)
        ++a;
      else if (row[a].first > v[b].first)
        ++b;
      else
        acc = field.add(acc, field.mul(row[a++].second, v[b++].second));
    }
    if (!field.is_zero(acc)) out.emplace_back(i, acc);
  }
  return out;
}

}  // namespace ncreg

#endif
