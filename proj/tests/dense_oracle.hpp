#ifndef NCREG_TESTS_DENSE_ORACLE_HPP
#define NCREG_TESTS_DENSE_ORACLE_HPP

// Independent Betti-number oracle. Builds the graded pieces of the algebra
// directly as quotients of free-word spaces by dense row reduction (no
// rewriting, no normal forms, no sparse code) and computes Tor_i(k, M)_j by
// degreewise syzygy matrices over those pieces. Intended for small instances;
// module presentations must already be minimal (no scalar entries).

#include <map>
#include <vector>

namespace dense_oracle {

template <class K>
using Row = std::vector<typename K::Elem>;

template <class K>
struct DenseRref {
  std::vector<Row<K>> rows;      // reduced nonzero rows
  std::vector<int> pivot_cols;   // one per row, ascending
};

template <class K>
DenseRref<K> rref_dense(const K& F, std::vector<Row<K>> rows) {
  DenseRref<K> out;
  if (rows.empty()) return out;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && F.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    auto inv = F.inv(rows[r][c]);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = F.mul(inv, rows[r][j]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || F.is_zero(rows[i][c])) continue;
      auto f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

template <class K>
std::vector<Row<K>> kernel_dense(const K& F, const std::vector<Row<K>>& rows,
                                 std::size_t cols) {
  DenseRref<K> r = rref_dense(F, rows);
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Row<K>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row<K> v(cols, F.zero());
    v[f] = F.one();
    for (std::size_t p = 0; p < r.rows.size(); ++p)
      v[r.pivot_cols[p]] = F.neg(r.rows[p][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

using FreeWord = std::vector<int>;
template <class K>
using RawPoly = std::vector<std::pair<FreeWord, typename K::Elem>>;

/// The algebra's graded pieces as quotient spaces of all free words.
template <class K>
class DenseAlgebra {
 public:
  DenseAlgebra(const K& field, std::vector<int> gen_degrees,
               std::vector<RawPoly<K>> relations, int D)
      : F(field), gen_degrees_(std::move(gen_degrees)), D_(D) {
    words_.resize(D + 1);
    index_.resize(D + 1);
    expand_.resize(D + 1);
    dims_.resize(D + 1, 0);
    for (int d = 0; d <= D; ++d) {
      FreeWord w;
      enumerate(d, 0, w, words_[d]);
      for (std::size_t i = 0; i < words_[d].size(); ++i)
        index_[d][words_[d][i]] = static_cast<int>(i);
    }
    for (int d = 0; d <= D; ++d) {
      std::vector<Row<K>> ideal_rows;
      for (const auto& rel : relations) {
        int e = word_degree(rel.front().first);
        if (e > d) continue;
        for (int p = 0; p + e <= d; ++p) {
          for (const FreeWord& a : words_[p]) {
            for (const FreeWord& b : words_[d - e - p]) {
              Row<K> row(words_[d].size(), F.zero());
              for (const auto& [w, c] : rel) {
                FreeWord full = a;
                full.insert(full.end(), w.begin(), w.end());
                full.insert(full.end(), b.begin(), b.end());
                int idx = index_[d].at(full);
                row[idx] = F.add(row[idx], c);
              }
              ideal_rows.push_back(std::move(row));
            }
          }
        }
      }
      DenseRref<K> rr = rref_dense(F, ideal_rows);
      std::vector<int> rep_of(words_[d].size(), -1);
      std::vector<int> pivot_row(words_[d].size(), -1);
      for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
        pivot_row[rr.pivot_cols[p]] = static_cast<int>(p);
      int dim = 0;
      std::vector<int> reps;
      for (std::size_t i = 0; i < words_[d].size(); ++i)
        if (pivot_row[i] < 0) {
          rep_of[i] = dim++;
          reps.push_back(static_cast<int>(i));
        }
      dims_[d] = dim;
      reps_.push_back(reps);
      // expansion of every word in the quotient basis
      expand_[d].assign(words_[d].size(), Row<K>(dim, F.zero()));
      for (std::size_t i = 0; i < words_[d].size(); ++i) {
        if (pivot_row[i] < 0) {
          expand_[d][i][rep_of[i]] = F.one();
        } else {
          const Row<K>& row = rr.rows[pivot_row[i]];
          // pivot + sum_{free j} row[j] * word_j = 0 in A
          for (std::size_t j = 0; j < row.size(); ++j)
            if (rep_of[j] >= 0 && !F.is_zero(row[j]))
              expand_[d][i][rep_of[j]] = F.neg(row[j]);
        }
      }
    }
  }

  int D() const { return D_; }
  int dim(int d) const { return d < 0 ? 0 : dims_[d]; }
  int word_degree(const FreeWord& w) const {
    int d = 0;
    for (int g : w) d += gen_degrees_[g];
    return d;
  }

  /// Vector of a free word in the quotient basis of its degree.
  const Row<K>& reduce(int d, const FreeWord& w) const {
    return expand_[d][index_[d].at(w)];
  }

  /// product: (basis rep i of degree a) * (basis rep j of degree b)
  Row<K> mult(int a, int i, int b, int j) const {
    FreeWord w = words_[a][reps_[a][i]];
    const FreeWord& v = words_[b][reps_[b][j]];
    w.insert(w.end(), v.begin(), v.end());
    return reduce(a + b, w);
  }

  Row<K> poly_to_vec(int d, const RawPoly<K>& p) const {
    Row<K> out(dim(d), F.zero());
    for (const auto& [w, c] : p) {
      const Row<K>& red = reduce(d, w);
      for (int i = 0; i < dim(d); ++i)
        out[i] = F.add(out[i], F.mul(c, red[i]));
    }
    return out;
  }

  const K& F;

 private:
  void enumerate(int target, int sofar, FreeWord& cur,
                 std::vector<FreeWord>& out) const {
    if (sofar == target) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = 0; g < gen_degrees_.size(); ++g) {
      if (sofar + gen_degrees_[g] > target) continue;
      cur.push_back(static_cast<int>(g));
      enumerate(target, sofar + gen_degrees_[g], cur, out);
      cur.pop_back();
    }
  }

  std::vector<int> gen_degrees_;
  int D_;
  std::vector<std::vector<FreeWord>> words_;
  std::vector<std::map<FreeWord, int>> index_;
  std::vector<std::vector<Row<K>>> expand_;  // word -> quotient coordinates
  std::vector<std::vector<int>> reps_;
  std::vector<int> dims_;
};

/// A module presentation over the dense algebra (already minimal).
template <class K>
struct DenseModule {
  std::vector<int> shifts;
  std::vector<std::vector<RawPoly<K>>> columns;  // columns[c][t]
  std::vector<int> column_degrees;
};

/// Flat basis of (⊕_t A(-s_t))_j over the dense algebra.
struct DensePiece {
  std::vector<int> offsets;
  int total = 0;
};

template <class K>
DensePiece dense_piece(const DenseAlgebra<K>& A, const std::vector<int>& shifts,
                       int j) {
  DensePiece p;
  p.offsets.resize(shifts.size());
  for (std::size_t t = 0; t < shifts.size(); ++t) {
    p.offsets[t] = p.total;
    int e = j - shifts[t];
    if (e >= 0 && e <= A.D()) p.total += A.dim(e);
  }
  return p;
}

/// Left action of the degree-e basis element v on a flat vector at degree j.
template <class K>
Row<K> dense_act(const DenseAlgebra<K>& A, const std::vector<int>& shifts,
                 int e, int v, int j, const Row<K>& vec) {
  const K& F = A.F;
  DensePiece src = dense_piece(A, shifts, j);
  DensePiece dst = dense_piece(A, shifts, j + e);
  Row<K> out(dst.total, F.zero());
  for (std::size_t t = 0; t < shifts.size(); ++t) {
    int du = j - shifts[t];
    if (du < 0) continue;
    for (int u = 0; u < A.dim(du); ++u) {
      const auto& c = vec[src.offsets[t] + u];
      if (F.is_zero(c)) continue;
      Row<K> prod = A.mult(e, v, du, u);
      for (std::size_t i = 0; i < prod.size(); ++i)
        out[dst.offsets[t] + i] =
            F.add(out[dst.offsets[t] + i], F.mul(c, prod[i]));
    }
  }
  return out;
}

/// Betti numbers beta_{i,j} for i <= n_max, j <= D by iterated degreewise
/// syzygies with graded-Nakayama minimalization.
template <class K>
std::map<std::pair<int, int>, int> dense_betti(const DenseAlgebra<K>& A,
                                               const DenseModule<K>& M,
                                               int n_max, int D) {
  const K& F = A.F;
  std::map<std::pair<int, int>, int> betti;
  for (int s : M.shifts) ++betti[{0, s}];
  if (M.columns.empty() || M.shifts.empty()) return betti;

  // generators of the current submodule: (degree, flat vector over prev)
  struct Gen {
    int degree;
    Row<K> vec;
  };
  std::vector<int> prev_shifts = M.shifts;

  // seed step: spanning sets of the relation submodule
  auto relation_span = [&](int j) {
    std::vector<Row<K>> rows;
    for (std::size_t c = 0; c < M.columns.size(); ++c) {
      int e = j - M.column_degrees[c];
      if (e < 0) continue;
      DensePiece fp = dense_piece(A, M.shifts, M.column_degrees[c]);
      Row<K> base(fp.total, F.zero());
      for (std::size_t t = 0; t < M.shifts.size(); ++t) {
        int dt = M.column_degrees[c] - M.shifts[t];
        if (dt < 0 || M.columns[c][t].empty()) continue;
        Row<K> v = A.poly_to_vec(dt, M.columns[c][t]);
        for (std::size_t i = 0; i < v.size(); ++i)
          base[fp.offsets[t] + i] = F.add(base[fp.offsets[t] + i], v[i]);
      }
      for (int w = 0; w < A.dim(e); ++w)
        rows.push_back(
            dense_act(A, M.shifts, e, w, M.column_degrees[c], base));
    }
    return rows;
  };

  int step = 1;
  std::vector<Gen> current;  // generators chosen at this step, inside prev
  auto choose = [&](auto span_at, int jmin) {
    std::vector<Gen> gens;
    for (int j = jmin; j <= D; ++j) {
      DensePiece fp = dense_piece(A, prev_shifts, j);
      if (fp.total == 0) continue;
      std::vector<Row<K>> old_rows;
      for (const Gen& g : gens) {
        int e = j - g.degree;
        if (e < 1) continue;
        for (int w = 0; w < A.dim(e); ++w)
          old_rows.push_back(dense_act(A, prev_shifts, e, w, g.degree, g.vec));
      }
      std::vector<Row<K>> cand = span_at(j);
      if (cand.empty()) continue;
      DenseRref<K> old_r = rref_dense(F, old_rows);
      std::vector<Row<K>> all = old_rows;
      for (auto& r : cand) all.push_back(std::move(r));
      DenseRref<K> all_r = rref_dense(F, all);
      std::vector<bool> in_old(fp.total, false);
      for (int c : old_r.pivot_cols) in_old[c] = true;
      for (std::size_t p = 0; p < all_r.pivot_cols.size(); ++p)
        if (!in_old[all_r.pivot_cols[p]])
          gens.push_back({j, all_r.rows[p]});
    }
    return gens;
  };

  current = choose(relation_span, 0);
  for (const Gen& g : current) ++betti[{1, g.degree}];

  while (step < n_max && !current.empty()) {
    // kernel of the map sending the chosen generators into prev_shifts
    std::vector<int> cur_shifts;
    for (const Gen& g : current) cur_shifts.push_back(g.degree);
    auto kernel_span = [&, cur = current, src_shifts = cur_shifts,
                        tgt_shifts = prev_shifts](int j) {
      DensePiece src = dense_piece(A, src_shifts, j);
      DensePiece tgt = dense_piece(A, tgt_shifts, j);
      std::vector<Row<K>> rows;  // one per source coordinate
      for (std::size_t c = 0; c < cur.size(); ++c) {
        int e = j - cur[c].degree;
        if (e < 0) continue;
        for (int w = 0; w < A.dim(e); ++w)
          rows.push_back(
              dense_act(A, tgt_shifts, e, w, cur[c].degree, cur[c].vec));
      }
      // transpose into (target x source) and take the kernel
      std::vector<Row<K>> mat(tgt.total, Row<K>(src.total, F.zero()));
      for (std::size_t s = 0; s < rows.size(); ++s)
        for (int r = 0; r < tgt.total; ++r) mat[r][s] = rows[s][r];
      return kernel_dense(F, mat, src.total);
    };
    int jmin = cur_shifts.empty() ? 0 : cur_shifts[0];
    for (int s : cur_shifts) jmin = s < jmin ? s : jmin;

    prev_shifts = cur_shifts;
    current = choose(kernel_span, jmin);
    ++step;
    for (const Gen& g : current) ++betti[{step, g.degree}];
  }
  return betti;
}

}  // namespace dense_oracle

#endif
