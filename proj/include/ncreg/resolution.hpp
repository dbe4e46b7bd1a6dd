#ifndef NCREG_RESOLUTION_HPP
#define NCREG_RESOLUTION_HPP

#include <optional>
#include <utility>

#include "ncreg/extint.hpp"
#include "ncreg/module.hpp"

namespace ncreg {

/// k-basis of one internal degree j of a graded free module ⊕_t A(-s_t):
/// flat coordinates over the pairs (component t, normal word of A_{j-s_t}).
template <class K>
class FreeDegreeBasis {
 public:
  FreeDegreeBasis(const GroebnerBasis<K>& gb, const std::vector<int>& shifts,
                  int j)
      : gb_(&gb), shifts_(shifts), j_(j) {
    offsets_.resize(shifts_.size(), 0);
    for (std::size_t t = 0; t < shifts_.size(); ++t) {
      offsets_[t] = total_;
      int e = j - shifts_[t];
      if (e >= 0) total_ += gb.dim(e);  // throws if e above the window
    }
  }

  int dim() const { return total_; }
  int degree() const { return j_; }

  int index(int t, const Word& w) const {
    int e = j_ - shifts_[t];
    int local = gb_->basis_index(e, w);
    return local < 0 ? -1 : offsets_[t] + local;
  }

  std::pair<int, Word> coord(int idx) const {
    std::size_t t = 0;
    while (t + 1 < shifts_.size() && offsets_[t + 1] <= idx) ++t;
    int e = j_ - shifts_[t];
    return {static_cast<int>(t), gb_->monomial_basis(e)[idx - offsets_[t]]};
  }

  /// Flat coordinates of a normal-form polynomial placed in component t.
  void expand(int t, const Poly<K>& p, SparseVec<K>& out) const {
    for (const auto& [w, c] : p.terms) {
      int idx = index(t, w);
      if (idx < 0) throw Error("word outside the monomial basis");
      out.emplace_back(idx, c);
    }
  }

  /// Turn a flat coordinate vector back into a polynomial column.
  std::vector<Poly<K>> collect(const SparseVec<K>& v) const {
    std::vector<std::vector<typename Poly<K>::Term>> per(shifts_.size());
    for (const auto& [idx, c] : v) {
      auto [t, w] = coord(idx);
      per[t].emplace_back(std::move(w), c);
    }
    std::vector<Poly<K>> col;
    col.reserve(shifts_.size());
    for (auto& terms : per)
      col.push_back(poly_from_terms<K>(gb_->field(), std::move(terms)));
    return col;
  }

 private:
  const GroebnerBasis<K>* gb_;
  std::vector<int> shifts_;
  int j_;
  std::vector<int> offsets_;
  int total_ = 0;
};

namespace detail {

/// w * column, componentwise, in normal form.
template <class K>
std::vector<Poly<K>> word_times_column(const GroebnerBasis<K>& gb,
                                       const Word& w,
                                       const std::vector<Poly<K>>& col) {
  std::vector<Poly<K>> out;
  out.reserve(col.size());
  for (const auto& e : col)
    out.push_back(e.is_zero()
                      ? e
                      : detail::reduce_full(gb.field(),
                                            poly_sandwich(gb.field(), w, e,
                                                          Word{}),
                                            gb.elements));
  return out;
}

/// Matrix of the degree-j piece of the map with the given polynomial columns
/// (source component c maps through columns[c][t] into target component t).
/// Rows are target coordinates, columns source coordinates.
template <class K>
SparseMatrix<K> assemble_map(const GroebnerBasis<K>& gb,
                             const FreeDegreeBasis<K>& target,
                             const FreeDegreeBasis<K>& source,
                             const std::vector<int>& source_shifts,
                             const std::vector<std::vector<Poly<K>>>& columns,
                             int j) {
  SparseMatrix<K> m(target.dim(), source.dim());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    int e = j - source_shifts[c];
    if (e < 0) continue;
    for (const Word& w : gb.monomial_basis(e)) {
      int src = source.index(static_cast<int>(c), w);
      auto imaged = word_times_column(gb, w, columns[c]);
      for (std::size_t t = 0; t < imaged.size(); ++t)
        for (const auto& [w2, coeff] : imaged[t].terms) {
          int tgt = target.index(static_cast<int>(t), w2);
          m.add(tgt, src, coeff);
        }
    }
  }
  m.finalize(gb.field());
  return m;
}

/// Degree-by-degree minimal generator selection for a graded submodule S of
/// the free module with the given shifts. span_at(j, basis) must return
/// vectors spanning S_j. New generators in degree j are the echelon rows of
/// S_j that are new over the span of A * (generators already chosen), which
/// by graded Nakayama is exactly (m S)_j.
template <class K, class SpanFn>
std::pair<GradedFreeModule, std::vector<std::vector<Poly<K>>>>
choose_minimal_generators(const GroebnerBasis<K>& gb,
                          const std::vector<int>& shifts, int jmin, int D,
                          SpanFn span_at) {
  const K& F = gb.field();
  GradedFreeModule chosen;
  std::vector<std::vector<Poly<K>>> columns;

  for (int j = jmin; j <= D; ++j) {
    FreeDegreeBasis<K> fb(gb, shifts, j);
    if (fb.dim() == 0) continue;

    std::vector<SparseVec<K>> candidates = span_at(j, fb);

    std::vector<SparseVec<K>> old_rows;
    for (std::size_t g = 0; g < columns.size(); ++g) {
      int e = j - chosen.shifts[g];
      if (e < 1) continue;
      for (const Word& w : gb.monomial_basis(e)) {
        SparseVec<K> row;
        auto imaged = word_times_column(gb, w, columns[g]);
        for (std::size_t t = 0; t < imaged.size(); ++t)
          fb.expand(static_cast<int>(t), imaged[t], row);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
          return a.first < b.first;
        });
        old_rows.push_back(std::move(row));
      }
    }
    if (candidates.empty()) continue;

    SparseMatrix<K> old_m(static_cast<int>(old_rows.size()), fb.dim());
    for (std::size_t r = 0; r < old_rows.size(); ++r)
      old_m.set_row(static_cast<int>(r), old_rows[r]);
    RrefResult<K> old_r = rref(F, old_m);

    SparseMatrix<K> all_m(
        static_cast<int>(old_rows.size() + candidates.size()), fb.dim());
    for (std::size_t r = 0; r < old_rows.size(); ++r)
      all_m.set_row(static_cast<int>(r), std::move(old_rows[r]));
    for (std::size_t r = 0; r < candidates.size(); ++r)
      all_m.set_row(static_cast<int>(old_rows.size() + r),
                    std::move(candidates[r]));
    RrefResult<K> all_r = rref(F, all_m);

    std::vector<bool> in_old(fb.dim(), false);
    for (int c : old_r.pivot_cols) in_old[c] = true;
    for (int p = 0; p < all_r.rank; ++p) {
      if (in_old[all_r.pivot_cols[p]]) continue;
      chosen.shifts.push_back(j);
      columns.push_back(fb.collect(all_r.rref.row(p)));
    }
  }
  return {std::move(chosen), std::move(columns)};
}

}  // namespace detail

/// A (truncated) minimal graded free resolution: modules F_0..F_n with
/// differential columns d_i: F_i -> F_{i-1}. Every differential entry lies in
/// the augmentation ideal, and d_{i-1} d_i = 0 in all degrees <= deg_bound.
template <class K>
struct MinimalResolution {
  std::shared_ptr<const GroebnerBasis<K>> algebra;
  ModulePresentation<K> module;  // the minimalized input presentation
  std::vector<GradedFreeModule> modules;
  // differentials[i] for i >= 1: columns of d_i (differentials[0] stays empty)
  std::vector<std::vector<std::vector<Poly<K>>>> differentials;
  int hom_bound = 0;
  int deg_bound = 0;
  bool terminated = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }
};

/// Compute the minimal resolution by degreewise syzygy kernels. The
/// resolution is declared terminated only when some step has zero kernel in
/// every internal degree <= D *and* every computed kernel step i satisfied
/// max shift(F_i) + max relation degree <= D, so no syzygy generator can hide
/// above the window.
template <class K>
MinimalResolution<K> minimal_resolution(const ModulePresentation<K>& input,
                                        int n_max, int D) {
  const GroebnerBasis<K>& gb = *input.algebra;
  const K& F = gb.field();
  if (gb.certified_degree < D)
    throw WindowError("Groebner basis certified to degree " +
                      std::to_string(gb.certified_degree) + ", need " +
                      std::to_string(D));

  MinimalResolution<K> res;
  res.algebra = input.algebra;
  res.module = minimalize(input);
  res.hom_bound = n_max;
  res.deg_bound = D;

  const ModulePresentation<K>& M = res.module;
  if (M.max_column_degree() > D)
    throw WindowError("module relations reach degree " +
                      std::to_string(M.max_column_degree()) +
                      ", beyond the window D=" + std::to_string(D));

  res.modules.push_back(M.cover);
  res.differentials.emplace_back();

  if (M.columns.empty() || M.cover.rank() == 0) {
    res.terminated = true;  // free (or zero) module, nothing hides anywhere
    return res;
  }

  // step 1: minimal generators of the relation submodule
  int jmin = M.column_degrees[0];
  for (int d : M.column_degrees) jmin = d < jmin ? d : jmin;
  auto relation_span = [&](int j, const FreeDegreeBasis<K>& fb) {
    std::vector<SparseVec<K>> rows;
    for (std::size_t c = 0; c < M.columns.size(); ++c) {
      int e = j - M.column_degrees[c];
      if (e < 0) continue;
      for (const Word& w : gb.monomial_basis(e)) {
        SparseVec<K> row;
        auto imaged = detail::word_times_column(gb, w, M.columns[c]);
        for (std::size_t t = 0; t < imaged.size(); ++t)
          fb.expand(static_cast<int>(t), imaged[t], row);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
          return a.first < b.first;
        });
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };
  auto [f1, d1] = detail::choose_minimal_generators(gb, M.cover.shifts, jmin,
                                                    D, relation_span);
  res.modules.push_back(std::move(f1));
  res.differentials.push_back(std::move(d1));

  bool zero_kernel_found = false;
  int kernels_computed_through = 0;

  while (static_cast<int>(res.modules.size()) - 1 < n_max) {
    int i = static_cast<int>(res.modules.size()) - 1;  // kernel of d_i
    const auto& src = res.modules[i];
    const auto& tgt = res.modules[i - 1];
    const auto& cols = res.differentials[i];

    auto kernel_span = [&](int j, const FreeDegreeBasis<K>& fb) {
      FreeDegreeBasis<K> tgt_fb(gb, tgt.shifts, j);
      SparseMatrix<K> map =
          detail::assemble_map(gb, tgt_fb, fb, src.shifts, cols, j);
      return kernel_basis(F, map);
    };
    auto [fn, dn] = detail::choose_minimal_generators(
        gb, src.shifts, src.min_shift(), D, kernel_span);
    kernels_computed_through = i;
    if (fn.rank() == 0) {
      zero_kernel_found = true;
      break;
    }
    res.modules.push_back(std::move(fn));
    res.differentials.push_back(std::move(dn));
  }

  if (zero_kernel_found) {
    bool bounds_ok = true;
    int maxrel = gb.pres.max_relation_degree();
    for (int i = 1; i <= kernels_computed_through; ++i)
      if (res.modules[i].max_shift() + maxrel > D) bounds_ok = false;
    res.terminated = bounds_ok;
  }
  return res;
}

// ---------------------------------------------------------------------------

/// beta_{i,j} = dim Tor_i(k, M)_j read off the resolution shifts. Entries
/// with i > window.n_max or j > window.D are unknown, not zero.
struct BettiTable {
  std::map<std::pair<int, int>, int> entries;
  Window window;
  bool terminated = false;

  int at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

template <class K>
BettiTable betti_table(const MinimalResolution<K>& res) {
  BettiTable b;
  b.window = {res.hom_bound, res.deg_bound};
  b.terminated = res.terminated;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int s : res.modules[i].shifts)
      ++b.entries[{static_cast<int>(i), s}];
  return b;
}

/// Exact if the resolution terminated; otherwise the computed length is a
/// certified lower bound (never reported as infinity).
template <class K>
RegularityValue projective_dimension(const MinimalResolution<K>& res) {
  Window w{res.hom_bound, res.deg_bound};
  if (res.module.cover.rank() == 0)
    return RegularityValue::exact(ExtInt::minus_inf(), w);
  if (res.terminated)
    return RegularityValue::exact(ExtInt::of(res.length()), w);
  return RegularityValue::lower_bound(ExtInt::of(res.length()), w);
}

// ---------------------------------------------------------------------------

/// For a terminated resolution, the alternating sum of shift polynomials
/// times the algebra's Hilbert series must reproduce the module's Hilbert
/// function: (sum_i (-1)^i sum_j beta_{i,j} t^j) * H_A(t) = H_M(t), checked
/// as far as the certification window allows.
template <class K>
bool euler_identity_holds(const MinimalResolution<K>& res);

/// Graded pieces M_j = (F_0)_j / N_j of a module presentation, with the left
/// A-action, obtained by normal-form linear algebra. Certified for
/// min cover shift <= j <= hi.
template <class K>
class ModulePieces {
 public:
  ModulePieces(const ModulePresentation<K>& m, int hi)
      : mod_(&m), gb_(m.algebra.get()), hi_(hi) {
    lo_ = m.cover.rank() == 0 ? 0 : m.cover.min_shift();
    const K& F = gb_->field();
    for (int j = lo_; j <= hi_; ++j) {
      Piece piece{FreeDegreeBasis<K>(*gb_, m.cover.shifts, j), {}, {}, {}, {}};
      const auto& fb = piece.fb;
      std::vector<SparseVec<K>> rows;
      for (std::size_t c = 0; c < m.columns.size(); ++c) {
        int e = j - m.column_degrees[c];
        if (e < 0) continue;
        for (const Word& w : gb_->monomial_basis(e)) {
          SparseVec<K> row;
          auto imaged = detail::word_times_column(*gb_, w, m.columns[c]);
          for (std::size_t t = 0; t < imaged.size(); ++t)
            fb.expand(static_cast<int>(t), imaged[t], row);
          std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
            return a.first < b.first;
          });
          rows.push_back(std::move(row));
        }
      }
      SparseMatrix<K> nm(static_cast<int>(rows.size()), fb.dim());
      for (std::size_t r = 0; r < rows.size(); ++r)
        nm.set_row(static_cast<int>(r), std::move(rows[r]));
      RrefResult<K> rr = rref(F, nm);

      piece.pivot_rows.assign(fb.dim(), -1);
      for (int p = 0; p < rr.rank; ++p)
        piece.pivot_rows[rr.pivot_cols[p]] = p;
      piece.rep_of.assign(fb.dim(), -1);
      for (int idx = 0; idx < fb.dim(); ++idx)
        if (piece.pivot_rows[idx] < 0) {
          piece.rep_of[idx] = static_cast<int>(piece.reps.size());
          piece.reps.push_back(idx);
        }
      piece.rr = std::move(rr);
      pieces_.push_back(std::move(piece));
    }
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }

  int dim(int j) const {
    if (j < lo_) return 0;
    return static_cast<int>(piece(j).reps.size());
  }

  GradedDims dims() const {
    GradedDims d;
    d.lo = std::min(lo_, 0);
    d.hi = hi_;
    for (int j = lo_; j <= hi_; ++j) d.set(j, dim(j));
    return d;
  }

  /// (component, word) labelling of the r-th basis vector of M_j.
  std::pair<int, Word> rep(int j, int r) const {
    const Piece& p = piece(j);
    return p.fb.coord(p.reps[r]);
  }

  /// Reduce a vector in free-cover coordinates to module coordinates.
  SparseVec<K> project(int j, const SparseVec<K>& fvec) const {
    const K& F = gb_->field();
    const Piece& p = piece(j);
    std::map<int, typename K::Elem> acc;
    auto bump = [&](int idx, const typename K::Elem& v) {
      auto [it, fresh] = acc.try_emplace(idx, v);
      if (!fresh) {
        it->second = F.add(it->second, v);
        if (F.is_zero(it->second)) acc.erase(it);
      } else if (F.is_zero(it->second)) {
        acc.erase(it);
      }
    };
    for (const auto& [idx, v] : fvec) {
      int prow = p.pivot_rows[idx];
      if (prow < 0) {
        bump(p.rep_of[idx], v);
      } else {
        for (const auto& [col, a] : p.rr.rref.row(prow)) {
          if (col == idx) continue;  // the pivot itself
          bump(p.rep_of[col], F.neg(F.mul(v, a)));
        }
      }
    }
    SparseVec<K> out(acc.begin(), acc.end());
    return out;
  }

  /// Left action of a homogeneous normal-form element a on M_j.
  SparseVec<K> act(const Poly<K>& a, int j, const SparseVec<K>& v) const {
    const K& F = gb_->field();
    if (a.is_zero() || v.empty()) return {};
    int d = poly_degree(gb_->grading(), a);
    const Piece& src = piece(j);
    const Piece& dst = piece(j + d);
    SparseVec<K> fvec;
    for (const auto& [r, vr] : v) {
      auto [t, w] = src.fb.coord(src.reps[r]);
      for (const auto& [wa, ca] : a.terms) {
        Poly<K> prod = detail::reduce_full(
            F, poly_monomial(F, concat(wa, w), F.one()), gb_->elements);
        for (const auto& [w2, c2] : prod.terms)
          fvec.emplace_back(dst.fb.index(t, w2),
                            F.mul(vr, F.mul(ca, c2)));
      }
    }
    std::sort(fvec.begin(), fvec.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return project(j + d, fvec);
  }

  /// Certified top degree when M is finite dimensional: the dimensions hit
  /// zero on a run of max-generator-degree consecutive degrees above the top
  /// cover shift, which forces them to stay zero. Returns nothing if the
  /// window cannot certify finiteness.
  std::optional<int> certified_top_degree() const {
    if (mod_->cover.rank() == 0) return std::nullopt;  // zero module
    int g = gb_->grading().max_generator_degree();
    int base = mod_->cover.max_shift();
    for (int t = base; t + g <= hi_; ++t) {
      bool run = true;
      for (int j = t + 1; j <= t + g; ++j)
        if (dim(j) != 0) run = false;
      if (!run) continue;
      int top = lo_ - 1;
      for (int j = lo_; j <= t; ++j)
        if (dim(j) != 0) top = j;
      return top;  // lo_-1 cannot happen: minimal covers generate nonzero M
    }
    return std::nullopt;
  }

 private:
  struct Piece {
    FreeDegreeBasis<K> fb;
    RrefResult<K> rr;
    std::vector<int> pivot_rows;  // free-coord -> rref row, -1 if free
    std::vector<int> rep_of;      // free-coord -> module coordinate
    std::vector<int> reps;        // module coordinate -> free-coord
  };
  const Piece& piece(int j) const {
    if (j < lo_ || j > hi_)
      throw WindowError("module piece degree " + std::to_string(j) +
                        " outside [" + std::to_string(lo_) + ", " +
                        std::to_string(hi_) + "]");
    return pieces_[j - lo_];
  }

  const ModulePresentation<K>* mod_;
  const GroebnerBasis<K>* gb_;
  int lo_, hi_;
  std::vector<Piece> pieces_;
};

template <class K>
bool euler_identity_holds(const MinimalResolution<K>& res) {
  const GroebnerBasis<K>& gb = *res.algebra;
  const int D = res.deg_bound;
  if (res.module.cover.rank() == 0) return true;
  const int min_shift = res.module.cover.min_shift();
  const int hi = std::min(D, D + min_shift);

  std::map<int, long long> signed_betti;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int s : res.modules[i].shifts)
      signed_betti[s] += (i % 2 == 0) ? 1 : -1;

  ModulePieces<K> pieces(res.module, D + min_shift);
  for (int n = pieces.lo(); n <= hi; ++n) {
    long long lhs = 0;
    for (const auto& [s, c] : signed_betti) {
      int e = n - s;
      if (e >= 0 && e <= gb.certified_degree) lhs += c * gb.dim(e);
    }
    if (lhs != pieces.dim(n)) return false;
  }
  return true;
}

}  // namespace ncreg

#endif
