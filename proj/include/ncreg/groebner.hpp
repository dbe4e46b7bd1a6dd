#ifndef NCREG_GROEBNER_HPP
#define NCREG_GROEBNER_HPP

#include <map>
#include <set>
#include <vector>

#include "ncreg/graded_dims.hpp"
#include "ncreg/presentation.hpp"

namespace ncreg {

struct GroebnerOptions {
  int max_elements = 100000;  // hard element budget; partial data beyond it
};

/// Truncated reduced Groebner basis of the two-sided relation ideal.
///
/// All S-polynomial obstructions of degree <= certified_degree are resolved,
/// so (homogeneity) normal forms and monomial bases in degrees within the
/// window are exact. `complete` is set only when the obstruction queue
/// emptied with nothing deferred above the truncation degree.
template <class K>
class GroebnerBasis {
 public:
  explicit GroebnerBasis(Presentation<K> p) : pres(std::move(p)) {}

  Presentation<K> pres;
  std::vector<Poly<K>> elements;  // monic, tail-reduced, sorted by leading word
  int certified_degree = 0;
  bool complete = false;
  bool budget_exceeded = false;

  const K& field() const { return pres.field; }
  const Grading& grading() const { return pres.grading; }

  /// All degree-d words with no leading word as a factor, in deglex order.
  const std::vector<Word>& monomial_basis(int d) const {
    require_degree(d);
    return bases_[d];
  }
  int dim(int d) const { return static_cast<int>(monomial_basis(d).size()); }
  int basis_index(int d, const Word& w) const {
    require_degree(d);
    auto it = index_[d].find(w);
    return it == index_[d].end() ? -1 : it->second;
  }

  void build_bases() {
    bases_.assign(certified_degree + 1, {});
    index_.assign(certified_degree + 1, {});
    std::vector<Word> leads;
    for (const auto& g : elements) leads.push_back(g.leading_word());
    for (int d = 0; d <= certified_degree; ++d) {
      Word w;
      enumerate(d, 0, w, leads, bases_[d]);
      for (std::size_t i = 0; i < bases_[d].size(); ++i)
        index_[d][bases_[d][i]] = static_cast<int>(i);
    }
  }

 private:
  void require_degree(int d) const {
    if (d < 0 || d > certified_degree)
      throw WindowError("degree " + std::to_string(d) +
                        " exceeds certified degree " +
                        std::to_string(certified_degree));
  }

  void enumerate(int target, int sofar, Word& current,
                 const std::vector<Word>& leads,
                 std::vector<Word>& out) const {
    if (sofar == target) {
      out.push_back(current);
      return;
    }
    for (int g = 0; g < grading().generator_count(); ++g) {
      int nd = sofar + grading().generator_degree(g);
      if (nd > target) continue;
      Word next = current.append(g);
      bool blocked = false;
      for (const auto& lw : leads)
        if (next.ends_with(lw)) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      enumerate(target, nd, next, leads, out);
    }
  }

  std::vector<std::vector<Word>> bases_;
  std::vector<std::map<Word, int>> index_;
};

namespace detail {

/// Full reduction of a homogeneous polynomial modulo the given monic
/// elements. Reducers are tried in element order, factors leftmost-first;
/// each rewrite strictly decreases the working term in deglex, so this
/// terminates. Result has no word divisible by any element's leading word.
template <class K>
Poly<K> reduce_full(const K& field, const Poly<K>& p,
                    const std::vector<Poly<K>>& elements, int skip = -1) {
  std::map<Word, typename K::Elem, std::greater<Word>> work;
  for (const auto& [w, c] : p.terms) work[w] = c;
  std::vector<typename Poly<K>::Term> out;

  while (!work.empty()) {
    auto it = work.begin();  // greatest word
    Word w = it->first;
    auto c = it->second;

    int reducer = -1;
    std::size_t pos = 0;
    for (std::size_t g = 0; g < elements.size(); ++g) {
      if (static_cast<int>(g) == skip) continue;
      pos = w.find_factor(elements[g].leading_word());
      if (pos != std::u16string::npos) {
        reducer = static_cast<int>(g);
        break;
      }
    }
    if (reducer < 0) {
      out.emplace_back(std::move(w), std::move(c));
      work.erase(it);
      continue;
    }

    work.erase(it);
    const Poly<K>& g = elements[reducer];
    Word a = w.prefix(pos);
    Word b = w.suffix_from(pos + g.leading_word().length());
    // w = a*lw(g)*b and g is monic, so c*w == -c * a*tail(g)*b mod the ideal
    for (std::size_t t = 1; t < g.terms.size(); ++t) {
      Word ww = concat(a, concat(g.terms[t].first, b));
      auto delta = field.neg(field.mul(c, g.terms[t].second));
      auto [slot, fresh] = work.try_emplace(ww, delta);
      if (!fresh) {
        slot->second = field.add(slot->second, delta);
        if (field.is_zero(slot->second)) work.erase(slot);
      } else if (field.is_zero(slot->second)) {
        work.erase(slot);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return y.first < x.first; });
  Poly<K> r;
  r.terms = std::move(out);
  return r;
}

struct Obstruction {
  int degree;
  Word word;     // the overlap word (or an input relation's leading word)
  long seq;      // insertion counter, for a total deterministic order
  int left = -1, right = -1;  // basis indices; -1 marks an input relation
  std::size_t overlap = 0;    // overlap length
  int input = -1;             // index into the input relations

  friend bool operator<(const Obstruction& a, const Obstruction& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.word != b.word) return a.word < b.word;
    return a.seq < b.seq;
  }
};

}  // namespace detail

/// Buchberger–Mora overlap completion truncated at degree D, processed in
/// increasing obstruction degree so every answer of degree <= D is exact.
template <class K>
GroebnerBasis<K> groebner_truncated(const Presentation<K>& pres, int D,
                                    const GroebnerOptions& opts = {}) {
  if (D < pres.max_relation_degree())
    throw WindowError("truncation degree " + std::to_string(D) +
                      " is below the maximal relation degree " +
                      std::to_string(pres.max_relation_degree()));

  const K& F = pres.field;
  const Grading& grading = pres.grading;

  GroebnerBasis<K> gb(pres);

  std::set<detail::Obstruction> queue;
  long seq = 0;
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const auto& r = pres.relations[i];
    detail::Obstruction o;
    o.degree = poly_degree(grading, r);
    o.word = r.leading_word();
    o.seq = seq++;
    o.input = static_cast<int>(i);
    queue.insert(std::move(o));
  }

  std::vector<Poly<K>>& basis = gb.elements;
  long deferred_above_D = 0;

  auto enqueue_overlaps = [&](int gi, int gj) {
    const Word& u = basis[gi].leading_word();
    const Word& v = basis[gj].leading_word();
    std::size_t maxlen = std::min(u.length(), v.length()) - 1;
    for (std::size_t len = 1; len <= maxlen; ++len) {
      if (!u.ends_with(v.prefix(len))) continue;
      detail::Obstruction o;
      o.word = concat(u, v.suffix_from(len));
      o.degree = grading.degree(o.word);
      o.seq = seq++;
      o.left = gi;
      o.right = gj;
      o.overlap = len;
      if (o.degree > D)
        ++deferred_above_D;
      else
        queue.insert(std::move(o));
    }
  };

  int frontier = 0;  // degree currently being processed
  while (!queue.empty()) {
    detail::Obstruction o = *queue.begin();
    queue.erase(queue.begin());
    frontier = o.degree;

    Poly<K> candidate;
    if (o.input >= 0) {
      candidate = pres.relations[o.input];
    } else {
      // u = a c, v = c b with |c| = overlap: S = g_left * b - a * g_right
      const Poly<K>& gl = basis[o.left];
      const Poly<K>& gr = basis[o.right];
      Word a = gl.leading_word().prefix(gl.leading_word().length() - o.overlap);
      Word b = gr.leading_word().suffix_from(o.overlap);
      candidate = poly_sub(F, poly_sandwich(F, Word{}, gl, b),
                           poly_sandwich(F, a, gr, Word{}));
    }

    Poly<K> h = detail::reduce_full(F, candidate, basis);
    if (h.is_zero()) continue;

    if (static_cast<int>(basis.size()) >= opts.max_elements) {
      gb.budget_exceeded = true;
      break;
    }

    h = poly_make_monic(F, h);
    int idx = static_cast<int>(basis.size());
    basis.push_back(std::move(h));
    for (int g = 0; g <= idx; ++g) {
      enqueue_overlaps(g, idx);
      if (g != idx) enqueue_overlaps(idx, g);
    }
  }

  if (gb.budget_exceeded) {
    // everything strictly below the frontier degree was fully resolved
    gb.certified_degree = frontier - 1;
    gb.complete = false;
  } else {
    gb.certified_degree = D;
    gb.complete = (deferred_above_D == 0);
  }

  // tail reduction + canonical element order
  for (std::size_t i = 0; i < basis.size(); ++i)
    basis[i] = detail::reduce_full(F, basis[i], basis, static_cast<int>(i));
  std::sort(basis.begin(), basis.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return grading.less(a.leading_word(), b.leading_word());
  });

  gb.build_bases();
  return gb;
}

/// Normal form modulo the (truncated) basis. Requires deg p within the
/// certification window; idempotent and field-linear in fixed degree.
template <class K>
Poly<K> normal_form(const Poly<K>& p, const GroebnerBasis<K>& gb) {
  if (!p.is_zero() && poly_degree(gb.grading(), p) > gb.certified_degree)
    throw WindowError("polynomial degree exceeds certification window");
  return detail::reduce_full(gb.field(), p, gb.elements);
}

/// dim_k A_i for 0 <= i <= D.
template <class K>
GradedDims hilbert_function(const GroebnerBasis<K>& gb, int D) {
  GradedDims dims;
  dims.lo = 0;
  dims.hi = D;
  for (int d = 0; d <= D; ++d) dims.set(d, gb.dim(d));
  return dims;
}

}  // namespace ncreg

#endif
