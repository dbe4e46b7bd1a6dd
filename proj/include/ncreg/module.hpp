#ifndef NCREG_MODULE_HPP
#define NCREG_MODULE_HPP

#include <memory>
#include <random>
#include <vector>

#include "ncreg/groebner.hpp"
#include "ncreg/linalg.hpp"

namespace ncreg {

/// A graded free module ⊕_t A(-s_t); basis element t sits in degree s_t.
struct GradedFreeModule {
  std::vector<int> shifts;

  int rank() const { return static_cast<int>(shifts.size()); }
  int min_shift() const {
    int m = shifts.empty() ? 0 : shifts[0];
    for (int s : shifts) m = s < m ? s : m;
    return m;
  }
  int max_shift() const {
    int m = shifts.empty() ? 0 : shifts[0];
    for (int s : shifts) m = s > m ? s : m;
    return m;
  }
  friend bool operator==(const GradedFreeModule&,
                         const GradedFreeModule&) = default;
};

/// A finitely presented graded left module: cover ⊕ A(-s_t) modulo the
/// submodule generated by homogeneous relation columns. Entry (t) of column c
/// has degree column_degrees[c] - s_t (or is zero). After minimalize() all
/// entries lie in the augmentation ideal.
template <class K>
struct ModulePresentation {
  std::shared_ptr<const GroebnerBasis<K>> algebra;
  GradedFreeModule cover;
  std::vector<std::vector<Poly<K>>> columns;  // columns[c][t]
  std::vector<int> column_degrees;

  bool is_zero() const { return cover.rank() == 0; }
  int max_column_degree() const {
    int m = 0;
    for (std::size_t c = 0; c < columns.size(); ++c)
      m = column_degrees[c] > m ? column_degrees[c] : m;
    return m;
  }
};

/// k = A/m over the given algebra: cover A, one relation column per generator.
template <class K>
ModulePresentation<K> trivial_module(
    std::shared_ptr<const GroebnerBasis<K>> algebra) {
  ModulePresentation<K> m;
  m.algebra = algebra;
  m.cover.shifts = {0};
  const auto& pres = algebra->pres;
  for (int g = 0; g < pres.grading.generator_count(); ++g) {
    m.columns.push_back(
        {poly_monomial(pres.field, Word::single(g), pres.field.one())});
    m.column_degrees.push_back(pres.grading.generator_degree(g));
  }
  return m;
}

template <class K>
ModulePresentation<K> free_module(
    std::shared_ptr<const GroebnerBasis<K>> algebra, std::vector<int> shifts) {
  ModulePresentation<K> m;
  m.algebra = algebra;
  m.cover.shifts = std::move(shifts);
  return m;
}

/// Gaussian elimination on the presentation itself: a relation column with a
/// scalar entry witnesses a redundant cover generator; peel those off until
/// every entry has positive degree. Entries end up in normal form and zero
/// columns are dropped.
template <class K>
ModulePresentation<K> minimalize(const ModulePresentation<K>& input) {
  const GroebnerBasis<K>& gb = *input.algebra;
  const K& F = gb.field();
  ModulePresentation<K> m = input;

  for (auto& col : m.columns)
    for (auto& e : col) e = normal_form(e, gb);

  for (;;) {
    int cpick = -1, tpick = -1;
    for (std::size_t c = 0; c < m.columns.size() && cpick < 0; ++c)
      for (int t = 0; t < m.cover.rank(); ++t) {
        const Poly<K>& e = m.columns[c][t];
        if (!e.is_zero() && e.leading_word().empty()) {
          cpick = static_cast<int>(c);
          tpick = t;
          break;
        }
      }
    if (cpick < 0) break;

    const auto s_inv = F.inv(m.columns[cpick][tpick].leading_coeff());
    std::vector<Poly<K>> pivot_col = m.columns[cpick];
    for (std::size_t b = 0; b < m.columns.size(); ++b) {
      if (static_cast<int>(b) == cpick) continue;
      const Poly<K>& p = m.columns[b][tpick];
      if (p.is_zero()) continue;
      Poly<K> q = poly_scale(F, s_inv, p);
      for (int u = 0; u < m.cover.rank(); ++u)
        m.columns[b][u] = normal_form(
            poly_sub(F, m.columns[b][u], poly_multiply(F, q, pivot_col[u])),
            gb);
    }
    m.columns.erase(m.columns.begin() + cpick);
    m.column_degrees.erase(m.column_degrees.begin() + cpick);
    m.cover.shifts.erase(m.cover.shifts.begin() + tpick);
    for (auto& col : m.columns) col.erase(col.begin() + tpick);
  }

  // drop columns that became zero
  for (std::size_t c = m.columns.size(); c-- > 0;) {
    bool zero = true;
    for (const auto& e : m.columns[c])
      if (!e.is_zero()) zero = false;
    if (zero) {
      m.columns.erase(m.columns.begin() + c);
      m.column_degrees.erase(m.column_degrees.begin() + c);
    }
  }
  return m;
}

struct RandomModuleParams {
  int num_gens = 1;
  std::vector<int> gen_degrees = {0};
  int num_rels = 1;
  int rel_degree = 2;
};

/// Deterministic pseudo-random homogeneous module presentation. Same seed,
/// same module; relations come out in normal form via minimalize.
template <class K>
ModulePresentation<K> random_module(
    std::shared_ptr<const GroebnerBasis<K>> algebra, std::uint64_t seed,
    const RandomModuleParams& params) {
  const GroebnerBasis<K>& gb = *algebra;
  const K& F = gb.field();
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  auto pick = [&](std::uint64_t n) -> std::uint64_t {
    return n == 0 ? 0 : rng() % n;
  };
  auto random_coeff = [&]() {
    if constexpr (std::is_same_v<K, Rationals>) {
      return F.from_long(static_cast<std::int64_t>(pick(7)) - 3);
    } else {
      return F.from_long(static_cast<std::int64_t>(
          pick(static_cast<std::uint64_t>(F.characteristic()))));
    }
  };

  ModulePresentation<K> m;
  m.algebra = algebra;
  for (int g = 0; g < params.num_gens; ++g)
    m.cover.shifts.push_back(
        params.gen_degrees[pick(params.gen_degrees.size())]);

  for (int r = 0; r < params.num_rels; ++r) {
    std::vector<Poly<K>> col(m.cover.rank());
    bool nonzero = false;
    for (int t = 0; t < m.cover.rank(); ++t) {
      int e = params.rel_degree - m.cover.shifts[t];
      if (e < 0 || e > gb.certified_degree) continue;
      std::vector<typename Poly<K>::Term> terms;
      for (const Word& w : gb.monomial_basis(e)) {
        // roughly half the coefficients vanish to keep columns sparse
        if (pick(2) == 0) continue;
        auto c = random_coeff();
        if (!F.is_zero(c)) terms.emplace_back(w, c);
      }
      col[t] = poly_from_terms<K>(F, std::move(terms));
      if (!col[t].is_zero()) nonzero = true;
    }
    if (!nonzero) {
      // fall back to the first available basis word so the column counts
      for (int t = 0; t < m.cover.rank() && !nonzero; ++t) {
        int e = params.rel_degree - m.cover.shifts[t];
        if (e < 0 || e > gb.certified_degree) continue;
        const auto& basis = gb.monomial_basis(e);
        if (basis.empty()) continue;
        col[t] = poly_monomial(F, basis.front(), F.one());
        nonzero = true;
      }
    }
    if (nonzero) {
      m.columns.push_back(std::move(col));
      m.column_degrees.push_back(params.rel_degree);
    }
  }
  return minimalize(m);
}

// ---------------------------------------------------------------------------
// Module file format:
//   cover <shift> <shift> ...;
//   rel <index>: <poly>, <poly>, ...;   (one entry per cover generator)

template <class K>
ModulePresentation<K> parse_module(
    const std::string& text, std::shared_ptr<const GroebnerBasis<K>> algebra) {
  const Presentation<K>& pres = algebra->pres;
  std::map<std::string, int> gen_index;
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    gen_index[pres.generators[i].name] = static_cast<int>(i);

  detail::PresentationParser p(text);
  ModulePresentation<K> m;
  m.algebra = algebra;
  bool saw_cover = false;
  int next_rel = 0;

  auto parse_int = [&]() {
    bool neg = p.accept_punct('-');
    std::int64_t v = p.expect_integer();
    return static_cast<int>(neg ? -v : v);
  };

  while (!p.at_end()) {
    if (p.accept_ident("cover")) {
      if (saw_cover)
        throw ParseError("duplicate cover statement", p.peek().line,
                         p.peek().col);
      do {
        m.cover.shifts.push_back(parse_int());
      } while (!p.accept_punct(';'));
      saw_cover = true;
    } else if (p.accept_ident("rel")) {
      if (!saw_cover)
        throw ParseError("rel before cover", p.peek().line, p.peek().col);
      auto pos = p.peek();
      int label = parse_int();
      if (label != next_rel)
        throw ParseError("relation columns must be labeled consecutively "
                         "from 0",
                         pos.line, pos.col);
      ++next_rel;
      p.expect_punct(':');
      std::vector<Poly<K>> col;
      do {
        col.push_back(bind_poly(pres.field, p.parse_poly(gen_index)));
      } while (p.accept_punct(','));
      p.expect_punct(';');
      if (static_cast<int>(col.size()) != m.cover.rank())
        throw ParseError("relation column has " +
                             std::to_string(col.size()) + " entries, cover "
                             "has rank " + std::to_string(m.cover.rank()),
                         pos.line, pos.col);
      // homogeneity: all nonzero entries must agree on deg(entry) + shift
      int degree = -1;
      for (int t = 0; t < m.cover.rank(); ++t) {
        if (col[t].is_zero()) continue;
        for (const auto& term : col[t].terms) {
          int d = pres.grading.degree(term.first) + m.cover.shifts[t];
          if (degree < 0) degree = d;
          if (d != degree)
            throw ParseError("inhomogeneous relation column", pos.line,
                             pos.col);
        }
      }
      if (degree < 0) continue;  // zero column
      m.columns.push_back(std::move(col));
      m.column_degrees.push_back(degree);
    } else {
      throw ParseError("expected cover or rel", p.peek().line, p.peek().col);
    }
  }
  if (!saw_cover) throw ParseError("missing cover statement", 1, 1);
  return minimalize(m);
}

template <class K>
std::string serialize_module(const ModulePresentation<K>& m) {
  const Presentation<K>& pres = m.algebra->pres;
  std::string out = "cover";
  for (int s : m.cover.shifts) out += " " + std::to_string(s);
  out += ";\n";
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    out += "rel " + std::to_string(c) + ":";
    for (int t = 0; t < m.cover.rank(); ++t) {
      out += t == 0 ? " " : ", ";
      out += poly_to_string(pres, m.columns[c][t]);
    }
    out += ";\n";
  }
  return out;
}

}  // namespace ncreg

#endif
