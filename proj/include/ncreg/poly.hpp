#ifndef NCREG_POLY_HPP
#define NCREG_POLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "ncreg/word.hpp"

namespace ncreg {

/// A homogeneous element of the free algebra: terms sorted by word, leading
/// term first, no zero coefficients. Homogeneity (all words of one weighted
/// degree) is enforced at parse time and preserved by the operations here.
template <class K>
struct Poly {
  using Elem = typename K::Elem;
  using Term = std::pair<Word, Elem>;

  std::vector<Term> terms;  // strictly descending by word

  bool is_zero() const { return terms.empty(); }
  const Word& leading_word() const { return terms.front().first; }
  const Elem& leading_coeff() const { return terms.front().second; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (a.terms[i].first != b.terms[i].first ||
          !(a.terms[i].second == b.terms[i].second))
        return false;
    return true;
  }
};

template <class K>
Poly<K> poly_zero() {
  return Poly<K>{};
}

template <class K>
Poly<K> poly_monomial(const K& field, Word w, typename K::Elem c) {
  Poly<K> p;
  if (!field.is_zero(c)) p.terms.emplace_back(std::move(w), std::move(c));
  return p;
}

/// Build from arbitrary (word, coeff) pairs: sorts, merges, drops zeros.
template <class K>
Poly<K> poly_from_terms(const K& field,
                        std::vector<typename Poly<K>::Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  Poly<K> p;
  for (auto& t : raw) {
    if (!p.terms.empty() && p.terms.back().first == t.first) {
      p.terms.back().second = field.add(p.terms.back().second, t.second);
      if (field.is_zero(p.terms.back().second)) p.terms.pop_back();
    } else if (!field.is_zero(t.second)) {
      p.terms.push_back(std::move(t));
    }
  }
  return p;
}

template <class K>
Poly<K> poly_add(const K& field, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (b.terms[j].first < a.terms[i].first) {
      r.terms.push_back(a.terms[i++]);
    } else if (a.terms[i].first < b.terms[j].first) {
      r.terms.push_back(b.terms[j++]);
    } else {
      auto c = field.add(a.terms[i].second, b.terms[j].second);
      if (!field.is_zero(c)) r.terms.emplace_back(a.terms[i].first, c);
      ++i, ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

template <class K>
Poly<K> poly_scale(const K& field, const typename K::Elem& c,
                   const Poly<K>& p) {
  Poly<K> r;
  if (field.is_zero(c)) return r;
  r.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) r.terms.emplace_back(t.first, field.mul(c, t.second));
  return r;
}

template <class K>
Poly<K> poly_neg(const K& field, const Poly<K>& p) {
  Poly<K> r;
  r.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) r.terms.emplace_back(t.first, field.neg(t.second));
  return r;
}

template <class K>
Poly<K> poly_sub(const K& field, const Poly<K>& a, const Poly<K>& b) {
  return poly_add(field, a, poly_neg(field, b));
}

/// Free-algebra product (noncommutative): bilinear concatenation.
template <class K>
Poly<K> poly_multiply(const K& field, const Poly<K>& a, const Poly<K>& b) {
  std::vector<typename Poly<K>::Term> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      raw.emplace_back(concat(ta.first, tb.first),
                       field.mul(ta.second, tb.second));
  return poly_from_terms<K>(field, std::move(raw));
}

/// a * p * b for words a, b.
template <class K>
Poly<K> poly_sandwich(const K& field, const Word& a, const Poly<K>& p,
                      const Word& b) {
  Poly<K> r;
  r.terms.reserve(p.terms.size());
  for (const auto& t : p.terms)
    r.terms.emplace_back(concat(a, concat(t.first, b)), t.second);
  // words keep their relative lex order under two-sided concatenation
  return r;
}

template <class K>
Poly<K> poly_make_monic(const K& field, const Poly<K>& p) {
  if (p.is_zero()) return p;
  return poly_scale(field, field.inv(p.leading_coeff()), p);
}

/// Degree of a (nonzero homogeneous) polynomial under the grading.
template <class K>
int poly_degree(const Grading& g, const Poly<K>& p) {
  return p.is_zero() ? -1 : g.degree(p.leading_word());
}

}  // namespace ncreg

#endif
