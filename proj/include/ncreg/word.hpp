#ifndef NCREG_WORD_HPP
#define NCREG_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ncreg {

/// A word in the free monoid on the generators, stored as a sequence of
/// generator indices. The empty word is the unit. Indices are char16_t so
/// short words stay in the small-string buffer and factor search is
/// std::u16string::find.
class Word {
 public:
  Word() = default;
  explicit Word(std::u16string letters) : letters_(std::move(letters)) {}
  static Word single(int gen) {
    return Word(std::u16string(1, static_cast<char16_t>(gen)));
  }

  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  int letter(std::size_t i) const { return static_cast<int>(letters_[i]); }
  const std::u16string& letters() const { return letters_; }

  Word append(int gen) const {
    std::u16string s = letters_;
    s.push_back(static_cast<char16_t>(gen));
    return Word(std::move(s));
  }
  friend Word concat(const Word& a, const Word& b) {
    return Word(a.letters_ + b.letters_);
  }
  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
  Word suffix_from(std::size_t pos) const { return Word(letters_.substr(pos)); }
  Word reversed() const {
    return Word(std::u16string(letters_.rbegin(), letters_.rend()));
  }

  /// Position of the leftmost occurrence of f as a factor, or npos.
  std::size_t find_factor(const Word& f) const {
    return letters_.find(f.letters_);
  }
  bool contains_factor(const Word& f) const {
    return find_factor(f) != std::u16string::npos;
  }
  bool ends_with(const Word& f) const {
    return letters_.size() >= f.letters_.size() &&
           letters_.compare(letters_.size() - f.letters_.size(),
                            f.letters_.size(), f.letters_) == 0;
  }

  // Plain lexicographic order on letter sequences. For words of equal
  // weighted degree this coincides with deglex, so homogeneous polynomials
  // can be kept sorted without grading context.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::u16string letters_;
};

enum class Cmp { less, equal, greater };

/// Generator weights plus the fixed deglex order (precedence = declaration
/// order). Degree-first comparison is what makes degree truncation sound.
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<int> gen_degrees)
      : degrees_(std::move(gen_degrees)) {}

  int generator_count() const { return static_cast<int>(degrees_.size()); }
  int generator_degree(int i) const { return degrees_[i]; }
  const std::vector<int>& generator_degrees() const { return degrees_; }
  int max_generator_degree() const {
    int m = 0;
    for (int d : degrees_) m = d > m ? d : m;
    return m;
  }

  int degree(const Word& w) const {
    int d = 0;
    for (std::size_t i = 0; i < w.length(); ++i) d += degrees_[w.letter(i)];
    return d;
  }

  Cmp compare(const Word& a, const Word& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db ? Cmp::less : Cmp::greater;
    auto c = a <=> b;
    if (c == std::strong_ordering::less) return Cmp::less;
    if (c == std::strong_ordering::greater) return Cmp::greater;
    return Cmp::equal;
  }
  bool less(const Word& a, const Word& b) const {
    return compare(a, b) == Cmp::less;
  }

 private:
  std::vector<int> degrees_;
};

}  // namespace ncreg

#endif
