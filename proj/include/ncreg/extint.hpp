#ifndef NCREG_EXTINT_HPP
#define NCREG_EXTINT_HPP

#include <string>

#include "ncreg/errors.hpp"

namespace ncreg {

/// Extended integer: -inf, a finite value, or +inf. The infinities arise only
/// through the inf/sup conventions (inf of an empty set is +inf, of an
/// unbounded-below set -inf), never from arithmetic overflow.
class ExtInt {
 public:
  static ExtInt minus_inf() { return ExtInt(Tag::minus_inf, 0); }
  static ExtInt plus_inf() { return ExtInt(Tag::plus_inf, 0); }
  static ExtInt of(long long v) { return ExtInt(Tag::finite, v); }

  bool is_minus_inf() const { return tag_ == Tag::minus_inf; }
  bool is_plus_inf() const { return tag_ == Tag::plus_inf; }
  bool is_finite() const { return tag_ == Tag::finite; }
  long long finite_value() const {
    if (!is_finite()) throw Error("extended integer is not finite");
    return value_;
  }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::finite || a.value_ == b.value_);
  }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.tag_ == b.tag_)
      return a.tag_ == Tag::finite ? a.value_ < b.value_ : false;
    if (a.tag_ == Tag::minus_inf) return true;
    if (b.tag_ == Tag::minus_inf) return false;
    return b.tag_ == Tag::plus_inf;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) {
    return a < b || a == b;
  }
  friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }

  /// Addition with a finite integer; infinities absorb.
  ExtInt shifted(long long n) const {
    return is_finite() ? of(value_ + n) : *this;
  }
  ExtInt negated() const {
    if (is_minus_inf()) return plus_inf();
    if (is_plus_inf()) return minus_inf();
    return of(-value_);
  }
  /// a - b with both orientations of infinity defined (never inf - inf here).
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b) {
    if (a.is_finite() && b.is_finite()) return of(a.value_ - b.value_);
    if (!a.is_finite() && !b.is_finite())
      throw Error("indeterminate difference of infinities");
    return a.is_finite() ? b.negated() : a;
  }

  std::string str() const {
    if (is_minus_inf()) return "-inf";
    if (is_plus_inf()) return "+inf";
    return std::to_string(value_);
  }

 private:
  enum class Tag { minus_inf, finite, plus_inf };
  ExtInt(Tag t, long long v) : tag_(t), value_(v) {}
  Tag tag_;
  long long value_;
};

inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }
inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

/// Certification window of a computed homological value.
struct Window {
  int n_max = 0;  // homological degrees explored
  int D = 0;      // internal degrees certified

  friend bool operator==(const Window&, const Window&) = default;
};

/// How a reported value relates to the true one when it is not exact.
enum class BoundKind {
  exact,       // value is the true value
  at_least,    // true value >= reported (window gave a lower bound)
  at_most,     // true value <= reported (window gave an upper bound)
};

/// An extended-integer invariant plus certification metadata.
struct RegularityValue {
  ExtInt value = ExtInt::of(0);
  bool certified = false;
  BoundKind bound = BoundKind::exact;  // meaningful when certified is false
  Window window;

  static RegularityValue exact(ExtInt v, Window w) {
    return {v, true, BoundKind::exact, w};
  }
  static RegularityValue lower_bound(ExtInt v, Window w) {
    return {v, false, BoundKind::at_least, w};
  }
  static RegularityValue upper_bound(ExtInt v, Window w) {
    return {v, false, BoundKind::at_most, w};
  }

  /// Interval of possible true values implied by the certification.
  ExtInt lo() const {
    return certified || bound == BoundKind::at_least ? value
                                                     : ExtInt::minus_inf();
  }
  ExtInt hi() const {
    return certified || bound == BoundKind::at_most ? value
                                                    : ExtInt::plus_inf();
  }
};

/// Three-valued comparison verdicts for harness checks: a conclusion is drawn
/// only when the certification intervals force it.
enum class CheckResult { pass, fail, inconclusive };

inline CheckResult check_le(const RegularityValue& a,
                            const RegularityValue& b) {
  if (a.hi() <= b.lo()) return CheckResult::pass;
  if (b.hi() < a.lo()) return CheckResult::fail;
  return CheckResult::inconclusive;
}

inline CheckResult check_eq(const RegularityValue& a,
                            const RegularityValue& b) {
  if (a.certified && b.certified)
    return a.value == b.value ? CheckResult::pass : CheckResult::fail;
  if (b.hi() < a.lo() || a.hi() < b.lo()) return CheckResult::fail;
  return CheckResult::inconclusive;
}

}  // namespace ncreg

#endif
