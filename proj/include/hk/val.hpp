#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hk {

/// Value of the discrete valuation: an integer or +infinity.
class Val {
 public:
  constexpr Val() = default;
  constexpr Val(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Val inf() {
    Val r;
    r.inf_ = true;
    return r;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  /// Finite value; meaningless when is_inf().
  constexpr std::int64_t value() const { return v_; }

  friend constexpr Val operator+(Val a, Val b) {
    if (a.inf_ || b.inf_) return inf();
    return Val(a.v_ + b.v_);
  }
  /// Only defined when `b` is finite.
  friend constexpr Val operator-(Val a, Val b) {
    if (a.inf_) return inf();
    return Val(a.v_ - b.v_);
  }

  friend constexpr bool operator==(Val a, Val b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(Val a, Val b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.v_ <=> b.v_;
  }

  std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, Val v) { return os << v.to_string(); }

 private:
  std::int64_t v_ = 0;
  bool inf_ = false;
};

inline Val min(Val a, Val b) { return a < b ? a : b; }

/// Valuation of an algebraic root read off a Newton polygon: a rational
/// number or +infinity (for the root 0).
class RootVal {
 public:
  RootVal() = default;
  explicit RootVal(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  RootVal(Val v) : inf_(v.is_inf()), v_(v.is_inf() ? 0 : v.value()) {}  // NOLINT

  static RootVal inf() {
    RootVal r;
    r.inf_ = true;
    return r;
  }

  bool is_inf() const { return inf_; }
  const mpq_class& value() const { return v_; }
  bool is_integer() const { return !inf_ && v_.get_den() == 1; }

  friend RootVal operator+(const RootVal& a, const RootVal& b) {
    if (a.inf_ || b.inf_) return inf();
    return RootVal(mpq_class(a.v_ + b.v_));
  }

  friend bool operator==(const RootVal& a, const RootVal& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const RootVal& a, const RootVal& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return inf_ ? "inf" : v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const RootVal& v) { return os << v.to_string(); }

 private:
  bool inf_ = false;
  mpq_class v_{0};
};

}  // namespace hk
