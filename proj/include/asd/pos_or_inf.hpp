#pragma once

#include <cassert>
#include <compare>
#include <cstdint>

namespace asd {

/// A position (or count) that may be infinite. Infinity is a distinguished
/// state ordered above every finite value, never a numeric sentinel.
class PosOrInf {
 public:
  constexpr PosOrInf() = default;  // infinity

  static constexpr PosOrInf infinity() { return PosOrInf(); }

  static constexpr PosOrInf finite(std::uint64_t value) {
    PosOrInf p;
    p.finite_ = true;
    p.value_ = value;
    return p;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  constexpr std::uint64_t value() const {
    assert(finite_);
    return value_;
  }

  friend constexpr bool operator==(PosOrInf, PosOrInf) = default;

  friend constexpr bool operator<(PosOrInf a, PosOrInf b) {
    if (a.finite_ && b.finite_) return a.value_ < b.value_;
    return a.finite_ && !b.finite_;
  }
  friend constexpr bool operator<=(PosOrInf a, PosOrInf b) { return a == b || a < b; }
  friend constexpr bool operator>(PosOrInf a, PosOrInf b) { return b < a; }
  friend constexpr bool operator>=(PosOrInf a, PosOrInf b) { return b <= a; }

  friend constexpr PosOrInf min(PosOrInf a, PosOrInf b) { return a < b ? a : b; }

 private:
  bool finite_ = false;
  std::uint64_t value_ = 0;
};

}  // namespace asd
