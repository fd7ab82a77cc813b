#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace asd {

/// Exact non-negative rational, normalized (den >= 1, gcd(num, den) == 1).
/// Approximation parameters are carried this way so that grid values like
/// floor((1+eps)^k) are exact integers, never floating-point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);

  /// Accepts "0.25", ".5", "3", or "1/4". Raises ConfigError otherwise.
  static Rational parse(std::string_view text);

  /// this / divisor, exactly. Raises ConfigError on overflow.
  Rational divided_by(std::uint64_t divisor) const;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool positive() const { return num > 0; }
  bool less_than_one() const { return num < den; }

  friend bool operator==(Rational, Rational) = default;

  std::string str() const;
};

/// floor((1 + eps)^k), computed by exact rational multiplication; values
/// beyond `clamp` are reported as `clamp` (targets past it are infeasible).
std::uint64_t pow_floor(Rational eps, std::uint64_t k, std::uint64_t clamp);

/// floor((1+eps)^k) for every k in 0..k_max, with the same clamping.
std::vector<std::uint64_t> pow_floor_table(Rational eps, std::uint64_t k_max, std::uint64_t clamp);

/// Largest k with (1 + eps)^k <= bound; requires eps > 0, bound >= 1.
std::uint64_t floor_log1p(Rational eps, std::uint64_t bound);

/// ceil(n^(p/q)) for exponent = p/q in (0, 1], exactly.
std::uint64_t ceil_pow(std::uint64_t n, Rational exponent);

/// Deduplicated ascending {floor((1+eps)^j) : j >= 0} intersected with
/// [1, cap].
std::vector<std::uint64_t> geometric_ladder(Rational eps, std::uint64_t cap);

}  // namespace asd
