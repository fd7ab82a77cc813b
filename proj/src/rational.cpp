#include "asd/rational.hpp"

#include <gmpxx.h>

#include <charconv>
#include <numeric>

#include "asd/errors.hpp"

namespace asd {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw ConfigError("rational must be non-negative with positive denominator");
  const std::int64_t g = std::gcd(num, den);
  return Rational{g == 0 ? num : num / g, g == 0 ? den : den / g};
}

namespace {

std::int64_t parse_uint_part(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("malformed number: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ConfigError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_uint_part(text.substr(0, slash));
    const std::int64_t den = parse_uint_part(text.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator");
    return make(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return make(parse_uint_part(text), 1);
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 15) throw ConfigError("too many fraction digits (max 15)");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::int64_t whole_part = whole.empty() ? 0 : parse_uint_part(whole);
  const std::int64_t frac_part = frac.empty() ? 0 : parse_uint_part(frac);
  return make(whole_part * den + frac_part, den);
}

Rational Rational::divided_by(std::uint64_t divisor) const {
  if (divisor == 0) throw ConfigError("division by zero");
  if (divisor > static_cast<std::uint64_t>(INT64_MAX) / static_cast<std::uint64_t>(den))
    throw ConfigError("rational denominator overflow");
  return make(num, den * static_cast<std::int64_t>(divisor));
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

namespace {

// floor(((den+num)/den)^k) with early clamping once the value passes `clamp`.
class GeometricIter {
 public:
  GeometricIter(Rational eps, std::uint64_t clamp)
      : step_num_(static_cast<unsigned long>(eps.num) + static_cast<unsigned long>(eps.den)),
        step_den_(static_cast<unsigned long>(eps.den)),
        clamp_(clamp),
        p_(1),
        q_(1) {}

  // Current floor value (clamped).
  std::uint64_t value() {
    if (clamped_) return clamp_;
    mpz_class f = p_ / q_;
    if (!f.fits_ulong_p() || f.get_ui() >= clamp_) {
      clamped_ = true;
      return clamp_;
    }
    return f.get_ui();
  }

  void advance() {
    if (clamped_) return;
    p_ *= step_num_;
    q_ *= step_den_;
  }

 private:
  unsigned long step_num_;
  unsigned long step_den_;
  std::uint64_t clamp_;
  mpz_class p_;
  mpz_class q_;
  bool clamped_ = false;
};

void require_positive(Rational eps) {
  if (!eps.positive()) throw ConfigError("ratio must be positive");
}

}  // namespace

std::uint64_t pow_floor(Rational eps, std::uint64_t k, std::uint64_t clamp) {
  require_positive(eps);
  GeometricIter it(eps, clamp);
  for (std::uint64_t i = 0; i < k; ++i) {
    it.advance();
    if (it.value() == clamp) return clamp;
  }
  return it.value();
}

std::vector<std::uint64_t> pow_floor_table(Rational eps, std::uint64_t k_max, std::uint64_t clamp) {
  require_positive(eps);
  std::vector<std::uint64_t> out;
  out.reserve(k_max + 1);
  GeometricIter it(eps, clamp);
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    out.push_back(it.value());
    if (k < k_max) it.advance();
  }
  return out;
}

std::uint64_t floor_log1p(Rational eps, std::uint64_t bound) {
  require_positive(eps);
  if (bound == 0) throw ConfigError("log bound must be positive");
  // Largest k with (1+eps)^k <= bound, i.e. (den+num)^k <= bound * den^k.
  const mpz_class step_num = static_cast<unsigned long>(eps.num) + static_cast<unsigned long>(eps.den);
  const mpz_class step_den = static_cast<unsigned long>(eps.den);
  mpz_class p = 1, q = 1;
  std::uint64_t k = 0;
  while (true) {
    p *= step_num;
    q *= step_den;
    if (p > q * static_cast<unsigned long>(bound)) return k;
    ++k;
  }
}

std::uint64_t ceil_pow(std::uint64_t n, Rational exponent) {
  if (!exponent.positive() || exponent.num > exponent.den)
    throw ConfigError("exponent must lie in (0, 1]");
  if (n == 0) return 0;
  const auto p = static_cast<unsigned long>(exponent.num);
  const auto q = static_cast<unsigned long>(exponent.den);
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(n), p);
  // Smallest t with t^q >= n^p.
  std::uint64_t lo = 1, hi = n;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(mid), q);
    if (m >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::vector<std::uint64_t> geometric_ladder(Rational eps, std::uint64_t cap) {
  require_positive(eps);
  std::vector<std::uint64_t> out;
  GeometricIter it(eps, cap + 1);
  while (true) {
    const std::uint64_t v = it.value();
    if (v > cap) break;
    if (v >= 1 && (out.empty() || out.back() != v)) out.push_back(v);
    it.advance();
  }
  return out;
}

}  // namespace asd
