#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace knit {

/// Exact non-negative-denominator rational with 64-bit parts, always kept
/// in lowest terms. Used for every threshold (epsilon, rho, mu) so that
/// boundary comparisons are bit-stable.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den = 1);

  /// Accepts "p/q", an integer, or a finite decimal such as "0.25".
  static Ratio parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, const Ratio& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// Arbitrary-precision rational for bounds such as eps^4 / 384 whose
/// denominators outgrow 64 bits.
using BigRatio = boost::multiprecision::cpp_rational;

inline BigRatio to_big(const Ratio& r) { return BigRatio(r.num(), r.den()); }

/// "p/q" (or "p" when q = 1), matching Ratio::to_string.
std::string to_string(const BigRatio& r);

}  // namespace knit
