#include "knit/ratio.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "knit/errors.hpp"

namespace knit {
namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw InputError("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Ratio reduce128(__int128 num, __int128 den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Ratio(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw InputError("not a rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Ratio Ratio::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Ratio(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18 || frac.front() == '-' || frac.front() == '+') {
      throw InputError("not a rational: '" + std::string(text) + "'");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t ip = whole.empty() || whole == "-" ? 0 : parse_int(whole, text);
    const std::int64_t fp = parse_int(frac, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const __int128 mag = static_cast<__int128>(ip < 0 ? -ip : ip) * scale + fp;
    return reduce128(negative ? -mag : mag, scale);
  }
  return Ratio(parse_int(text, text));
}

std::string Ratio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return reduce128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
  return reduce128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }

std::string to_string(const BigRatio& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace knit
