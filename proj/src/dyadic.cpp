#include "thermocalc/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <vector>

namespace thermocalc {

namespace {

__extension__ typedef __int128 Wide;

[[noreturn]] void overflow(const char* op) {
  throw DyadicOverflow(std::string("dyadic overflow in ") + op);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

std::int64_t checked_shl(std::int64_t v, std::int32_t shift) {
  if (v == 0) return 0;
  if (shift >= 63) overflow("alignment");
  return checked_mul(v, std::int64_t{1} << shift);
}

// Decimal digits of 2^e, most significant first.
std::string power_of_two_decimal(std::int32_t e) {
  std::vector<int> digits{1};  // little endian
  for (std::int32_t i = 0; i < e; ++i) {
    int carry = 0;
    for (int& d : digits) {
      int v = d * 2 + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry) digits.push_back(carry);
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
  return out;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw DyadicParseError(DyadicParseError::Kind::syntax, "expected digits in '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw DyadicParseError(DyadicParseError::Kind::syntax, "number too large in '" + std::string(whole) + "'");
  }
  if (ec != std::errc() || ptr != text.data() + text.size() || text.front() == '-' || text.front() == '+') {
    throw DyadicParseError(DyadicParseError::Kind::syntax, "malformed number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Dyadic Dyadic::from_parts(std::int64_t num, std::int32_t exp) {
  if (exp < 0) throw std::invalid_argument("dyadic exponent must be non-negative");
  Dyadic d;
  if (num == 0) return d;
  int tz = std::countr_zero(static_cast<std::uint64_t>(num));
  int drop = std::min<std::int32_t>(tz, exp);
  d.num_ = num >> drop;
  d.exp_ = exp - drop;
  return d;
}

std::int64_t Dyadic::floor() const noexcept {
  if (exp_ == 0) return num_;
  if (exp_ >= 63) return num_ < 0 ? -1 : 0;
  return num_ >> exp_;  // arithmetic shift rounds toward -inf
}

std::int64_t Dyadic::ceil() const noexcept {
  if (exp_ == 0) return num_;
  return floor() + 1;  // non-integers only reach here
}

Dyadic Dyadic::half() const {
  if (num_ == 0) return *this;
  if (exp_ == std::numeric_limits<std::int32_t>::max()) overflow("halving");
  return from_parts(num_, exp_ + 1);
}

Dyadic Dyadic::twice() const { return *this * 2; }

Dyadic Dyadic::abs() const { return num_ < 0 ? -*this : *this; }

Dyadic Dyadic::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) overflow("negation");
  Dyadic d = *this;
  d.num_ = -num_;
  return d;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::int32_t e = std::max(a.exp_, b.exp_);
  std::int64_t an = checked_shl(a.num_, e - a.exp_);
  std::int64_t bn = checked_shl(b.num_, e - b.exp_);
  return Dyadic::from_parts(checked_add(an, bn), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, std::int64_t k) {
  return Dyadic::from_parts(checked_mul(a.num_, k), a.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  if (a.exp_ == b.exp_) return a.num_ <=> b.num_;
  const bool a_finer = a.exp_ > b.exp_;
  const std::int32_t shift = a_finer ? a.exp_ - b.exp_ : b.exp_ - a.exp_;
  if (shift > 63) {
    // The finer value has magnitude below 2^(63 - exp) and the coarser one
    // at least 2^-exp', so the coarser one has the larger magnitude.
    const int s = a.sign();
    return a_finer ? (s > 0 ? std::strong_ordering::less : std::strong_ordering::greater)
                   : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::less);
  }
  Wide an = a.num_;
  Wide bn = b.num_;
  if (a_finer) {
    bn *= static_cast<Wide>(1) << shift;
  } else {
    an *= static_cast<Wide>(1) << shift;
  }
  return an <=> bn;
}

Ordering compare(const Dyadic& a, const Dyadic& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + power_of_two_decimal(exp_);
}

std::string Dyadic::to_decimal() const {
  if (exp_ == 0) return std::to_string(num_);
  // k / 2^m == k * 5^m / 10^m; expand the digits of |k| * 5^m by hand.
  std::vector<int> digits;  // little endian
  std::uint64_t mag = num_ < 0 ? static_cast<std::uint64_t>(-(num_ + 1)) + 1 : static_cast<std::uint64_t>(num_);
  if (mag == 0) digits.push_back(0);
  while (mag) {
    digits.push_back(static_cast<int>(mag % 10));
    mag /= 10;
  }
  for (std::int32_t i = 0; i < exp_; ++i) {
    int carry = 0;
    for (int& d : digits) {
      int v = d * 5 + carry;
      d = v % 10;
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(carry % 10);
      carry /= 10;
    }
  }
  while (digits.size() <= static_cast<std::size_t>(exp_)) digits.push_back(0);
  std::string out = num_ < 0 ? "-" : "";
  for (std::size_t i = digits.size(); i-- > static_cast<std::size_t>(exp_);) out.push_back(static_cast<char>('0' + digits[i]));
  out.push_back('.');
  std::string frac;
  for (std::size_t i = static_cast<std::size_t>(exp_); i-- > 0;) frac.push_back(static_cast<char>('0' + digits[i]));
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return out + frac;
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::int64_t num = parse_int(body.substr(0, slash), text);
  std::int32_t exp = 0;
  if (slash != std::string_view::npos) {
    std::int64_t den = parse_int(body.substr(slash + 1), text);
    if (den <= 0) {
      throw DyadicParseError(DyadicParseError::Kind::syntax, "zero denominator in '" + std::string(text) + "'");
    }
    if (!std::has_single_bit(static_cast<std::uint64_t>(den))) {
      throw DyadicParseError(DyadicParseError::Kind::non_dyadic_denominator,
                             "denominator " + std::to_string(den) + " is not a power of two in '" +
                                 std::string(text) + "'");
    }
    exp = std::countr_zero(static_cast<std::uint64_t>(den));
  }
  Dyadic d = from_parts(num, exp);
  return negative ? -d : d;
}

const Dyadic& ExtendedDyadic::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite extended dyadic");
  return value_;
}

std::strong_ordering operator<=>(const ExtendedDyadic& a, const ExtendedDyadic& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.is_finite()) return a.value_ <=> b.value_;
  return std::strong_ordering::equal;
}

std::string ExtendedDyadic::to_string() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "+inf";
    case Kind::finite: break;
  }
  return value_.to_string();
}

ExtendedDyadic ExtendedDyadic::parse(std::string_view text) {
  if (text == "-inf") return neg_infinity();
  if (text == "+inf") return pos_infinity();
  return Dyadic::parse(text);
}

Dyadic simplest_strictly_between(const ExtendedDyadic& lo, const ExtendedDyadic& hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("simplest_strictly_between: empty interval (" + lo.to_string() + ", " +
                                hi.to_string() + ")");
  }
  // Integer candidates: smallest integer above lo, largest below hi.
  const bool lo_bounded = lo.is_finite();
  const bool hi_bounded = hi.is_finite();
  const std::int64_t first = lo_bounded ? lo.value().floor() + 1 : 0;
  const std::int64_t last = hi_bounded ? hi.value().ceil() - 1 : 0;
  if (!lo_bounded && !hi_bounded) return 0;
  if (!lo_bounded) return std::min<std::int64_t>(0, last);
  if (!hi_bounded) return std::max<std::int64_t>(0, first);
  if (first <= last) {
    if (first <= 0 && 0 <= last) return 0;
    return first > 0 ? first : last;
  }
  // No integer inside: the first denominator admitting a point wins, and the
  // candidate is unique because the interval is shorter than 1.
  const Dyadic& l = lo.value();
  const Dyadic& h = hi.value();
  for (std::int32_t m = 1;; ++m) {
    const Dyadic scaled = l.exponent() >= m ? Dyadic::from_parts(l.numerator(), l.exponent() - m)
                                            : Dyadic(checked_shl(l.numerator(), m - l.exponent()));
    const Dyadic candidate = Dyadic::from_parts(scaled.floor() + 1, m);
    if (candidate < h) return candidate;
  }
}

}  // namespace thermocalc
