#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thermocalc {

/// Raised when an arithmetic result does not fit the 64-bit numerator.
class DyadicOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised by the text parsers. `kind` separates malformed text from a
/// well-formed fraction whose denominator is not a power of two.
class DyadicParseError : public std::invalid_argument {
 public:
  enum class Kind { syntax, non_dyadic_denominator };

  DyadicParseError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An exact element of Z[1/2]: num / 2^exp, always normalized so that
/// exp == 0 or num is odd.
class Dyadic {
 public:
  constexpr Dyadic() = default;

  template <std::integral I>
  constexpr Dyadic(I value) : num_(static_cast<std::int64_t>(value)) {}  // NOLINT(google-explicit-constructor)

  /// Builds num / 2^exp and normalizes. exp must be non-negative.
  static Dyadic from_parts(std::int64_t num, std::int32_t exp);

  std::int64_t numerator() const noexcept { return num_; }
  std::int32_t exponent() const noexcept { return exp_; }

  bool is_integer() const noexcept { return exp_ == 0; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;

  Dyadic half() const;
  Dyadic twice() const;
  Dyadic abs() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, std::int64_t k);
  friend Dyadic operator*(std::int64_t k, const Dyadic& a) { return a * k; }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "3", "-7", "3/4", "-5/8".
  std::string to_string() const;
  /// Exact decimal expansion ("0.75", "-1.125"); every dyadic terminates.
  std::string to_decimal() const;

  static Dyadic parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int32_t exp_ = 0;
};

enum class Ordering { less, equal, greater };

Ordering compare(const Dyadic& a, const Dyadic& b);

inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

/// A dyadic or one of the two infinities.
class ExtendedDyadic {
 public:
  enum class Kind : std::int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };

  ExtendedDyadic(Dyadic value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  ExtendedDyadic(I value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static ExtendedDyadic neg_infinity() { return ExtendedDyadic(Kind::neg_inf); }
  static ExtendedDyadic pos_infinity() { return ExtendedDyadic(Kind::pos_inf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }

  /// Throws std::logic_error on an infinity.
  const Dyadic& value() const;

  friend bool operator==(const ExtendedDyadic&, const ExtendedDyadic&) = default;
  friend std::strong_ordering operator<=>(const ExtendedDyadic& a, const ExtendedDyadic& b);

  std::string to_string() const;
  static ExtendedDyadic parse(std::string_view text);

 private:
  explicit ExtendedDyadic(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Dyadic value_;
};

/// The number of minimal birthday strictly inside (lo, hi). Throws
/// std::invalid_argument unless lo < hi.
Dyadic simplest_strictly_between(const ExtendedDyadic& lo, const ExtendedDyadic& hi);

}  // namespace thermocalc

template <>
struct std::hash<thermocalc::Dyadic> {
  std::size_t operator()(const thermocalc::Dyadic& d) const noexcept {
    auto h = std::hash<std::int64_t>{}(d.numerator());
    return h ^ (static_cast<std::size_t>(d.exponent()) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
