#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace hyperframe {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word
/// are stored inline and combined with 128-bit intermediates; anything larger
/// is promoted to a GMP rational and demoted again once it shrinks. The
/// representation is canonical, so two equal values always have the same
/// storage form.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);
  /// Parses a finite decimal such as "2.3" or "-0.125" exactly.
  static Rational parse_decimal(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] mpq_class to_mpq() const;

  /// Bit length of numerator plus denominator; used to rank pivot candidates.
  [[nodiscard]] std::size_t height() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  /// Always "p/q", including "0/1" and "3/1".
  [[nodiscard]] std::string fraction_str() const;
  /// Rounded half away from zero to `digits` places after the point.
  [[nodiscard]] std::string to_decimal(int digits) const;

  [[nodiscard]] std::size_t hash() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);
  friend Rational inverse(const Rational& value);

 private:
  void assign(__int128 numerator, __int128 denominator);
  void assign(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Multiplicative inverse; throws std::domain_error on zero.
Rational inverse(const Rational& value);
Rational abs(const Rational& value);

}  // namespace hyperframe

template <>
struct std::hash<hyperframe::Rational> {
  std::size_t operator()(const hyperframe::Rational& value) const noexcept { return value.hash(); }
};
