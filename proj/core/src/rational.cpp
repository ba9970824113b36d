#include "hyperframe/rational.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "hyperframe/error.hpp"

namespace hyperframe {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// INT64_MIN is excluded so negation never overflows.
constexpr i128 kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits_small(i128 v) { return v >= -kSmallMax && v <= kSmallMax; }

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  constexpr u128 kWord = std::numeric_limits<std::uint64_t>::max();
  while (b != 0) {
    if (a <= kWord && b <= kWord) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    a %= b;
    std::swap(a, b);
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const bool negative = v < 0;
  u128 m = magnitude(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != mpz_class(std::numeric_limits<long>::min());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    assign(static_cast<i128>(value), 1);
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  assign(static_cast<i128>(numerator), static_cast<i128>(denominator));
}

Rational::Rational(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  assign(std::move(copy));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign(i128 numerator, i128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (denominator != 1) {
    const u128 g = gcd128(magnitude(numerator), static_cast<u128>(denominator));
    if (g > 1) {
      numerator /= static_cast<i128>(g);
      denominator /= static_cast<i128>(g);
    }
  }
  if (fits_small(numerator) && denominator <= kSmallMax) {
    num_ = static_cast<std::int64_t>(numerator);
    den_ = static_cast<std::int64_t>(denominator);
    big_.reset();
    return;
  }
  mpq_class q;
  q.get_num() = to_mpz(numerator);
  q.get_den() = to_mpz(denominator);
  assign(std::move(q));
}

void Rational::assign(mpq_class value) {
  if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_) {
    *big_ = std::move(value);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num_part = s.substr(0, slash);
  const std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw FormatError("malformed rational '" + std::string(text) + "'");
  }
  mpq_class q;
  q.get_num().set_str(std::string(num_part), 10);
  q.get_den().set_str(std::string(den_part), 10);
  if (q.get_den() == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  if (negative) q.get_num() = -q.get_num();
  q.canonicalize();
  Rational out;
  out.assign(std::move(q));
  return out;
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view int_part = s.substr(0, dot);
  const std::string_view frac_part = dot == std::string_view::npos ? std::string_view() : s.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)) || (dot != std::string_view::npos && frac_part.empty())) {
    throw FormatError("malformed decimal '" + std::string(text) + "'");
  }
  mpq_class q;
  std::string digits = std::string(int_part) + std::string(frac_part);
  q.get_num().set_str(digits.empty() ? "0" : digits, 10);
  mpz_ui_pow_ui(q.get_den().get_mpz_t(), 10, frac_part.size());
  if (negative) q.get_num() = -q.get_num();
  q.canonicalize();
  Rational out;
  out.assign(std::move(q));
  return out;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  q.get_num() = static_cast<long>(num_);
  q.get_den() = static_cast<long>(den_);
  return q;
}

std::size_t Rational::height() const {
  if (big_) {
    return mpz_sizeinbase(big_->get_num().get_mpz_t(), 2) + mpz_sizeinbase(big_->get_den().get_mpz_t(), 2);
  }
  auto bits = [](std::uint64_t v) -> std::size_t { return v == 0 ? 1 : 64 - static_cast<std::size_t>(__builtin_clzll(v)); };
  return bits(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_)) + bits(static_cast<std::uint64_t>(den_));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::fraction_str() const {
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpq_class q = to_mpq();
  mpz_class num = abs(q.get_num()) * scale * 2 + q.get_den();
  mpz_class den = q.get_den() * 2;
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sgn(q) < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

std::size_t Rational::hash() const noexcept {
  auto mix = [](std::size_t seed, std::size_t v) { return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)); };
  if (!big_) return mix(std::hash<std::int64_t>{}(num_), std::hash<std::int64_t>{}(den_));
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(mpz_size(big_->get_num().get_mpz_t())));
  h = mix(h, static_cast<std::size_t>(mpz_getlimbn(big_->get_num().get_mpz_t(), 0)));
  h = mix(h, static_cast<std::size_t>(mpz_getlimbn(big_->get_den().get_mpz_t(), 0)));
  return mix(h, static_cast<std::size_t>(sgn(*big_) + 1));
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    mpq_neg(out.big_->get_mpq_t(), out.big_->get_mpq_t());
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign(static_cast<i128>(num_) + rhs.num_, 1);
    } else {
      assign(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
             static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign(mpq_class(to_mpq() + rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign(static_cast<i128>(num_) - rhs.num_, 1);
    } else {
      assign(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
             static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign(mpq_class(to_mpq() - rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    // Cross-cancel first so the product is already in lowest terms.
    const std::int64_t g1 = std::gcd(num_, rhs.den_);
    const std::int64_t g2 = std::gcd(rhs.num_, den_);
    const i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (fits_small(n) && d <= kSmallMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign(n, d);
    }
    return *this;
  }
  assign(mpq_class(to_mpq() * rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!big_ && !rhs.big_) {
    if (num_ == 0) return *this;
    const std::int64_t g1 = std::gcd(num_, rhs.num_);
    const std::int64_t g2 = std::gcd(den_, rhs.den_);
    i128 n = static_cast<i128>(num_ / g1) * (rhs.den_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.num_ / g1);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (fits_small(n) && d <= kSmallMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign(n, d);
    }
    return *this;
  }
  return *this *= inverse(rhs);
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    const i128 l = static_cast<i128>(lhs.num_) * rhs.den_;
    const i128 r = static_cast<i128>(rhs.num_) * lhs.den_;
    return l <=> r;
  }
  const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational inverse(const Rational& value) {
  if (value.is_zero()) throw std::domain_error("inverse of zero");
  if (!value.big_) {
    Rational out;
    out.num_ = value.num_ < 0 ? -value.den_ : value.den_;
    out.den_ = value.num_ < 0 ? -value.num_ : value.num_;
    return out;
  }
  mpq_class q;
  mpq_inv(q.get_mpq_t(), value.to_mpq().get_mpq_t());
  return Rational(q);
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

}  // namespace hyperframe
