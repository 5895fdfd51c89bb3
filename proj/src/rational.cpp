#include "nilalg/rational.hpp"

#include "nilalg/error.hpp"

#include <numeric>
#include <ostream>
#include <utility>

namespace nilalg {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class mpz_from(i128 value) {
  const bool negative = value < 0;
  u128 mag = abs128(value);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class result = (hi << 64) + lo;
  return negative ? mpz_class(-result) : result;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  assign_wide(n, d);
}

void Rational::assign_wide(i128 num, i128 den) {
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g != 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (abs128(num) < static_cast<u128>(kSmallLimit) && den < kSmallLimit) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from(num), mpz_from(den));
  big_ = std::make_shared<const mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Rational::assign_mpq(mpq_class value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  big_ = std::make_shared<const mpq_class>(std::move(value));
  num_ = 0;
  den_ = 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::Schema, "malformed rational '" + std::string(text) + "'");
  };
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num_text) || !valid_integer(den_text) ||
      (slash != std::string_view::npos && (den_text.front() == '-' || den_text.front() == '+'))) {
    throw fail();
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class num(strip_plus(num_text), 10);
  mpz_class den(strip_plus(den_text), 10);
  if (den == 0) {
    throw Error(ErrorCode::Schema, "zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  Rational r;
  r.assign_mpq(std::move(q));
  return r;
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator_str() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

std::string Rational::fraction_str() const { return numerator_str() + "/" + denominator_str(); }

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_mpq(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (big_ || rhs.big_) {
    assign_mpq(to_mpq() + rhs.to_mpq());
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    assign_wide(static_cast<i128>(num_) + rhs.num_, 1);
    return *this;
  }
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(rhs.den_));
  if (g == 1) {
    // Coprime denominators: the result is already in lowest terms.
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    if (n == 0) return *this = Rational();
    if (abs128(n) < static_cast<u128>(kSmallLimit) && d < kSmallLimit) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign_wide(n, d);
    return *this;
  }
  const auto sg = static_cast<std::int64_t>(g);
  i128 t = static_cast<i128>(num_) * (rhs.den_ / sg) + static_cast<i128>(rhs.num_) * (den_ / sg);
  assign_wide(t, static_cast<i128>(den_ / sg) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Rational();
  if (big_ || rhs.big_) {
    assign_mpq(to_mpq() * rhs.to_mpq());
    return *this;
  }
  // Cross-reduce so the product is canonical without a 128-bit gcd.
  const auto g1 = static_cast<std::int64_t>(std::gcd(uabs64(num_), static_cast<std::uint64_t>(rhs.den_)));
  const auto g2 = static_cast<std::int64_t>(std::gcd(uabs64(rhs.num_), static_cast<std::uint64_t>(den_)));
  i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
  i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
  if (abs128(n) < static_cast<u128>(kSmallLimit) && d < kSmallLimit) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return *this;
  }
  assign_wide(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  }
  if (big_ || rhs.big_) {
    assign_mpq(to_mpq() / rhs.to_mpq());
    return *this;
  }
  Rational inv;
  inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
  inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
  return *this *= inv;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;  // canonical: big values never fit inline
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::ZeroCoefficient: return "ZERO_COEFFICIENT";
    case ErrorCode::NotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::ElementInSquare: return "ELEMENT_IN_SQUARE";
    case ErrorCode::NotNaturallyGraded: return "NOT_NATURALLY_GRADED";
    case ErrorCode::InvalidSplit: return "INVALID_SPLIT";
    case ErrorCode::InconsistentGradation: return "INCONSISTENT_GRADATION";
    case ErrorCode::InvalidFamily: return "INVALID_FAMILY";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::Schema: return "SCHEMA";
  }
  return "UNKNOWN";
}

}  // namespace nilalg
