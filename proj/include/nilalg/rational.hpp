#ifndef NILALG_RATIONAL_HPP
#define NILALG_RATIONAL_HPP

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nilalg {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Values whose numerator and denominator fit in 62 bits are stored inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again as soon as it fits. Both representations are
/// canonical, so equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      assign_wide(static_cast<__int128>(value), 1);
    } else {
      assign_wide(static_cast<__int128>(static_cast<unsigned __int128>(value)), 1);
    }
  }

  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "n" or "n/d" with optional leading sign. Throws Error(Schema) on
  /// malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Always "n/d", the interchange form used in JSON documents.
  std::string fraction_str() const;

  std::string numerator_str() const;
  std::string denominator_str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // Inline range: |num| < 2^62 and den < 2^62 so sums of products stay
  // inside a signed 128-bit integer.
  static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

  bool is_big() const noexcept { return static_cast<bool>(big_); }
  mpq_class to_mpq() const;
  void assign_wide(__int128 num, __int128 den);  // den > 0, not necessarily reduced
  void assign_mpq(mpq_class value);              // value canonical

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& r);

}  // namespace nilalg

namespace Eigen {

template <>
struct NumTraits<nilalg::Rational> : GenericNumTraits<nilalg::Rational> {
  using Real = nilalg::Rational;
  using NonInteger = nilalg::Rational;
  using Literal = nilalg::Rational;
  using Nested = nilalg::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // NILALG_RATIONAL_HPP
