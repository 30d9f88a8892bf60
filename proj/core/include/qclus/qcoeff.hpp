#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qclus {

using Int = boost::multiprecision::cpp_int;

/// Exponent key of one coefficient term: q2 counts powers of q^(1/2)
/// (so q^(3/2) has q2 = 3), hp is the power of the auxiliary commuting
/// symbol "h" used for seeds whose exchange coefficients stay symbolic.
struct QKey {
  int q2 = 0;
  int hp = 0;
  auto operator<=>(const QKey&) const = default;
};

/// Element of Z[q^(+-1/2)][h], stored sparsely with no zero coefficients.
/// Values are immutable in spirit: every operation returns a new value.
class QCoeff {
 public:
  QCoeff() = default;
  QCoeff(long long n) { assign_int(Int(n)); }  // NOLINT(google-explicit-constructor)
  QCoeff(Int n) { assign_int(std::move(n)); }  // NOLINT(google-explicit-constructor)

  /// coeff * h^hpow * q^(q2/2)
  static QCoeff term(Int coeff, int q2, int hpow = 0);
  static QCoeff one() { return QCoeff(1); }
  static QCoeff sym_h() { return term(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// true iff a single term +-q^(k/2) with no h part
  bool is_unit() const;
  QCoeff unit_inverse() const;

  QCoeff operator+(const QCoeff& o) const;
  QCoeff operator-(const QCoeff& o) const;
  QCoeff operator*(const QCoeff& o) const;
  QCoeff operator-() const;
  QCoeff& operator+=(const QCoeff& o) { return *this = *this + o; }
  QCoeff& operator*=(const QCoeff& o) { return *this = *this * o; }
  bool operator==(const QCoeff& o) const = default;

  /// multiply by q^(q2/2)
  QCoeff q_shift(long long q2) const;

  /// substitute q^(1/2) = 1; throws if any h power is present
  Int eval_at_one() const;
  /// substitute q^(1/2) = 1, keeping h: map h-power -> integer coefficient
  std::map<int, Int> eval_at_one_h() const;
  /// value at q^(1/2)=1 is a nonzero polynomial in h with all coefficients > 0
  bool positive_at_one() const;
  bool has_symbol() const;

  const std::map<QKey, Int>& terms() const { return terms_; }

  /// canonical text form: terms by ascending exponent, e.g. "1 + 2*q^(1/2) - q^3"
  std::string str() const;
  static QCoeff parse(std::string_view s);

 private:
  void assign_int(Int n) {
    if (n != 0) terms_[QKey{0, 0}] = std::move(n);
  }
  std::map<QKey, Int> terms_;
};

}  // namespace qclus
