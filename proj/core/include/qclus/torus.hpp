#pragma once

#include <map>
#include <memory>
#include <string>

#include "qclus/matrix.hpp"
#include "qclus/qcoeff.hpp"

namespace qclus {

/// Skew-symmetric bilinear form on Z^m; the twisting data of a quantum torus.
class SkewForm {
 public:
  explicit SkewForm(Mat lambda);
  int dim() const { return dim_; }
  const Mat& matrix() const { return lambda_; }
  /// a^T Lambda b — the count of q^(1/2) factors in X(a)X(b)
  long long pairing(const ExpVec& a, const ExpVec& b) const;
  bool operator==(const SkewForm& o) const { return lambda_ == o.lambda_; }

 private:
  int dim_;
  Mat lambda_;
};

using SkewFormPtr = std::shared_ptr<const SkewForm>;

/// Sparse element of the quantum torus T_Lambda: sum of QCoeff * X(alpha),
/// with X(a)X(b) = q^{(1/2) a^T Lambda b} X(a+b). Immutable value type.
class TorusElem {
 public:
  TorusElem() = default;
  explicit TorusElem(SkewFormPtr form) : form_(std::move(form)) {}
  static TorusElem unit(SkewFormPtr form);
  static TorusElem monomial(SkewFormPtr form, ExpVec alpha, QCoeff c = QCoeff(1));

  bool is_zero() const { return terms_.empty(); }
  const SkewFormPtr& form() const { return form_; }
  const std::map<ExpVec, QCoeff>& terms() const { return terms_; }
  QCoeff coeff(const ExpVec& alpha) const;

  TorusElem operator+(const TorusElem& o) const;
  TorusElem operator-(const TorusElem& o) const;
  TorusElem operator*(const TorusElem& o) const;
  TorusElem operator-() const;
  TorusElem scaled(const QCoeff& c) const;
  bool operator==(const TorusElem& o) const { return terms_ == o.terms_; }

  /// substitute q^(1/2)=1 and forget the twist: exponent -> h-polynomial
  std::map<ExpVec, std::map<int, Int>> eval_q1() const;

  long long total_degree() const;  // max over terms of sum(alpha); 0 if empty

  /// canonical form: terms sorted lexicographically, "coeff * X(a1,...,am)"
  std::string str() const;

  void add_term(const ExpVec& alpha, const QCoeff& c);  // used by builders

 private:
  void check_same_form(const TorusElem& o) const;
  SkewFormPtr form_;
  std::map<ExpVec, QCoeff> terms_;
};

/// Skew form of the Yhat-torus: the twist of Yhat(b1) Yhat(b2) is
/// q^{(1/2) b1^T D B b2}. D is given as exact rationals d_i = num/den; every
/// entry of D B must come out an integer or the pair (D, B) is rejected.
SkewFormPtr yhat_form(const std::vector<std::pair<long long, long long>>& D, const Mat& B);

/// Product in the Yhat-torus; both operands must already live over the form
/// produced by yhat_form for (D, B).
TorusElem yhat_mul(const TorusElem& a, const TorusElem& b,
                   const std::vector<std::pair<long long, long long>>& D, const Mat& B);

/// q-commuting power series truncated by total degree. Exponents live in the
/// nonnegative orthant; terms of total degree > bound are dropped on the fly.
class QSeries {
 public:
  QSeries() = default;
  QSeries(TorusElem e, int bound);
  static QSeries unit(SkewFormPtr form, int bound);
  static QSeries monomial(SkewFormPtr form, ExpVec alpha, int bound, QCoeff c = QCoeff(1));

  int bound() const { return bound_; }
  const TorusElem& elem() const { return elem_; }
  bool is_zero() const { return elem_.is_zero(); }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(const QCoeff& c) const { return QSeries(elem_.scaled(c), bound_); }
  QSeries pow(int e) const;  // e >= 0, or e < 0 via inverse()
  bool operator==(const QSeries& o) const { return elem_ == o.elem_; }

  /// two-sided inverse up to the bound; requires unit constant term
  QSeries inverse() const;

  /// copy truncated to a lower bound
  QSeries truncated(int bound) const;

 private:
  TorusElem elem_;
  int bound_ = 0;
};

}  // namespace qclus
