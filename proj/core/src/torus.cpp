#include "qclus/torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qclus {

SkewForm::SkewForm(Mat lambda) : dim_(static_cast<int>(lambda.size())), lambda_(std::move(lambda)) {
  if (!is_skew_symmetric(lambda_))
    throw std::invalid_argument("SkewForm: matrix is not skew-symmetric");
}

long long SkewForm::pairing(const ExpVec& a, const ExpVec& b) const {
  long long s = 0;
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < dim_; ++j) row += lambda_[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

TorusElem TorusElem::unit(SkewFormPtr form) {
  TorusElem r(form);
  r.terms_[ExpVec(form->dim(), 0)] = QCoeff(1);
  return r;
}

TorusElem TorusElem::monomial(SkewFormPtr form, ExpVec alpha, QCoeff c) {
  TorusElem r(form);
  if (static_cast<int>(alpha.size()) != form->dim())
    throw std::invalid_argument("TorusElem: exponent dimension mismatch");
  if (!c.is_zero()) r.terms_[std::move(alpha)] = std::move(c);
  return r;
}

QCoeff TorusElem::coeff(const ExpVec& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? QCoeff() : it->second;
}

void TorusElem::check_same_form(const TorusElem& o) const {
  if (!form_ || !o.form_ || !(*form_ == *o.form_))
    throw std::invalid_argument("TorusElem: operands over different skew forms");
}

void TorusElem::add_term(const ExpVec& alpha, const QCoeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(alpha, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElem TorusElem::operator+(const TorusElem& o) const {
  check_same_form(o);
  TorusElem r(*this);
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

TorusElem TorusElem::operator-() const {
  TorusElem r(*this);
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

TorusElem TorusElem::operator-(const TorusElem& o) const { return *this + (-o); }

TorusElem TorusElem::scaled(const QCoeff& c) const {
  TorusElem r(form_);
  if (c.is_zero()) return r;
  for (const auto& [a, v] : terms_) {
    QCoeff p = v * c;
    if (!p.is_zero()) r.terms_.emplace(a, std::move(p));
  }
  return r;
}

TorusElem TorusElem::operator*(const TorusElem& o) const {
  check_same_form(o);
  TorusElem r(form_);
  int m = form_->dim();
  ExpVec key(m);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      long long tw = form_->pairing(a, b);
      for (int i = 0; i < m; ++i) key[i] = a[i] + b[i];
      r.add_term(key, (ca * cb).q_shift(tw));
    }
  }
  return r;
}

std::map<ExpVec, std::map<int, Int>> TorusElem::eval_q1() const {
  std::map<ExpVec, std::map<int, Int>> r;
  for (const auto& [a, c] : terms_) {
    auto p = c.eval_at_one_h();
    if (p.empty()) continue;
    auto& slot = r[a];
    for (auto& [hp, v] : p) {
      slot[hp] += v;
      if (slot[hp] == 0) slot.erase(hp);
    }
    if (slot.empty()) r.erase(a);
  }
  return r;
}

long long TorusElem::total_degree() const {
  long long d = 0;
  for (const auto& [a, c] : terms_) {
    long long s = 0;
    for (long long x : a) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::string TorusElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (c.terms().size() > 1)
      os << "(" << cs << ")";
    else
      os << cs;
    os << " * X(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
  }
  return os.str();
}

SkewFormPtr yhat_form(const std::vector<std::pair<long long, long long>>& D, const Mat& B) {
  int n = static_cast<int>(B.size());
  if (static_cast<int>(D.size()) != n)
    throw std::invalid_argument("yhat_form: D dimension mismatch");
  Mat DB(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    auto [num, den] = D[i];
    if (den <= 0 || num <= 0) throw std::invalid_argument("yhat_form: D entries must be positive");
    for (int j = 0; j < n; ++j) {
      long long p = num * B[i][j];
      if (p % den != 0)
        throw std::domain_error("yhat_form: D B has a non-integral entry; inconsistent (D, B)");
      DB[i][j] = p / den;
    }
  }
  return std::make_shared<SkewForm>(DB);  // skewness checked by the ctor
}

TorusElem yhat_mul(const TorusElem& a, const TorusElem& b,
                   const std::vector<std::pair<long long, long long>>& D, const Mat& B) {
  auto form = yhat_form(D, B);
  if (!(*a.form() == *form) || !(*b.form() == *form))
    throw std::invalid_argument("yhat_mul: operands do not live in the (D,B) torus");
  return a * b;
}

namespace {
long long vdeg(const ExpVec& a) {
  long long s = 0;
  for (long long x : a) s += x;
  return s;
}
}  // namespace

QSeries::QSeries(TorusElem e, int bound) : elem_(std::move(e)), bound_(bound) {
  TorusElem t(elem_.form());
  for (const auto& [a, c] : elem_.terms()) {
    for (long long x : a)
      if (x < 0) throw std::domain_error("QSeries: exponent outside the nonnegative orthant");
    if (vdeg(a) <= bound_) t.add_term(a, c);
  }
  elem_ = std::move(t);
}

QSeries QSeries::unit(SkewFormPtr form, int bound) {
  return QSeries(TorusElem::unit(std::move(form)), bound);
}

QSeries QSeries::monomial(SkewFormPtr form, ExpVec alpha, int bound, QCoeff c) {
  return QSeries(TorusElem::monomial(std::move(form), std::move(alpha), std::move(c)), bound);
}

QSeries QSeries::operator+(const QSeries& o) const {
  return QSeries(elem_ + o.elem_, std::min(bound_, o.bound_));
}

QSeries QSeries::operator-(const QSeries& o) const {
  return QSeries(elem_ - o.elem_, std::min(bound_, o.bound_));
}

QSeries QSeries::operator*(const QSeries& o) const {
  int bound = std::min(bound_, o.bound_);
  const auto& form = elem_.form();
  TorusElem r(form);
  int m = form->dim();
  ExpVec key(m);
  for (const auto& [a, ca] : elem_.terms()) {
    long long da = vdeg(a);
    for (const auto& [b, cb] : o.elem_.terms()) {
      if (da + vdeg(b) > bound) continue;
      long long tw = form->pairing(a, b);
      for (int i = 0; i < m; ++i) key[i] = a[i] + b[i];
      r.add_term(key, (ca * cb).q_shift(tw));
    }
  }
  return QSeries(std::move(r), bound);
}

QSeries QSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries r = unit(elem_.form(), bound_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

QSeries QSeries::inverse() const {
  const auto& form = elem_.form();
  int m = form->dim();
  ExpVec zero(m, 0);
  QCoeff c0 = elem_.coeff(zero);
  if (!c0.is_unit())
    throw std::domain_error("QSeries: constant term is not an invertible unit: " + c0.str());
  QCoeff c0i = c0.unit_inverse();
  // split by total degree; solve a*b = 1 degree by degree
  std::map<long long, TorusElem> byd;
  for (const auto& [a, c] : elem_.terms()) {
    auto [it, fresh] = byd.try_emplace(vdeg(a), TorusElem(form));
    it->second.add_term(a, c);
  }
  std::map<long long, TorusElem> b;
  b[0] = TorusElem::monomial(form, zero, c0i);
  for (long long d = 1; d <= bound_; ++d) {
    TorusElem acc(form);
    for (long long i = 1; i <= d; ++i) {
      auto ai = byd.find(i);
      auto bj = b.find(d - i);
      if (ai == byd.end() || bj == b.end()) continue;
      acc = acc + ai->second * bj->second;
    }
    if (!acc.is_zero()) b[d] = acc.scaled(-c0i);
  }
  TorusElem total(form);
  for (auto& [d, e] : b) total = total + e;
  return QSeries(std::move(total), bound_);
}

QSeries QSeries::truncated(int bound) const {
  return QSeries(elem_, std::min(bound, bound_));
}

}  // namespace qclus
