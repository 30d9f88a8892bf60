#include "qclus/qcoeff.hpp"

#include <cctype>
#include <sstream>

namespace qclus {

QCoeff QCoeff::term(Int coeff, int q2, int hpow) {
  QCoeff r;
  if (coeff != 0) r.terms_[QKey{q2, hpow}] = std::move(coeff);
  return r;
}

bool QCoeff::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == QKey{0, 0} &&
         terms_.begin()->second == 1;
}

bool QCoeff::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& [k, v] = *terms_.begin();
  return k.hp == 0 && (v == 1 || v == -1);
}

QCoeff QCoeff::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("QCoeff: not a unit: " + str());
  const auto& [k, v] = *terms_.begin();
  return term(v, -k.q2, 0);
}

QCoeff QCoeff::operator+(const QCoeff& o) const {
  QCoeff r(*this);
  for (const auto& [k, v] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

QCoeff QCoeff::operator-() const {
  QCoeff r(*this);
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

QCoeff QCoeff::operator-(const QCoeff& o) const { return *this + (-o); }

QCoeff QCoeff::operator*(const QCoeff& o) const {
  QCoeff r;
  for (const auto& [ka, va] : terms_) {
    for (const auto& [kb, vb] : o.terms_) {
      QKey k{ka.q2 + kb.q2, ka.hp + kb.hp};
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_.emplace(k, va * vb);
      } else {
        it->second += va * vb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

QCoeff QCoeff::q_shift(long long q2) const {
  QCoeff r;
  for (const auto& [k, v] : terms_)
    r.terms_[QKey{k.q2 + static_cast<int>(q2), k.hp}] = v;
  return r;
}

Int QCoeff::eval_at_one() const {
  Int s = 0;
  for (const auto& [k, v] : terms_) {
    if (k.hp != 0)
      throw std::domain_error("QCoeff: eval_at_one on symbolic coefficient " + str());
    s += v;
  }
  return s;
}

std::map<int, Int> QCoeff::eval_at_one_h() const {
  std::map<int, Int> r;
  for (const auto& [k, v] : terms_) {
    r[k.hp] += v;
    if (r[k.hp] == 0) r.erase(k.hp);
  }
  return r;
}

bool QCoeff::positive_at_one() const {
  auto p = eval_at_one_h();
  if (p.empty()) return false;
  for (const auto& [hp, v] : p)
    if (v <= 0) return false;
  return true;
}

bool QCoeff::has_symbol() const {
  for (const auto& [k, v] : terms_)
    if (k.hp != 0) return true;
  return false;
}

std::string QCoeff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Int a = v;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string factors;
    if (a != 1 || (k.q2 == 0 && k.hp == 0)) factors = a.str();
    if (k.hp != 0) {
      if (!factors.empty()) factors += "*";
      factors += (k.hp == 1) ? "h" : "h^" + std::to_string(k.hp);
    }
    if (k.q2 != 0) {
      if (!factors.empty()) factors += "*";
      if (k.q2 % 2 == 0) {
        int e = k.q2 / 2;
        if (e == 1)
          factors += "q";
        else if (e > 0)
          factors += "q^" + std::to_string(e);
        else
          factors += "q^(" + std::to_string(e) + ")";
      } else {
        factors += "q^(" + std::to_string(k.q2) + "/2)";
      }
    }
    os << factors;
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string_view s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip();
    return s[i++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  Int integer() {
    skip();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) throw std::invalid_argument("QCoeff parse: integer expected in '" + std::string(s) + "'");
    Int v(std::string(s.substr(i, k - i)));
    i = k;
    return v;
  }
};

// parses an exponent of q: either "n" (whole powers) or "(n)" or "(n/2)"
int parse_qexp(Lexer& lx) {
  if (lx.accept('(')) {
    Int num = lx.integer();
    int halves;
    if (lx.accept('/')) {
      Int den = lx.integer();
      if (den != 2) throw std::invalid_argument("QCoeff parse: denominator must be 2");
      halves = static_cast<int>(num);
    } else {
      halves = 2 * static_cast<int>(num);
    }
    if (!lx.accept(')')) throw std::invalid_argument("QCoeff parse: ')' expected");
    return halves;
  }
  return 2 * static_cast<int>(lx.integer());
}

}  // namespace

QCoeff QCoeff::parse(std::string_view sv) {
  Lexer lx{sv};
  QCoeff total;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("QCoeff parse: '+' or '-' expected in '" + std::string(sv) + "'");
    }
    first = false;
    Int coeff = 1;
    int q2 = 0, hp = 0;
    bool any = false;
    bool expect_factor = true;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= lx.integer();
        any = true;
      } else if (c == 'h') {
        lx.get();
        int e = 1;
        if (lx.accept('^')) e = static_cast<int>(lx.integer());
        hp += e;
        any = true;
      } else if (c == 'q') {
        lx.get();
        int e2 = 2;
        if (lx.accept('^')) e2 = parse_qexp(lx);
        q2 += e2;
        any = true;
      } else {
        throw std::invalid_argument("QCoeff parse: factor expected in '" + std::string(sv) + "'");
      }
      expect_factor = lx.accept('*');
    }
    if (!any) throw std::invalid_argument("QCoeff parse: empty term");
    total += term(sign * coeff, q2, hp);
  }
  return total;
}

}  // namespace qclus
