#include "qclus/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qclus {

std::shared_ptr<const PolyRing> PolyRing::principal(
    int n, const std::vector<int>& r, const std::vector<std::vector<ZEntry>>& z) {
  auto ring = std::make_shared<PolyRing>();
  ring->n_ = n;
  ring->r_ = r;
  for (int i = 0; i < n; ++i) ring->names_.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) ring->names_.push_back("y" + std::to_string(i + 1));
  ring->zslots_.resize(n);
  std::map<std::string, int> by_name;
  for (int i = 0; i < n; ++i) {
    ring->zslots_[i].resize(r[i] + 1);
    for (int s = 0; s <= r[i]; ++s) {
      ZSlot slot;
      if (!z.empty() && std::holds_alternative<std::string>(z[i][s])) {
        const std::string& name = std::get<std::string>(z[i][s]);
        auto it = by_name.find(name);
        if (it == by_name.end()) {
          int v = static_cast<int>(ring->names_.size());
          ring->names_.push_back(name);
          by_name.emplace(name, v);
          ring->z_rep_.emplace(v, std::make_pair(i, s));
          it = by_name.find(name);
        }
        slot.formal = true;
        slot.var = it->second;
      } else {
        slot.formal = false;
        slot.value = z.empty() ? 1 : std::get<long long>(z[i][s]);
      }
      ring->zslots_[i][s] = slot;
    }
  }
  return ring;
}

MPoly MPoly::constant(PolyRingPtr ring, Int c) {
  MPoly p(ring);
  if (c != 0) p.terms_[ExpVec(ring->nvars(), 0)] = std::move(c);
  return p;
}

MPoly MPoly::variable(PolyRingPtr ring, int v) {
  ExpVec e(ring->nvars(), 0);
  e[v] = 1;
  return monomial(std::move(ring), std::move(e));
}

MPoly MPoly::monomial(PolyRingPtr ring, ExpVec e, Int c) {
  MPoly p(ring);
  if (c != 0) p.terms_[std::move(e)] = std::move(c);
  return p;
}

bool MPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  return std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
}

void MPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(ring_ ? ring_ : o.ring_);
  if (terms_.empty() || o.terms_.empty()) return r;
  size_t w = terms_.begin()->first.size();
  // flat product, sort, merge: much cheaper than per-term map inserts once
  // cluster variables grow to thousands of terms
  std::vector<std::pair<ExpVec, Int>> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  ExpVec key(w);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (size_t i = 0; i < w; ++i) key[i] = a[i] + b[i];
      prods.emplace_back(key, ca * cb);
    }
  std::sort(prods.begin(), prods.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  size_t out = 0;
  for (size_t i = 0; i < prods.size();) {
    size_t j = i + 1;
    Int sum = std::move(prods[i].second);
    while (j < prods.size() && prods[j].first == prods[i].first) sum += prods[j++].second;
    if (sum != 0) {
      if (out != i) prods[out].first = std::move(prods[i].first);
      prods[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  prods.resize(out);
  r.terms_ = std::map<ExpVec, Int>(std::make_move_iterator(prods.begin()),
                                   std::make_move_iterator(prods.end()));
  return r;
}

MPoly MPoly::pow(long long e) const {
  if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = constant(ring_, 1);
  MPoly base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace {
void exp_bounds(const std::map<ExpVec, Int>& terms, ExpVec& lo, ExpVec& hi) {
  lo = hi = terms.begin()->first;
  for (const auto& [e, c] : terms)
    for (size_t v = 0; v < e.size(); ++v) {
      lo[v] = std::min(lo[v], e[v]);
      hi[v] = std::max(hi[v], e[v]);
    }
}
}  // namespace

bool MPoly::try_exact_div(const MPoly& o, MPoly& quotient) const {
  if (o.is_zero()) throw std::domain_error("MPoly: division by zero");
  if (is_zero()) {
    quotient = MPoly(ring_ ? ring_ : o.ring_);
    return true;
  }
  // Newton polytopes multiply under Minkowski sum, so an exact quotient has
  // its exponents confined to [nlo - dlo, nhi - dhi] per variable. Enforcing
  // the box also bounds the division loop on non-divisible input.
  ExpVec nlo, nhi, dlo, dhi;
  exp_bounds(terms_, nlo, nhi);
  exp_bounds(o.terms_, dlo, dhi);
  size_t w = nlo.size();
  ExpVec qlo(w), qhi(w);
  for (size_t v = 0; v < w; ++v) {
    qlo[v] = nlo[v] - dlo[v];
    qhi[v] = nhi[v] - dhi[v];
    if (qhi[v] < qlo[v]) return false;
  }
  MPoly q(ring_ ? ring_ : o.ring_);
  MPoly rem(*this);
  const auto& dlead = *o.terms_.rbegin();
  ExpVec e(w);
  while (!rem.terms_.empty()) {
    const auto& rlead = *rem.terms_.rbegin();
    if (rlead.second % dlead.second != 0) return false;
    for (size_t v = 0; v < w; ++v) {
      e[v] = rlead.first[v] - dlead.first[v];
      if (e[v] < qlo[v] || e[v] > qhi[v]) return false;
    }
    Int c = rlead.second / dlead.second;
    MPoly t = monomial(q.ring_, e, c);
    q += t;
    rem = rem - t * o;
    if (!rem.terms_.empty() && !(rem.terms_.rbegin()->first < rlead.first)) return false;
  }
  quotient = std::move(q);
  return true;
}

MPoly MPoly::exact_div(const MPoly& o) const {
  MPoly q;
  if (!try_exact_div(o, q))
    throw std::domain_error("MPoly: not exactly divisible");
  return q;
}

MPoly MPoly::substituted_one(const std::vector<int>& vars) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    ExpVec f = e;
    for (int v : vars) f[v] = 0;
    r.add_term(f, c);
  }
  return r;
}

long long MPoly::degree_over(const std::vector<int>& vars) const {
  long long d = 0;
  for (const auto& [e, c] : terms_) {
    long long s = 0;
    for (int v : vars) s += e[v];
    d = std::max(d, s);
  }
  return d;
}

std::vector<int> MPoly::x_vars() const {
  std::vector<int> v;
  for (int i = 0; i < ring_->rank(); ++i) v.push_back(ring_->x_var(i));
  return v;
}

std::vector<int> MPoly::y_vars() const {
  std::vector<int> v;
  for (int i = 0; i < ring_->rank(); ++i) v.push_back(ring_->y_var(i));
  return v;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  int n = ring_->rank(), w = ring_->nvars();
  // graded lex in y, then z exponents, then x
  std::vector<const std::pair<const ExpVec, Int>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  // ascending total y-degree; within a degree the y1-heavier monomial first
  auto keyof = [&](const ExpVec& e) {
    long long ydeg = 0;
    for (int i = 0; i < n; ++i) ydeg += e[n + i];
    ExpVec k;
    k.push_back(ydeg);
    for (int i = 0; i < n; ++i) k.push_back(-e[n + i]);
    for (int v = 2 * n; v < w; ++v) k.push_back(e[v]);
    for (int i = 0; i < n; ++i) k.push_back(e[i]);
    return k;
  };
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    return keyof(a->first) < keyof(b->first);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const auto& [e, c] = *t;
    Int a = c;
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
    auto put = [&](int v) {
      if (e[v] == 0) return;
      if (!factors.empty()) factors += "*";
      factors += ring_->var_name(v);
      if (e[v] != 1) {
        factors += "^";
        if (e[v] < 0)
          factors += "(" + std::to_string(e[v]) + ")";
        else
          factors += std::to_string(e[v]);
      }
    };
    bool any_var = std::any_of(e.begin(), e.end(), [](long long x) { return x != 0; });
    if (a != 1 || !any_var) factors = a.str();
    for (int i = 0; i < n; ++i) put(ring_->x_var(i));
    for (int v = 2 * n; v < w; ++v) put(v);
    for (int i = 0; i < n; ++i) put(ring_->y_var(i));
    os << factors;
  }
  return os.str();
}

MRat::MRat(MPoly num) : num_(std::move(num)) {
  den_ = MPoly::constant(num_.ring(), 1);
}

MRat::MRat(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("MRat: zero denominator");
}

MRat MRat::operator+(const MRat& o) const {
  return MRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MRat MRat::operator*(const MRat& o) const {
  return MRat(num_ * o.num_, den_ * o.den_);
}

MRat MRat::inverse() const {
  if (num_.is_zero()) throw std::domain_error("MRat: inverse of zero");
  return MRat(den_, num_);
}

MRat MRat::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  return MRat(num_.pow(e), den_.pow(e));
}

bool MRat::is_polynomial(MPoly* out) const {
  MPoly q;
  if (!num_.try_exact_div(den_, q)) return false;
  if (out) *out = std::move(q);
  return true;
}

MPoly MRat::to_poly() const {
  MPoly q;
  if (!is_polynomial(&q))
    throw std::domain_error("MRat: value is not a polynomial");
  return q;
}

Int generalized_binomial(long long h, long long n0) {
  if (n0 < 0) return 0;
  Int num = 1;
  for (long long i = 0; i < n0; ++i) num *= Int(h - i);
  Int den = 1;
  for (long long i = 2; i <= n0; ++i) den *= i;
  Int q = num / den;
  if (q * den != num) throw std::logic_error("generalized_binomial: non-integral");
  return q;
}

Int multinomial(const std::vector<long long>& parts) {
  long long total = 0;
  for (long long p : parts) total += p;
  Int num = 1;
  for (long long i = 2; i <= total; ++i) num *= i;
  Int den = 1;
  for (long long p : parts)
    for (long long i = 2; i <= p; ++i) den *= i;
  return num / den;
}

}  // namespace qclus
