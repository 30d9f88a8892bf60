#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qclus/matrix.hpp"
#include "qclus/qcoeff.hpp"
#include "qclus/seed.hpp"

namespace qclus {

/// Variable layout for one classical seed run: x_1..x_n, y_1..y_n, then one
/// slot per distinct formal z symbol. Shared immutably by all polynomials of
/// a run.
class PolyRing {
 public:
  struct ZSlot {
    bool formal = false;
    int var = -1;         // valid when formal
    long long value = 1;  // valid when numeric
  };

  static std::shared_ptr<const PolyRing> principal(
      int n, const std::vector<int>& r, const std::vector<std::vector<ZEntry>>& z);

  int rank() const { return n_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  int x_var(int i) const { return i; }
  int y_var(int i) const { return n_ + i; }
  bool is_x(int v) const { return v < n_; }
  bool is_y(int v) const { return v >= n_ && v < 2 * n_; }
  bool is_z(int v) const { return v >= 2 * n_; }
  const std::string& var_name(int v) const { return names_[v]; }
  const ZSlot& zslot(int i, int s) const { return zslots_[i][s]; }
  const std::vector<int>& r() const { return r_; }
  /// one representative (i,s) per formal z variable
  const std::map<int, std::pair<int, int>>& z_var_slots() const { return z_rep_; }

 private:
  int n_ = 0;
  std::vector<int> r_;
  std::vector<std::string> names_;
  std::vector<std::vector<ZSlot>> zslots_;
  std::map<int, std::pair<int, int>> z_rep_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Sparse multivariate Laurent polynomial over Z with the ring's variables.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(PolyRingPtr ring, Int c);
  static MPoly variable(PolyRingPtr ring, int v);
  static MPoly monomial(PolyRingPtr ring, ExpVec e, Int c = 1);

  const PolyRingPtr& ring() const { return ring_; }
  const std::map<ExpVec, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t size() const { return terms_.size(); }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly pow(long long e) const;  // e >= 0

  /// exact Laurent division; returns false if o does not divide this
  bool try_exact_div(const MPoly& o, MPoly& quotient) const;
  MPoly exact_div(const MPoly& o) const;

  /// set the given variables to 1 (project their exponents away)
  MPoly substituted_one(const std::vector<int>& vars) const;
  /// total degree over a class of variables (max over terms of the exponent sum)
  long long degree_over(const std::vector<int>& vars) const;
  std::vector<int> x_vars() const;
  std::vector<int> y_vars() const;

  void add_term(const ExpVec& e, const Int& c);

  /// graded-lex rendering in y then z (x's, if any, print first)
  std::string str() const;

 private:
  PolyRingPtr ring_;
  std::map<ExpVec, Int> terms_;
};

/// Fraction of two polynomials, kept unreduced; reduction happens only
/// through exact division when a polynomial value is demanded.
class MRat {
 public:
  MRat() = default;
  explicit MRat(MPoly num);
  MRat(MPoly num, MPoly den);

  static MRat one(PolyRingPtr ring) { return MRat(MPoly::constant(ring, 1)); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  MRat operator+(const MRat& o) const;
  MRat operator*(const MRat& o) const;
  MRat inverse() const;
  MRat pow(long long e) const;  // any sign

  /// exact division num/den; throws std::domain_error if not a polynomial
  MPoly to_poly() const;
  bool is_polynomial(MPoly* out = nullptr) const;

 private:
  MPoly num_, den_;
};

/// {h; n0, n1, ..., nl} = binom(h, n0) * multinomial(n0; n1..nl), zero unless
/// n0 = n1 + ... + nl. binom is the generalized binomial for any integer h.
Int generalized_binomial(long long h, long long n0);
Int multinomial(const std::vector<long long>& parts);

}  // namespace qclus
