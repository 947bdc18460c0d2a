#pragma once
// exact arithmetic in Q(zeta_m): elements are rational polynomials in zeta
// reduced mod the m-th cyclotomic polynomial. this is the value field for
// character tables, generalized Bernoulli numbers and the h^- formula.

#include "cubictk/rat.hpp"

namespace ctk {

// m-th cyclotomic polynomial, ascending coefficients, computed by dividing
// x^m - 1 by Phi_d for proper divisors d. cached.
const std::vector<Int>& cyclotomic_poly(long m);

class CycF {
 public:
  CycF() : m_(1), c_(1, Rat(0)) {}
  explicit CycF(long m) : m_(m), c_(deg(m), Rat(0)) { check(m); }
  CycF(long m, const Rat& x) : CycF(m) { if (!c_.empty()) c_[0] = x; else if (x != 0) throw math_error("CycF: nonzero in zero ring"); }

  static long deg(long m) { return euler_phi(m); }
  static CycF zeta(long m, long k);              // zeta_m^k
  static CycF from_poly(long m, std::vector<Rat> p);  // reduce any-degree poly

  long order() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational_part() const;  // throws if not rational

  CycF operator-() const;
  CycF operator+(const CycF& o) const;
  CycF operator-(const CycF& o) const;
  CycF operator*(const CycF& o) const;
  CycF inverse() const;       // extended euclid against Phi_m
  CycF pow(const Int& e) const;
  bool operator==(const CycF& o) const;
  bool operator!=(const CycF& o) const { return !(*this == o); }

  // galois action zeta -> zeta^a, requires gcd(a, m) = 1
  CycF galois(long a) const;
  CycF conj() const { return galois(m_ - 1); }  // complex conjugation

  // field norm down to Q (product over all galois conjugates)
  Rat norm() const;

  std::string str() const;

 private:
  long m_;
  std::vector<Rat> c_;  // length phi(m), coefficients of 1, zeta, ..., zeta^{phi(m)-1}
  static void check(long m) { if (m < 1) throw input_error("CycF: order must be >= 1"); }
  void match(const CycF& o) const {
    if (m_ != o.m_) throw input_error("CycF: mixed cyclotomic orders");
  }
};

CycF operator*(const Rat& a, const CycF& x);

}  // namespace ctk
