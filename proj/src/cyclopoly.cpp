#include "cubictk/cyclopoly.hpp"

#include <map>
#include <sstream>

namespace ctk {

// ---------------------------------------------------------------------------
// integer polynomial helpers (ascending coefficients)

namespace {

void z_trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials, throws if not exact
std::vector<Int> z_divexact(std::vector<Int> num, const std::vector<Int>& den) {
  z_trim(num);
  std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size() && !num.empty()) {
    Int lead = num.back();
    Int c;
    if (fmod(lead, den.back()) != 0) throw math_error("polynomial division not exact");
    c = lead / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    z_trim(num);
  }
  if (!num.empty()) throw math_error("polynomial division not exact");
  return q;
}

std::map<long, std::vector<Int>> g_phi_cache;

}  // namespace

const std::vector<Int>& cyclotomic_poly(long m) {
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  if (m < 1) throw input_error("cyclotomic_poly: m >= 1 required");
  // x^m - 1
  std::vector<Int> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) num = z_divexact(std::move(num), cyclotomic_poly(d));
  auto [pos, ok] = g_phi_cache.emplace(m, std::move(num));
  (void)ok;
  return pos->second;
}

// ---------------------------------------------------------------------------
// rational polynomial helpers for CycF internals

namespace {

using QPoly = std::vector<Rat>;

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder of p mod the monic integer polynomial d
QPoly q_rem(QPoly p, const std::vector<Int>& d) {
  q_trim(p);
  while (p.size() >= d.size()) {
    Rat c = p.back();  // d monic
    size_t shift = p.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * Rat(d[i]);
    q_trim(p);
  }
  return p;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

QPoly q_sub_scaled(QPoly a, const QPoly& b, const Rat& c, size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
  q_trim(a);
  return a;
}

// extended euclid: returns (g, u) with u*a = g mod b, g the monic gcd.
// only u is needed (inverse of a mod b when g = 1).
std::pair<QPoly, QPoly> q_half_xgcd(QPoly a, QPoly b) {
  QPoly u0{Rat(1)}, u1{};
  q_trim(a); q_trim(b);
  while (!b.empty()) {
    // divide a by b
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    QPoly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      Rat c = r.back() / b.back();
      size_t shift = r.size() - b.size();
      q[shift] += c;
      r = q_sub_scaled(std::move(r), b, c, shift);
    }
    QPoly u2 = u0;
    // u2 = u0 - q*u1
    QPoly qu = q_mul(q, u1);
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rat(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    q_trim(u2);
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (a.empty()) throw math_error("xgcd of zero polynomials");
  Rat lead = a.back();
  for (auto& x : a) x /= lead;
  for (auto& x : u0) x /= lead;
  return {a, u0};
}

}  // namespace

// ---------------------------------------------------------------------------

CycF CycF::zeta(long m, long k) {
  check(m);
  k = lmod(k, m);
  std::vector<Rat> p(k + 1, Rat(0));
  p[k] = 1;
  return from_poly(m, std::move(p));
}

CycF CycF::from_poly(long m, std::vector<Rat> p) {
  check(m);
  CycF r(m);
  QPoly red = q_rem(std::move(p), cyclotomic_poly(m));
  for (size_t i = 0; i < red.size(); ++i) r.c_[i] = red[i];
  return r;
}

bool CycF::is_zero() const {
  for (auto& x : c_) if (x != 0) return false;
  return true;
}

bool CycF::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
  return true;
}

bool CycF::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
  return true;
}

Rat CycF::rational_part() const {
  if (!is_rational()) throw math_error("CycF: not rational: " + str());
  return c_.empty() ? Rat(0) : c_[0];
}

CycF CycF::operator-() const {
  CycF r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycF CycF::operator+(const CycF& o) const {
  match(o);
  CycF r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycF CycF::operator-(const CycF& o) const {
  match(o);
  CycF r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycF CycF::operator*(const CycF& o) const {
  match(o);
  QPoly prod = q_mul(c_, o.c_);
  return from_poly(m_, std::move(prod));
}

CycF CycF::inverse() const {
  if (is_zero()) throw math_error("CycF: inverse of zero");
  QPoly a(c_);
  q_trim(a);
  const auto& phi = cyclotomic_poly(m_);
  QPoly phiq(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) phiq[i] = Rat(phi[i]);
  auto [g, u] = q_half_xgcd(a, phiq);
  if (g.size() != 1) throw math_error("CycF: element not invertible (gcd with Phi_m nontrivial)");
  return from_poly(m_, std::move(u));
}

CycF CycF::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  CycF base = *this, acc(m_, Rat(1));
  Int k = e;
  while (k > 0) {
    if (fmod(k, 2) == 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

bool CycF::operator==(const CycF& o) const {
  if (m_ != o.m_) return false;
  return c_ == o.c_;
}

CycF CycF::galois(long a) const {
  a = lmod(a, m_);
  if (std::gcd(a, m_) != 1) throw input_error("CycF::galois: exponent not coprime to order");
  QPoly p((size_t)m_, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    p[(size_t)((__int128)i * a % m_)] += c_[i];
  }
  return from_poly(m_, std::move(p));
}

Rat CycF::norm() const {
  if (m_ <= 2) return c_.empty() ? Rat(0) : c_[0];
  CycF acc(m_, Rat(1));
  for (long a = 1; a < m_; ++a) {
    if (std::gcd(a, m_) != 1) continue;
    acc = acc * galois(a);
  }
  return acc.rational_part();
}

std::string CycF::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(c_[i]);
    if (i >= 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " (z = zeta_" << m_ << ")";
  return os.str();
}

CycF operator*(const Rat& a, const CycF& x) {
  CycF r = x;
  std::vector<Rat> c(x.coeffs());
  for (auto& v : c) v *= a;
  return CycF::from_poly(x.order(), std::move(c));
}

}  // namespace ctk
