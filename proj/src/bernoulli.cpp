#include "cubictk/bernoulli.hpp"
#include "cubictk/fp.hpp"

#include <map>

namespace ctk {

namespace {

std::vector<Rat> g_bern{Rat(1)};  // B_0

std::vector<Rat> binom_row(long n) {
  std::vector<Rat> row(n + 1);
  Int c = 1;
  for (long j = 0; j <= n; ++j) {
    row[j] = Rat(c);
    c = c * (n - j) / (j + 1);
  }
  return row;
}

}  // namespace

const Rat& bernoulli(long k) {
  if (k < 0) throw input_error("bernoulli: k >= 0 required");
  while ((long)g_bern.size() <= k) {
    long n = (long)g_bern.size();
    // sum_{j=0}^{n} C(n+1, j) B_j = 0  for n >= 1
    auto row = binom_row(n + 1);
    Rat s(0);
    for (long j = 0; j < n; ++j) s += row[j] * g_bern[j];
    g_bern.push_back(-s / row[n]);
  }
  return g_bern[k];
}

Int bernoulli_mod(long k, long m) {
  if (!is_prime(m) || m == 2) throw input_error("bernoulli_mod: odd prime modulus required");
  if ((k % (m - 1)) == 0 && k > 0) throw math_error("bernoulli_mod: k divisible by m-1, B_k not m-integral");
  if (m < k + 3) {
    // power sum congruence needs the Faulhaber tail to vanish; just reduce
    // the exact value
    const Rat& b = bernoulli(k);
    return fmod(Int(b.get_num()) * invmod(Int(b.get_den()), Int(m)), Int(m));
  }
  // S_k(m) = sum_{a=1}^{m-1} a^k = m B_k + (higher powers of m) once m >= k+3,
  // so B_k = S_k(m)/m mod m. compute S_k mod m^2.
  Int m2 = Int(m) * m;
  Int s = 0;
  for (long a = 1; a < m; ++a) s += powmod(Int(a), Int(k), m2);
  s = fmod(s, m2);
  if (fmod(s, Int(m)) != 0) throw math_error("bernoulli_mod: power sum not divisible by m");
  return fmod(s / m, Int(m));
}

bool von_staudt_clausen_check(long k) {
  if (k <= 0 || k % 2) throw input_error("von_staudt_clausen_check: positive even k required");
  Int den = bernoulli(k).get_den();
  Int expected = 1;
  for (long p = 2; p <= k + 1; ++p)
    if (is_prime(p) && k % (p - 1) == 0) expected *= p;
  return den == expected;
}

// ---------------------------------------------------------------------------

bool DirichletChar::is_trivial() const {
  for (long a = 0; a < f; ++a)
    if (log_table[a] != -1 && lmod(log_table[a], n) != 0) return false;
  return true;
}

CycF DirichletChar::value(long a) const {
  long e = log_table[lmod(a, f)];
  if (e < 0) return CycF(n);  // zero
  return CycF::zeta(n, e);
}

DirichletChar char_mod_prime(long f, long j) {
  if (!is_prime(f)) throw input_error("char_mod_prime: prime modulus required");
  DirichletChar ch;
  ch.f = f;
  ch.n = f - 1;
  ch.log_table.assign(f, -1);
  if (f == 2) { ch.n = 1; ch.log_table[1] = 0; return ch; }
  long g = (long)primitive_root((uint64_t)f);
  long cur = 1;
  for (long t = 0; t < f - 1; ++t) {
    ch.log_table[cur] = lmod(j * t, f - 1);
    cur = (long)((__int128)cur * g % f);
  }
  return ch;
}

DirichletChar quadratic_char(long f) {
  DirichletChar ch = char_mod_prime(f, (f - 1) / 2);
  // values are zeta_{f-1}^{(f-1)/2 * t} = (-1)^t; renormalize to root order 2
  DirichletChar q;
  q.f = f;
  q.n = 2;
  q.log_table.assign(f, -1);
  for (long a = 0; a < f; ++a)
    if (ch.log_table[a] >= 0) q.log_table[a] = (ch.log_table[a] == 0) ? 0 : 1;
  return q;
}

CycF gen_bernoulli(long k, const DirichletChar& chi) {
  if (k < 0) throw input_error("gen_bernoulli: k >= 0 required");
  if (chi.f == 1 || (chi.is_trivial() && chi.f == 1)) {
    Rat v = bernoulli(k);
    if (k == 1) v = -v;  // convention: B_{1, trivial} = +1/2
    return CycF(chi.n, v);
  }
  // B_k(x) = sum_j C(k, j) B_j x^{k-j}
  auto row = binom_row(k);
  CycF acc(chi.n);
  for (long a = 1; a <= chi.f; ++a) {
    CycF cv = chi.value(a);
    if (cv.is_zero()) continue;
    Rat x(a, chi.f);
    Rat bk(0);
    Rat xpow(1);
    for (long j = k; j >= 0; --j) {
      // iterate j descending so xpow = x^{k-j}
      bk += row[j] * bernoulli(j) * xpow;
      xpow *= x;
    }
    acc = acc + bk * cv;
  }
  Rat scale = 1;
  for (long i = 0; i + 1 < k; ++i) scale *= chi.f;
  if (k == 0) scale = Rat(1, chi.f);
  return scale * acc;
}

Int h_minus(long r) {
  if (!is_prime(r) || r < 3) throw input_error("h_minus: odd prime r required");
  // product of -B_{1,chi}/2 over the odd characters of (Z/r)^*, times
  // Q w = 1 * 2r. all values live in Q(zeta_{r-1}).
  long n = r - 1;
  CycF prod(n, Rat(1));
  for (long j = 0; j < n; ++j) {
    if (j % 2 == 0) continue;  // chi_j odd iff chi_j(-1) = -1 iff j odd
    DirichletChar ch = char_mod_prime(r, j);
    CycF b1 = gen_bernoulli(1, ch);
    prod = prod * (Rat(-1, 2) * b1);
  }
  CycF total = Rat(2 * r, 1) * prod;
  Rat v = total.rational_part();
  if (!is_integer(v) || v <= 0) throw math_error("h_minus: value not a positive integer: " + rat_str(v));
  return v.get_num();
}

std::vector<std::pair<long, long>> irregular_pairs_below(long bound) {
  std::vector<std::pair<long, long>> out;
  for (long r = 3; r < bound; ++r) {
    if (!is_prime(r)) continue;
    for (long k = 2; k <= r - 3; k += 2) {
      Int num = bernoulli(k).get_num();
      if (fmod(num, Int(r)) == 0) out.push_back({r, k});
    }
  }
  return out;
}

Int annihilator_exponent(long k, bool vandiver) {
  if (k < 1) throw input_error("annihilator_exponent: k >= 1 required");
  if (k == 1) return 1;
  if (k % 2 == 0) {
    Rat v = bernoulli(k) / Rat(k);
    Int num = v.get_num();
    return num < 0 ? Int(-num) : num;
  }
  if (vandiver) return 1;
  throw math_error("annihilator_exponent: odd index " + std::to_string(k) +
                   " unknown without the vandiver flag");
}

}  // namespace ctk
