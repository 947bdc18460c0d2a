#include "cubictk/group.hpp"

#include <algorithm>

namespace ctk {

AbGroup AbGroup::invariant_factors(std::vector<long> d) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 2) throw input_error("invariant factors must be >= 2");
    if (i && d[i] % d[i - 1] != 0)
      throw input_error("invariant factors must form a divisibility chain");
  }
  AbGroup g;
  g.d_ = std::move(d);
  return g;
}

AbGroup AbGroup::raw_factors(std::vector<long> d) {
  for (long x : d)
    if (x < 1) throw input_error("factor orders must be >= 1");
  AbGroup g;
  g.d_ = std::move(d);
  return g;
}

Int AbGroup::order() const {
  Int o = 1;
  for (long x : d_) o *= x;
  return o;
}

long AbGroup::exponent() const {
  long e = 1;
  for (long x : d_) e = std::lcm(e, x);
  return e;
}

AbGroup AbGroup::power(long n) const {
  if (n < 0) throw input_error("AbGroup::power: n >= 0");
  std::vector<long> out;
  out.reserve(d_.size() * n);
  for (long i = 0; i < n; ++i) out.insert(out.end(), d_.begin(), d_.end());
  return raw_factors(std::move(out));
}

std::vector<long> AbGroup::elem_at(const Int& idx) const {
  std::vector<long> x(d_.size());
  Int rem = idx;
  for (size_t i = 0; i < d_.size(); ++i) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.get_mpz_t(), Int(d_[i]).get_mpz_t());
    x[i] = to_long(r);
    rem = q;
  }
  return x;
}

Int AbGroup::elem_index(const std::vector<long>& x) const {
  if (x.size() != d_.size()) throw input_error("elem_index: wrong length");
  Int idx = 0, stride = 1;
  for (size_t i = 0; i < d_.size(); ++i) {
    idx += stride * lmod(x[i], d_[i]);
    stride *= d_[i];
  }
  return idx;
}

std::vector<long> AbGroup::add(const std::vector<long>& x, const std::vector<long>& y) const {
  std::vector<long> z(d_.size());
  for (size_t i = 0; i < d_.size(); ++i) z[i] = lmod(x[i] + y[i], d_[i]);
  return z;
}

// ---------------------------------------------------------------------------

long GChar::value_exponent(const std::vector<long>& x, long m) const {
  if (x.size() != orders.size()) throw input_error("value_exponent: wrong length");
  long acc = 0;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (m % orders[i] != 0) throw input_error("character value order incompatible");
    __int128 t = (__int128)lmod(e[i], orders[i]) * lmod(x[i], orders[i]) % m;
    t = t * (m / orders[i]) % m;
    acc = lmod(acc + (long)t, m);
  }
  return acc;
}

GChar GChar::mul(const GChar& o) const {
  if (orders != o.orders) throw input_error("GChar::mul: mixed groups");
  GChar r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = lmod(e[i] + o.e[i], orders[i]);
  return r;
}

GChar GChar::inv() const {
  GChar r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = lmod(-e[i], orders[i]);
  return r;
}

GChar GChar::power_scalar(long a) const {
  GChar r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = (long)lmod((long)(((__int128)a * e[i]) % orders[i]), orders[i]);
  return r;
}

bool GChar::is_trivial() const {
  for (size_t i = 0; i < e.size(); ++i)
    if (lmod(e[i], orders[i]) != 0) return false;
  return true;
}

Int char_count(const AbGroup& g) { return g.order(); }

GChar char_at(const AbGroup& g, const Int& idx) {
  GChar c;
  c.orders = g.factors();
  c.e = g.elem_at(idx);
  return c;
}

Int char_index(const AbGroup& g, const GChar& c) { return g.elem_index(c.e); }

// ---------------------------------------------------------------------------

GroupHom GroupHom::make(const AbGroup& s, const AbGroup& t, std::vector<std::vector<long>> mat) {
  GroupHom h;
  h.src = s.factors();
  h.tgt = t.factors();
  if (mat.size() != h.tgt.size()) throw input_error("GroupHom: matrix row count != target rank");
  for (auto& row : mat)
    if (row.size() != h.src.size()) throw input_error("GroupHom: matrix column count != source rank");
  // well-definedness: the image of a generator of order d_j must be killed by d_j
  for (size_t i = 0; i < h.tgt.size(); ++i)
    for (size_t j = 0; j < h.src.size(); ++j) {
      mat[i][j] = lmod(mat[i][j], h.tgt[i]);
      if (((__int128)mat[i][j] * h.src[j]) % h.tgt[i] != 0)
        throw input_error("GroupHom: image order does not divide generator order");
    }
  h.m = std::move(mat);
  return h;
}

std::vector<long> GroupHom::apply(const std::vector<long>& x) const {
  if (x.size() != src.size()) throw input_error("GroupHom::apply: wrong length");
  std::vector<long> y(tgt.size(), 0);
  for (size_t i = 0; i < tgt.size(); ++i) {
    __int128 acc = 0;
    for (size_t j = 0; j < src.size(); ++j) acc += (__int128)m[i][j] * x[j];
    y[i] = (long)lmod((long)(acc % tgt[i]), tgt[i]);
  }
  return y;
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
  if (inner.tgt != src) throw input_error("GroupHom::compose_after: shape mismatch");
  GroupHom h;
  h.src = inner.src;
  h.tgt = tgt;
  h.m.assign(tgt.size(), std::vector<long>(inner.src.size(), 0));
  for (size_t i = 0; i < tgt.size(); ++i)
    for (size_t j = 0; j < inner.src.size(); ++j) {
      __int128 acc = 0;
      for (size_t k = 0; k < src.size(); ++k) acc += (__int128)m[i][k] * inner.m[k][j];
      h.m[i][j] = (long)lmod((long)(acc % tgt[i]), tgt[i]);
    }
  return h;
}

GChar GroupHom::pullback(const GChar& chi) const {
  if (chi.orders != tgt) throw input_error("GroupHom::pullback: character lives on wrong group");
  GChar out;
  out.orders = src;
  out.e.assign(src.size(), 0);
  // chi(f(gen_j)) = zeta_M^{sum_i e_i m_ij (M/D_i)} with M = lcm of target
  // orders; rewrite as a d_j-th root of unity
  long M = 1;
  for (long t : tgt) M = std::lcm(M, t);
  for (long s : src) M = std::lcm(M, s);
  for (size_t j = 0; j < src.size(); ++j) {
    __int128 t = 0;
    for (size_t i = 0; i < tgt.size(); ++i)
      t += (__int128)lmod(chi.e[i], tgt[i]) * m[i][j] % M * (M / tgt[i]) % M;
    long tj = lmod((long)(t % M), M);
    // zeta_M^{tj} has order dividing d_j, so tj is divisible by M / d_j
    long w = M / src[j];
    if (tj % w != 0) throw math_error("pullback: exponent not divisible (hom invalid?)");
    out.e[j] = lmod(tj / w, src[j]);
  }
  return out;
}

bool GroupHom::operator<(const GroupHom& o) const {
  if (src != o.src) return src < o.src;
  if (tgt != o.tgt) return tgt < o.tgt;
  return m < o.m;
}

GroupHom subset_embedding(const AbGroup& g, long n, const std::vector<int>& in_subset) {
  if ((long)in_subset.size() != n) throw input_error("subset_embedding: flag list length != n");
  size_t k = g.ngens();
  AbGroup gn = g.power(n);
  std::vector<std::vector<long>> mat(k * n, std::vector<long>(k, 0));
  for (long b = 0; b < n; ++b)
    if (in_subset[b])
      for (size_t i = 0; i < k; ++i) mat[b * k + i][i] = 1;
  return GroupHom::make(g, gn, std::move(mat));
}

GroupHom perm_hom(const AbGroup& g, long n, const std::vector<size_t>& perm) {
  // x -> y with y_{perm[b]} = x_b (blocks of size ngens)
  if ((long)perm.size() != n) throw input_error("perm_hom: permutation length != n");
  size_t k = g.ngens();
  AbGroup gn = g.power(n);
  std::vector<std::vector<long>> mat(k * n, std::vector<long>(k * n, 0));
  std::vector<bool> seen(n, false);
  for (long b = 0; b < n; ++b) {
    if (perm[b] >= (size_t)n || seen[perm[b]]) throw input_error("perm_hom: not a permutation");
    seen[perm[b]] = true;
    for (size_t i = 0; i < k; ++i) mat[perm[b] * k + i][b * k + i] = 1;
  }
  return GroupHom::make(gn, gn, std::move(mat));
}

GroupHom identity_hom(const AbGroup& g, long n) {
  std::vector<size_t> id(n);
  for (long i = 0; i < n; ++i) id[i] = i;
  return perm_hom(g, n, id);
}

// ---------------------------------------------------------------------------

SigmaElt SigmaElt::zero(const AbGroup& g, long r, long s) {
  SigmaElt z;
  z.src = g.power(r).factors();
  z.tgt = g.power(s).factors();
  return z;
}

void SigmaElt::add_term(const GroupHom& h, const Int& c) {
  if (h.src != src || h.tgt != tgt) throw input_error("SigmaElt::add_term: wrong shape");
  terms.push_back({h, c});
}

void SigmaElt::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<GroupHom, Int>> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
    else out.push_back(t);
  }
  terms.clear();
  for (auto& t : out)
    if (t.second != 0) terms.push_back(std::move(t));
}

SigmaElt SigmaElt::compose(const SigmaElt& inner) const {
  SigmaElt out;
  out.src = inner.src;
  out.tgt = tgt;
  // terms with mismatched shapes multiply to zero
  if (inner.tgt != src) return out;
  for (auto& [h2, c2] : terms)
    for (auto& [h1, c1] : inner.terms)
      out.terms.push_back({h2.compose_after(h1), c1 * c2});
  out.canonicalize();
  return out;
}

SigmaElt s_elt(const AbGroup& g, long n) {
  if (n < 1) throw input_error("s_elt: n >= 1");
  SigmaElt z = SigmaElt::zero(g, 1, n);
  z.src = g.factors();
  z.tgt = g.power(n).factors();
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<int> flags(n, 0);
    int popcount = 0;
    for (long b = 0; b < n; ++b)
      if (mask & (1L << b)) { flags[b] = 1; ++popcount; }
    Int sign = ((n - popcount) % 2 == 0) ? 1 : -1;
    z.add_term(subset_embedding(g, n, flags), sign);
  }
  z.canonicalize();
  return z;
}

SigmaElt z_perm(const AbGroup& g, long n, const std::vector<size_t>& perm) {
  SigmaElt z = SigmaElt::zero(g, n, n);
  z.add_term(perm_hom(g, n, perm), 1);
  z.add_term(identity_hom(g, n), -1);
  z.canonicalize();
  return z;
}

SigmaElt z_cocycle(const AbGroup& g, long n) {
  if (n < 2) throw input_error("z_cocycle: n >= 2");
  size_t k = g.ngens();
  AbGroup gn = g.power(n), gn1 = g.power(n + 1);
  auto block_matrix = [&](const std::vector<std::vector<long>>& blocks) {
    // blocks: for each of the n+1 target slots, a source slot index or -1 for
    // zero; a slot may appear twice (duplication)
    std::vector<std::vector<long>> mat(k * (n + 1), std::vector<long>(k * n, 0));
    for (size_t t = 0; t < blocks.size(); ++t)
      for (long srcslot : blocks[t])
        if (srcslot >= 0)
          for (size_t i = 0; i < k; ++i) mat[t * k + i][(size_t)srcslot * k + i] = 1;
    return GroupHom::make(gn, gn1, std::move(mat));
  };
  // target slot lists; entry {j} means that coordinate receives source slot j
  auto mk = [&](std::vector<std::vector<long>> blocks) { return block_matrix(blocks); };

  std::vector<std::vector<long>> b0, b1, b2, b3;
  // merge12: (g1, g1, g2, ..., gn)
  b0.push_back({0}); b0.push_back({0});
  for (long j = 1; j < n; ++j) b0.push_back({j});
  // drop1: (0, g1, ..., gn)
  b1.push_back({-1});
  for (long j = 0; j < n; ++j) b1.push_back({j});
  // drop3: (g1, g2, 0, g3, ..., gn)
  b2.push_back({0}); b2.push_back({1}); b2.push_back({-1});
  for (long j = 2; j < n; ++j) b2.push_back({j});
  // merge23: (g1, g2, g2, g3, ..., gn)
  b3.push_back({0}); b3.push_back({1}); b3.push_back({1});
  for (long j = 2; j < n; ++j) b3.push_back({j});

  SigmaElt z = SigmaElt::zero(g, n, n + 1);
  z.add_term(mk(b0), 1);
  z.add_term(mk(b1), -1);
  z.add_term(mk(b2), 1);
  z.add_term(mk(b3), -1);
  z.canonicalize();
  return z;
}

}  // namespace ctk
