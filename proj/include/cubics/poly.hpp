#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cubics/gf.hpp"

namespace cubics {

// Dense univariate polynomials over any field type K that provides
// Elem, zero/one, add/sub/neg/mul/inv/div, pow, is_zero, eq,
// characteristic(), size128() and sample(rng).  Coefficients are stored
// low degree first and kept trimmed.
template <class K>
struct PolyOps {
  using E = typename K::Elem;
  using P = std::vector<E>;

  const K& k;
  explicit PolyOps(const K& field) : k(field) {}

  static int deg(const P& f) { return static_cast<int>(f.size()) - 1; }
  bool is_zero_poly(const P& f) const { return f.empty(); }

  void trim(P& f) const {
    while (!f.empty() && k.is_zero(f.back())) f.pop_back();
  }

  P zero() const { return {}; }
  P one() const { return {k.one()}; }
  P constant(E c) const {
    P f{c};
    trim(f);
    return f;
  }
  P x() const { return P{k.zero(), k.one()}; }

  E lead(const P& f) const { return f.back(); }

  bool eq_poly(const P& a, const P& b) const {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!k.eq(a[i], b[i])) return false;
    return true;
  }

  P add(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    trim(r);
    return r;
  }

  P sub(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
    trim(r);
    return r;
  }

  P scale(const P& a, E c) const {
    if (k.is_zero(c)) return {};
    P r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
    trim(r);
    return r;
  }

  P mul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, k.zero());
    for (size_t i = 0; i < a.size(); ++i) {
      if (k.is_zero(a[i])) continue;
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  P shift(const P& a, size_t n) const {  // multiply by x^n
    if (a.empty()) return {};
    P r(a.size() + n, k.zero());
    std::copy(a.begin(), a.end(), r.begin() + n);
    return r;
  }

  P monic(const P& a) const {
    if (a.empty()) return a;
    return scale(a, k.inv(a.back()));
  }

  // division with remainder; requires b != 0
  std::pair<P, P> divmod(const P& a, const P& b) const {
    if (b.empty()) fail(Error::Code::internal, "polynomial division by zero");
    P r = a, q;
    const int db = deg(b);
    const E ilb = k.inv(b.back());
    if (deg(r) >= db) q.assign(deg(r) - db + 1, k.zero());
    while (deg(r) >= db) {
      int sh = deg(r) - db;
      E c = k.mul(r.back(), ilb);
      q[sh] = c;
      for (int i = 0; i <= db; ++i)
        r[sh + i] = k.sub(r[sh + i], k.mul(c, b[i]));
      trim(r);
    }
    trim(q);
    return {q, r};
  }

  P mod(const P& a, const P& b) const { return divmod(a, b).second; }
  P quot(const P& a, const P& b) const { return divmod(a, b).first; }

  P gcd(P a, P b) const {
    while (!b.empty()) {
      P r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty()) a = monic(a);
    return a;
  }

  // g = gcd(a,b) = s*a + t*b
  struct Ext {
    P g, s, t;
  };
  Ext ext_gcd(P a, P b) const {
    P s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
    while (!b.empty()) {
      auto [q, r] = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
      P s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      P t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (!a.empty()) {
      E il = k.inv(a.back());
      a = scale(a, il);
      s0 = scale(s0, il);
      t0 = scale(t0, il);
    }
    return {a, s0, t0};
  }

  E eval(const P& f, E x) const {
    E r = k.zero();
    for (size_t i = f.size(); i-- > 0;) r = k.add(k.mul(r, x), f[i]);
    return r;
  }

  P derivative(const P& f) const {
    if (f.size() <= 1) return {};
    P r(f.size() - 1, k.zero());
    for (size_t i = 1; i < f.size(); ++i) {
      E c = k.zero();
      u64 m = i % k.characteristic();
      for (u64 t = 0; t < m; ++t) c = k.add(c, f[i]);
      r[i - 1] = c;
    }
    trim(r);
    return r;
  }

  P mulmod(const P& a, const P& b, const P& m) const {
    return mod(mul(a, b), m);
  }

  P powmod(P a, u128 e, const P& m) const {
    P r = one();
    a = mod(a, m);
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  }

  // x^(q^reps) mod f, by repeated exponentiation with exponent q = |K|
  P frob_power(const P& f, int reps) const {
    P r = mod(x(), f);
    for (int i = 0; i < reps; ++i) r = powmod(r, k.size128(), f);
    return r;
  }

  bool irreducible(const P& f) const {
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Rabin test
    P xq = frob_power(f, d);
    if (!eq_poly(xq, mod(x(), f))) return false;
    for (u64 r : prime_factors(static_cast<u64>(d))) {
      P xr = frob_power(f, d / static_cast<int>(r));
      P g = gcd(sub(xr, mod(x(), f)), f);
      if (deg(g) != 0) return false;
    }
    return true;
  }

  // squarefree decomposition handling inseparable parts (f' == 0 means
  // f = g(x^p); coefficients get p-th roots via c^(q/p))
  std::vector<std::pair<P, int>> squarefree(const P& f0) const {
    std::vector<std::pair<P, int>> out;
    squarefree_rec(monic(f0), 1, out);
    return out;
  }

  void squarefree_rec(P f, int mult, std::vector<std::pair<P, int>>& out) const {
    if (deg(f) <= 0) return;
    P fp = derivative(f);
    if (fp.empty()) {
      // f = g(x^p)
      u64 p = k.characteristic();
      P g((deg(f) / p) + 1, k.zero());
      for (size_t i = 0; i < g.size(); ++i)
        g[i] = k.pow(f[i * p], k.size128() / p);
      squarefree_rec(std::move(g), mult * static_cast<int>(p), out);
      return;
    }
    P c = gcd(f, fp);
    P w = quot(f, c);  // product of squarefree factors of multiplicity !== 0 mod p
    int i = 1;
    while (deg(w) > 0) {
      P y = gcd(w, c);
      P fac = quot(w, y);
      if (deg(fac) > 0) out.push_back({monic(fac), mult * i});
      w = std::move(y);
      c = quot(c, w);
      ++i;
    }
    if (deg(c) > 0) squarefree_rec(std::move(c), mult, out);
  }

  // distinct-degree decomposition of a squarefree monic f
  std::vector<std::pair<P, int>> distinct_degree(P f) const {
    std::vector<std::pair<P, int>> out;
    P h = mod(x(), f);
    int d = 0;
    while (deg(f) > 0 && deg(f) > 2 * d) {
      ++d;
      h = powmod(h, k.size128(), f);
      P g = gcd(sub(h, mod(x(), f)), f);
      if (deg(g) > 0) {
        out.push_back({g, d});
        f = quot(f, g);
        h = mod(h, f);
      }
    }
    if (deg(f) > 0) out.push_back({f, deg(f)});
    return out;
  }

  // Cantor–Zassenhaus split of a monic squarefree product of degree-d
  // irreducibles; deterministic rng sequence keeps runs reproducible
  void equal_degree(const P& f, int d, std::vector<P>& out, SplitMix64& rng) const {
    if (deg(f) == d) {
      out.push_back(f);
      return;
    }
    P g;
    while (true) {
      P a = random_poly(deg(f), rng);
      if (deg(a) <= 0) continue;
      g = gcd(a, f);
      if (deg(g) > 0 && deg(g) < deg(f)) break;
      if (k.characteristic() == 2) {
        // trace map sum a^(2^i), i < m*d where |K| = 2^m
        int m = 0;
        for (u128 s = k.size128(); s > 1; s >>= 1) ++m;
        P t = mod(a, f), acc = t;
        for (int i = 1; i < m * d; ++i) {
          t = mulmod(t, t, f);
          acc = add(acc, t);
        }
        g = gcd(acc, f);
      } else {
        u128 e = 1;
        for (int i = 0; i < d; ++i) e *= k.size128();
        P b = powmod(a, (e - 1) / 2, f);
        g = gcd(sub(b, one()), f);
      }
      if (deg(g) > 0 && deg(g) < deg(f)) break;
    }
    equal_degree(g, d, out, rng);
    equal_degree(quot(f, g), d, out, rng);
  }

  P random_poly(int below_deg, SplitMix64& rng) const {
    P a(below_deg, k.zero());
    for (auto& c : a) c = k.sample(rng);
    trim(a);
    return a;
  }

  // full factorisation: list of (irreducible monic factor, multiplicity)
  std::vector<std::pair<P, int>> factor(const P& f) const {
    std::vector<std::pair<P, int>> out;
    if (deg(f) <= 0) return out;
    SplitMix64 rng(0x5eed0fac70bULL);
    for (auto& [sf, mult] : squarefree(f)) {
      for (auto& [prod, d] : distinct_degree(sf)) {
        std::vector<P> irr;
        equal_degree(prod, d, irr, rng);
        for (auto& g : irr) out.push_back({monic(g), mult});
      }
    }
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
  }

  bool poly_less(const P& a, const P& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
      if (!k.eq(a[i], b[i])) return elem_less(a[i], b[i]);
    }
    return false;
  }

  // encoding order for Field elements, positional lexicographic for
  // extension elements; deterministic either way
  static bool elem_less(const E& a, const E& b) { return a < b; }

  std::vector<E> roots(const P& f) const {
    std::vector<E> out;
    for (auto& [g, mult] : factor(f))
      if (deg(g) == 1) out.push_back(k.neg(g[0]));
    std::sort(out.begin(), out.end(), elem_less);
    return out;
  }

  // number of distinct roots of f lying in K itself
  int count_roots_in_field(const P& f) const {
    if (f.empty()) fail(Error::Code::internal, "root count of zero polynomial");
    P xq = frob_power(monic(f), 1);
    P g = gcd(sub(xq, mod(x(), f)), f);
    return deg(g);
  }
};

}  // namespace cubics
