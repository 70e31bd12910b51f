#include "cubics/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "cubics/poly.hpp"

namespace cubics {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Digit arithmetic helpers on the integer encoding sum c_i p^i.
std::vector<u32> decode(u64 v, u64 p, u32 h) {
  std::vector<u32> d(h);
  for (u32 i = 0; i < h; ++i) {
    d[i] = static_cast<u32>(v % p);
    v /= p;
  }
  return d;
}

u64 encode_digits(const std::vector<u32>& d, u64 p) {
  u64 v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

Field::Field(u64 p, u32 h) : p_(p), h_(h) {
  if (!is_prime_u64(p)) fail(Error::Code::invalid_argument, "p must be prime");
  if (h < 1) fail(Error::Code::invalid_argument, "extension degree must be >= 1");
  u128 q = 1;
  for (u32 i = 0; i < h; ++i) {
    q *= p;
    if (q > (u128(1) << 40)) fail(Error::Code::invalid_argument, "field too large");
  }
  q_ = static_cast<u64>(q);

  if (h_ == 1) {
    modulus_ = {0, 1};  // placeholder T - 0: elements are residues mod p
  } else {
    // smallest monic irreducible, coefficients compared low degree first;
    // iterate candidates with c0 outermost via reversed digit decoding
    const Field& fp = field(p, 1);
    PolyOps<Field> po(fp);
    bool found = false;
    for (u64 m = 0; m < q_ && !found; ++m) {
      std::vector<u32> rev = decode(m, p, h);
      std::vector<u32> c(h + 1);
      for (u32 i = 0; i < h; ++i) c[i] = rev[h - 1 - i];
      c[h] = 1;
      PolyOps<Field>::P f(c.begin(), c.end());
      if (po.irreducible(f)) {
        modulus_ = c;
        found = true;
      }
    }
    if (!found) fail(Error::Code::internal, "no irreducible modulus found");
  }

  q1_factors_ = prime_factors(q_ - 1);
  if (q_ <= kTableLimit) build_tables();
  find_generator();
}

std::vector<u32> Field::digits(Elem a) const { return decode(a, p_, h_); }

Field::Elem Field::from_digits(const std::vector<u32>& d) const {
  if (d.size() != h_) fail(Error::Code::invalid_argument, "bad digit count");
  for (u32 c : d)
    if (c >= p_) fail(Error::Code::invalid_argument, "digit out of range");
  return static_cast<Elem>(encode_digits(d, p_));
}

Field::Elem Field::from_uint(u64 v) const {
  if (v >= q_) fail(Error::Code::invalid_argument, "element encoding out of range");
  return static_cast<Elem>(v);
}

Field::Elem Field::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (tabled_) {
    u64 alo = a % plo_, ahi = a / plo_;
    u64 blo = b % plo_, bhi = b / plo_;
    return static_cast<Elem>(addlo_[alo * plo_ + blo] +
                             plo_ * addhi_[ahi * (q_ / plo_) + bhi]);
  }
  auto da = decode(a, p_, h_), db = decode(b, p_, h_);
  for (u32 i = 0; i < h_; ++i) da[i] = static_cast<u32>((da[i] + db[i]) % p_);
  return static_cast<Elem>(encode_digits(da, p_));
}

Field::Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  auto d = decode(a, p_, h_);
  for (u32 i = 0; i < h_; ++i) d[i] = d[i] ? static_cast<u32>(p_ - d[i]) : 0;
  return static_cast<Elem>(encode_digits(d, p_));
}

Field::Elem Field::sub(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  return add(a, neg(b));
}

std::vector<u32> Field::mul_generic(Elem a, Elem b) const {
  auto da = decode(a, p_, h_), db = decode(b, p_, h_);
  std::vector<u64> prod(2 * h_ - 1, 0);
  for (u32 i = 0; i < h_; ++i) {
    if (!da[i]) continue;
    for (u32 j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + u64(da[i]) * db[j]) % p_;
  }
  // reduce by the monic modulus
  for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(h_); --i) {
    u64 c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (u32 j = 0; j < h_; ++j) {
      u64 s = (u64(modulus_[j]) * c) % p_;
      prod[i - h_ + j] = (prod[i - h_ + j] + p_ - s) % p_;
    }
  }
  std::vector<u32> out(h_);
  for (u32 i = 0; i < h_; ++i) out[i] = static_cast<u32>(prod[i]);
  return out;
}

Field::Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (tabled_) return exp_[u64(log_[a]) + log_[b]];
  return static_cast<Elem>(encode_digits(mul_generic(a, b), p_));
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) fail(Error::Code::domain, "division by zero");
  if (tabled_) return exp_[(q_ - 1) - log_[a]];
  // extended Euclid on polynomials over F_p
  const Field& fp = field(p_, 1);
  PolyOps<Field> po(fp);
  auto da = decode(a, p_, h_);
  PolyOps<Field>::P ap(da.begin(), da.end());
  po.trim(ap);
  PolyOps<Field>::P m(modulus_.begin(), modulus_.end());
  auto ext = po.ext_gcd(ap, m);
  if (PolyOps<Field>::deg(ext.g) != 0) fail(Error::Code::internal, "modulus not irreducible");
  auto s = po.scale(ext.s, fp.inv(ext.g[0]));
  s.resize(h_, 0);
  std::vector<u32> d(s.begin(), s.end());
  return static_cast<Elem>(encode_digits(d, p_));
}

Field::Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Field::Elem Field::pow(Elem a, u128 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (tabled_) {
    u64 r = static_cast<u64>(e % (q_ - 1));
    return exp_[(u64(log_[a]) * (r % (q_ - 1))) % (q_ - 1)];
  }
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::Elem Field::trace(Elem a) const {
  Elem s = a, f = a;
  for (u32 i = 1; i < h_; ++i) {
    f = pow(f, p_);
    s = add(s, f);
  }
  if (s >= p_) fail(Error::Code::internal, "trace left the prime subfield");
  return s;
}

void Field::build_tables() {
  // find a generator by order testing, then lay out exp/log
  auto order_ok = [&](Elem g) {
    for (u64 r : q1_factors_) {
      // compute g^((q-1)/r) without tables
      u64 e = (q_ - 1) / r;
      Elem acc = 1, base = g;
      while (e) {
        if (e & 1) acc = static_cast<Elem>(encode_digits(mul_generic(acc, base), p_));
        base = static_cast<Elem>(encode_digits(mul_generic(base, base), p_));
        e >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  };
  Elem g = 0;
  for (u64 c = 1; c < q_; ++c) {
    if (order_ok(static_cast<Elem>(c))) {
      g = static_cast<Elem>(c);
      break;
    }
  }
  generator_ = g;

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (u64 i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    exp_[i + (q_ - 1)] = cur;
    log_[cur] = static_cast<u32>(i);
    cur = static_cast<Elem>(encode_digits(mul_generic(cur, g), p_));
  }
  if (cur != 1) fail(Error::Code::internal, "generator order mismatch");

  if (p_ != 2) {
    u32 hl = (h_ + 1) / 2;
    hl_ = hl;
    plo_ = 1;
    for (u32 i = 0; i < hl; ++i) plo_ *= p_;
    u64 phi = q_ / plo_;
    addlo_.assign(plo_ * plo_, 0);
    for (u64 a = 0; a < plo_; ++a)
      for (u64 b = 0; b < plo_; ++b) {
        auto da = decode(a, p_, hl), db = decode(b, p_, hl);
        for (u32 i = 0; i < hl; ++i) da[i] = static_cast<u32>((da[i] + db[i]) % p_);
        addlo_[a * plo_ + b] = static_cast<u32>(encode_digits(da, p_));
      }
    u32 hh = h_ - hl;
    addhi_.assign(phi * phi, 0);
    for (u64 a = 0; a < phi; ++a)
      for (u64 b = 0; b < phi; ++b) {
        auto da = decode(a, p_, hh), db = decode(b, p_, hh);
        for (u32 i = 0; i < hh; ++i) da[i] = static_cast<u32>((da[i] + db[i]) % p_);
        addhi_[a * phi + b] = static_cast<u32>(encode_digits(da, p_));
      }
  }
  tabled_ = true;
}

void Field::find_generator() {
  if (tabled_) return;  // already found while building tables
  auto pw = [&](Elem a, u64 e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (u64 c = 1; c < q_; ++c) {
    bool ok = true;
    for (u64 r : q1_factors_)
      if (pw(static_cast<Elem>(c), (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = static_cast<Elem>(c);
      return;
    }
  }
  fail(Error::Code::internal, "no generator found");
}

u64 Field::element_order(Elem a) const {
  if (a == 0) fail(Error::Code::domain, "order of zero");
  u64 ord = q_ - 1;
  for (u64 r : q1_factors_)
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  return ord;
}

bool Field::is_square(Elem a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

bool Field::is_cube(Elem a) const {
  if (a == 0) return true;
  if (q_ % 3 != 1) return true;
  return pow(a, (q_ - 1) / 3) == 1;
}

std::vector<Field::Elem> Field::cube_roots_of_unity() const {
  if (q_ % 3 != 1) return {1};
  Elem w = pow(generator_, (q_ - 1) / 3);
  Elem w2 = mul(w, w);
  std::vector<Elem> out{1, w, w2};
  std::sort(out.begin(), out.end());
  return out;
}

Field::Elem Field::omega() const {
  if (q_ % 3 != 1) fail(Error::Code::domain, "no nontrivial cube root of unity");
  return cube_roots_of_unity()[1];
}

Field::Elem Field::parse(const std::string& s) const {
  if (s.empty()) fail(Error::Code::parse, "empty element");
  u64 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') fail(Error::Code::parse, "bad element encoding: " + s);
    v = v * 10 + static_cast<u64>(c - '0');
    if (v >= q_) fail(Error::Code::parse, "element encoding out of range: " + s);
  }
  return static_cast<Elem>(v);
}

const Field& field(u64 p, u32 h) {
  static std::mutex mu;
  static std::map<std::pair<u64, u32>, std::unique_ptr<Field>>* reg =
      new std::map<std::pair<u64, u32>, std::unique_ptr<Field>>();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, h);
  auto it = reg->find(key);
  if (it == reg->end())
    it = reg->emplace(key, std::make_unique<Field>(p, h)).first;
  return *it->second;
}

Embedding::Embedding(const Field& from, const Field& to) : from_(&from), to_(&to) {
  if (from.p() != to.p() || to.h() % from.h() != 0)
    fail(Error::Code::invalid_argument, "no subfield embedding");
  if (from.h() == 1) {
    gen_image_ = 0;  // unused: prime-field elements map to multiples of 1
    return;
  }
  PolyOps<Field> po(to);
  PolyOps<Field>::P m;
  for (u32 c : from.modulus()) m.push_back(to.from_uint(c % to.p()));
  po.trim(m);
  auto rts = po.roots(m);
  if (rts.empty()) fail(Error::Code::internal, "modulus has no root in extension");
  gen_image_ = rts.front();
}

Field::Elem Embedding::map(Field::Elem a) const {
  if (from_->h() == 1) return to_->from_uint(a);
  auto d = from_->digits(a);
  Field::Elem r = 0;
  for (size_t i = d.size(); i-- > 0;)
    r = to_->add(to_->mul(r, gen_image_), to_->from_uint(d[i]));
  return r;
}

const Embedding& embedding(const Field& from, const Field& to) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>>* reg =
      new std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>>();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(&from, &to);
  auto it = reg->find(key);
  if (it == reg->end())
    it = reg->emplace(key, std::make_unique<Embedding>(from, to)).first;
  return *it->second;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  if (!a.field || a.field != b.field)
    fail(Error::Code::invalid_argument, "mismatched field specs");
  const Field& f = *a.field;
  switch (op) {
    case ArithOp::add: return {f, f.add(a.v, b.v)};
    case ArithOp::sub: return {f, f.sub(a.v, b.v)};
    case ArithOp::mul: return {f, f.mul(a.v, b.v)};
    case ArithOp::div: return {f, f.div(a.v, b.v)};
  }
  fail(Error::Code::internal, "bad op");
}

UnitGroupData unit_group_data(const Field& f) {
  UnitGroupData d;
  d.primitive_element = f.primitive_element();
  d.is_square.resize(f.size());
  d.is_cube.resize(f.size());
  for (u64 v = 0; v < f.size(); ++v) {
    d.is_square[v] = f.is_square(static_cast<Field::Elem>(v));
    d.is_cube[v] = f.is_cube(static_cast<Field::Elem>(v));
  }
  d.cube_roots_of_unity = f.cube_roots_of_unity();
  return d;
}

}  // namespace cubics
