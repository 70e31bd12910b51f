#pragma once

#include <vector>

#include "cubics/poly.hpp"

namespace cubics {

// F' = K[x]/(m) for an irreducible monic m over K.  Elements are coefficient
// vectors of fixed length deg(m), low degree first.  Used for locating and
// verifying points over small extensions without building fresh tabled
// fields; supports nesting (towers) since it satisfies the same field
// concept PolyOps expects.
template <class K>
class QuotField {
 public:
  using BaseElem = typename K::Elem;
  using Elem = std::vector<BaseElem>;

  QuotField(const K& base, std::vector<BaseElem> monic_modulus)
      : base_(&base), po_(base), m_(std::move(monic_modulus)) {
    d_ = static_cast<int>(m_.size()) - 1;
    if (d_ < 1) fail(Error::Code::internal, "quotient modulus must have degree >= 1");
  }

  const K& base() const { return *base_; }
  int ext_degree() const { return d_; }
  const std::vector<BaseElem>& modulus() const { return m_; }

  u64 characteristic() const { return base_->characteristic(); }
  u128 size128() const {
    u128 s = 1;
    for (int i = 0; i < d_; ++i) s *= base_->size128();
    return s;
  }

  Elem zero() const { return Elem(d_, base_->zero()); }
  Elem one() const {
    Elem e(d_, base_->zero());
    e[0] = base_->one();
    return e;
  }
  Elem gen() const {  // the class of x
    Elem e(d_, base_->zero());
    if (d_ == 1)
      e[0] = base_->neg(m_[0]);
    else
      e[1] = base_->one();
    return e;
  }
  Elem lift(BaseElem c) const {
    Elem e(d_, base_->zero());
    e[0] = c;
    return e;
  }

  bool is_zero(const Elem& a) const {
    for (auto& c : a)
      if (!base_->is_zero(c)) return false;
    return true;
  }
  bool eq(const Elem& a, const Elem& b) const {
    for (int i = 0; i < d_; ++i)
      if (!base_->eq(a[i], b[i])) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = base_->add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = base_->sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(d_);
    for (int i = 0; i < d_; ++i) r[i] = base_->neg(a[i]);
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<BaseElem> prod(2 * d_ - 1, base_->zero());
    for (int i = 0; i < d_; ++i) {
      if (base_->is_zero(a[i])) continue;
      for (int j = 0; j < d_; ++j)
        prod[i + j] = base_->add(prod[i + j], base_->mul(a[i], b[j]));
    }
    reduce(prod);
    prod.resize(d_, base_->zero());
    return prod;
  }

  Elem inv(const Elem& a) const {
    if (is_zero(a)) fail(Error::Code::domain, "division by zero in extension field");
    typename PolyOps<K>::P ap(a.begin(), a.end());
    po_.trim(ap);
    auto ext = po_.ext_gcd(ap, typename PolyOps<K>::P(m_.begin(), m_.end()));
    if (PolyOps<K>::deg(ext.g) != 0)
      fail(Error::Code::internal, "quotient modulus not irreducible");
    auto s = po_.scale(ext.s, base_->inv(ext.g[0]));
    s.resize(d_, base_->zero());
    return s;
  }

  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, u128 e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  template <class Rng>
  Elem sample(Rng& rng) const {
    Elem e(d_);
    for (int i = 0; i < d_; ++i) e[i] = base_->sample(rng);
    return e;
  }

 private:
  void reduce(std::vector<BaseElem>& prod) const {
    for (int i = static_cast<int>(prod.size()) - 1; i >= d_; --i) {
      BaseElem c = prod[i];
      if (base_->is_zero(c)) continue;
      prod[i] = base_->zero();
      for (int j = 0; j < d_; ++j)
        prod[i - d_ + j] = base_->sub(prod[i - d_ + j], base_->mul(c, m_[j]));
    }
  }

  const K* base_;
  PolyOps<K> po_;
  std::vector<BaseElem> m_;
  int d_;
};

}  // namespace cubics
