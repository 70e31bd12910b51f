#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubics {

class Error : public std::runtime_error {
 public:
  enum class Code { invalid_argument, parse, domain, io, internal };
  Error(Code c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

[[noreturn]] inline void fail(Error::Code c, const std::string& msg) {
  throw Error(c, msg);
}

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// F_{p^h} in a polynomial basis modulo the canonical modulus: the
// lexicographically smallest monic irreducible of degree h over F_p,
// coefficients compared low-degree first.  An element is encoded as the
// integer sum c_i p^i; that integer is also the total order used for every
// "smallest" tie-break and for the text encoding.
//
// Fields up to kTableLimit elements carry exp/log tables (and split addition
// tables for odd p); larger fields fall back to direct polynomial
// arithmetic.  Everything is exact; instances are immutable.
class Field {
 public:
  using Elem = u32;

  static constexpr u64 kTableLimit = u64(1) << 21;

  Field(u64 p, u32 h);  // prefer field(p, h) below: instances are interned

  u64 p() const { return p_; }
  u32 h() const { return h_; }
  u64 size() const { return q_; }
  u128 size128() const { return q_; }
  u64 characteristic() const { return p_; }
  // monic modulus, constant term first, length h+1
  const std::vector<u32>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, u128 e) const;

  Elem from_uint(u64 v) const;
  u64 to_uint(Elem a) const { return a; }
  Elem from_int(long long v) const;  // reduces an integer into the prime subfield
  std::vector<u32> digits(Elem a) const;   // h coefficients, low degree first
  Elem from_digits(const std::vector<u32>& d) const;

  Elem frobenius(Elem a) const { return pow(a, p_); }
  // a + a^p + ... + a^{p^{h-1}}; lands in the prime subfield
  Elem trace(Elem a) const;

  Elem primitive_element() const { return generator_; }
  bool is_square(Elem a) const;
  bool is_cube(Elem a) const;
  // {1} when q !≡ 1 (mod 3), else {1, w, w^2} sorted by encoding
  std::vector<Elem> cube_roots_of_unity() const;
  // smallest nontrivial cube root of unity; error when q !≡ 1 (mod 3)
  Elem omega() const;

  const std::vector<u64>& order_prime_factors() const { return q1_factors_; }
  u64 element_order(Elem a) const;

  template <class Rng>
  Elem sample(Rng& rng) const {
    return static_cast<Elem>(rng() % q_);
  }

  std::string format(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const;

  bool same(const Field& other) const { return this == &other; }

 private:
  u64 p_;
  u32 h_;
  u64 q_;
  std::vector<u32> modulus_;
  Elem generator_ = 0;
  std::vector<u64> q1_factors_;

  bool tabled_ = false;
  std::vector<u32> exp_;  // exp_[i] = g^i for i in [0, 2(q-1))
  std::vector<u32> log_;  // log_[a] for a != 0
  // split addition tables for odd p: an index splits as lo + p^hl * hi
  u32 hl_ = 0;
  u64 plo_ = 1;
  std::vector<u32> addlo_, addhi_;

  std::vector<u32> mul_generic(Elem a, Elem b) const;
  Elem encode(const std::vector<u32>& d) const;
  void build_tables();
  void find_generator();
};

// Interned field instances; references stay valid for the process lifetime.
const Field& field(u64 p, u32 h);

// Subfield embedding F_{p^h} -> F_{p^{hk}}: sends the generator of the small
// field to the smallest root (in the encoding order) of its modulus in the
// big field.
class Embedding {
 public:
  Embedding(const Field& from, const Field& to);
  const Field& from() const { return *from_; }
  const Field& to() const { return *to_; }
  Field::Elem map(Field::Elem a) const;

 private:
  const Field* from_;
  const Field* to_;
  Field::Elem gen_image_;
};

const Embedding& embedding(const Field& from, const Field& to);

// The spec'd element/spec bundle: a field element that knows its field.
struct FieldElement {
  const Field* field = nullptr;
  Field::Elem v = 0;

  FieldElement() = default;
  FieldElement(const Field& f, Field::Elem e) : field(&f), v(e) {}
};

enum class ArithOp { add, sub, mul, div };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

struct UnitGroupData {
  Field::Elem primitive_element;
  std::vector<bool> is_square;  // indexed by encoding; 0 counted as a square
  std::vector<bool> is_cube;
  std::vector<Field::Elem> cube_roots_of_unity;
};

UnitGroupData unit_group_data(const Field& f);

bool is_prime_u64(u64 n);
std::vector<u64> prime_factors(u64 n);

// deterministic splitmix64, used wherever reproducible pseudo-randomness
// is needed (polynomial factorisation, ecdh test mode)
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}
  u64 operator()() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace cubics
