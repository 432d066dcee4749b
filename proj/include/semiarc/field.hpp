#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semiarc {

// Dense index of an element of GF(p^h): the base-p digits of the index are the
// coefficients c_0, c_1, ... of the polynomial residue. 0 and 1 are the
// additive and multiplicative identities.
using Elem = std::uint8_t;

struct FieldSpec {
  int p = 2;
  int h = 1;
  // Coefficients c_0..c_h of a monic irreducible polynomial over GF(p).
  // Empty selects the documented default for p^h.
  std::vector<int> modulus;
};

// Default moduli: q=4 -> x^2+x+1, q=8 -> x^3+x^2+1, q=9 -> x^2+x+2, prime q -> x.
FieldSpec default_field_spec(int q);

bool is_prime(int n);

class Field;

// Checked element handle for callers outside the hot loops.
class FieldElement {
 public:
  FieldElement(const Field& field, Elem index);

  Elem index() const noexcept { return index_; }
  const Field& field() const noexcept { return *field_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  const Field* field_;
  Elem index_;
};

class Field {
 public:
  static constexpr int kMaxOrder = 16;

  explicit Field(const FieldSpec& spec);
  static Field of_order(int q) { return Field(default_field_spec(q)); }

  int p() const noexcept { return p_; }
  int h() const noexcept { return h_; }
  int q() const noexcept { return q_; }
  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_prime_field() const noexcept { return h_ == 1; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem inv_unchecked(Elem a) const noexcept { return inv_[a]; }

  // a^(p^k) for 0 <= k < h.
  Elem frobenius(Elem a, int k) const noexcept { return frob_[k % h_][a]; }
  Elem power(Elem a, long long e) const noexcept;

  // Generator of the multiplicative group: the modulus root w for extension
  // fields, the least primitive root for prime fields.
  Elem generator() const noexcept { return gen_; }
  int log(Elem a) const;  // discrete log base generator(); throws on 0
  Elem exp(long long k) const noexcept;

  // Prime-field elements print as integers; extension elements as "0", "1",
  // or "w^k".
  std::string format(Elem a) const;
  // Accepts the printed forms plus prime-subfield integers ("2") and "w".
  Elem parse(std::string_view text) const;

  FieldElement element(int index) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && h_ == other.h_ && spec_.modulus == other.spec_.modulus;
  }

  const Elem* add_table() const noexcept { return add_.data(); }
  const Elem* mul_table() const noexcept { return mul_.data(); }

 private:
  FieldSpec spec_;
  int p_;
  int h_;
  int q_;
  Elem gen_ = 1;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::array<Elem, kMaxOrder> neg_{};
  std::array<Elem, kMaxOrder> inv_{};
  std::array<int, kMaxOrder> log_{};
  std::array<Elem, kMaxOrder> exp_{};
  std::vector<std::array<Elem, kMaxOrder>> frob_;
};

}  // namespace semiarc
