#include "semiarc/field.hpp"

#include <charconv>
#include <stdexcept>

namespace semiarc {

namespace {

using Poly = std::vector<int>;  // low-order coefficient first

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

Poly digits_of(int index, int p, int h) {
  Poly d(h);
  for (int i = 0; i < h; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

int index_of(const Poly& d, int p) {
  int r = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) r = r * p + d[i];
  return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

bool divides(const Poly& f, const Poly& m, int p) {
  Poly r = poly_mod(m, f, p);
  for (int c : r)
    if (c != 0) return false;
  return true;
}

bool is_irreducible(const Poly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  // Try every monic divisor of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    const int count = ipow(p, d);
    for (int lower = 0; lower < count; ++lower) {
      Poly f = digits_of(lower, p, d);
      f.push_back(1);
      if (divides(f, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec default_field_spec(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    int h = 0;
    int r = 1;
    while (r < q) {
      r *= p;
      ++h;
    }
    if (r != q) continue;
    FieldSpec spec{p, h, {}};
    switch (q) {
      case 4: spec.modulus = {1, 1, 1}; break;
      case 8: spec.modulus = {1, 0, 1, 1}; break;
      case 9: spec.modulus = {2, 1, 1}; break;
      case 16: spec.modulus = {1, 1, 0, 0, 1}; break;
      default:
        if (h != 1) throw std::invalid_argument("no default modulus for q=" + std::to_string(q));
        spec.modulus = {0, 1};
    }
    return spec;
  }
  throw std::invalid_argument("q=" + std::to_string(q) + " is not a prime power");
}

FieldElement::FieldElement(const Field& field, Elem index) : field_(&field), index_(index) {
  if (index >= field.q()) throw std::out_of_range("field element index out of range");
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field() && !a.field().same_as(b.field()))
    throw std::invalid_argument("field elements belong to different fields");
  return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.add(a.index(), b.index()));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.sub(a.index(), b.index()));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.mul(a.index(), b.index()));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.div(a.index(), b.index()));
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field().same_as(b.field()) && a.index() == b.index();
}

Field::Field(const FieldSpec& spec) : spec_(spec), p_(spec.p), h_(spec.h) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic " + std::to_string(p_) + " is not prime");
  if (h_ < 1) throw std::invalid_argument("extension degree must be positive");
  q_ = ipow(p_, h_);
  if (q_ > kMaxOrder) throw std::invalid_argument("field order " + std::to_string(q_) + " exceeds 16");
  if (spec_.modulus.empty()) spec_.modulus = default_field_spec(q_).modulus;
  const Poly& m = spec_.modulus;
  if (static_cast<int>(m.size()) != h_ + 1)
    throw std::invalid_argument("modulus degree does not match extension degree " + std::to_string(h_));
  for (int c : m)
    if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficient outside GF(p)");
  if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible(m, p_)) throw std::invalid_argument("modulus is reducible over GF(p)");

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (int a = 0; a < q_; ++a) {
    const Poly da = digits_of(a, p_, h_);
    for (int b = 0; b < q_; ++b) {
      const Poly db = digits_of(b, p_, h_);
      Poly sum(h_);
      for (int i = 0; i < h_; ++i) sum[i] = (da[i] + db[i]) % p_;
      Poly prod(2 * h_ - 1, 0);
      for (int i = 0; i < h_; ++i)
        for (int j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      if (h_ > 1) prod = poly_mod(prod, m, p_);
      add_[a * q_ + b] = static_cast<Elem>(index_of(sum, p_));
      mul_[a * q_ + b] = static_cast<Elem>(index_of(prod, p_));
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }

  auto order_of = [&](Elem g) {
    int k = 1;
    Elem x = g;
    while (x != 1) {
      x = mul(x, g);
      ++k;
    }
    return k;
  };
  if (h_ > 1) {
    gen_ = static_cast<Elem>(p_);  // residue class of x
    if (order_of(gen_) != q_ - 1)
      throw std::invalid_argument("modulus root does not generate the multiplicative group");
  } else if (q_ > 2) {
    gen_ = 2;
    while (order_of(gen_) != q_ - 1) ++gen_;
  }
  Elem x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul(x, gen_);
  }

  frob_.resize(h_);
  for (int k = 0; k < h_; ++k) {
    for (int a = 0; a < q_; ++a) frob_[k][a] = power(static_cast<Elem>(a), ipow(p_, k));
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

Elem Field::power(Elem a, long long e) const noexcept {
  Elem r = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int Field::log(Elem a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return log_[a];
}

Elem Field::exp(long long k) const noexcept {
  const long long n = q_ - 1;
  return exp_[static_cast<int>(((k % n) + n) % n)];
}

std::string Field::format(Elem a) const {
  if (h_ == 1 || a <= 1) return std::to_string(a);
  return "w^" + std::to_string(log_[a]);
}

Elem Field::parse(std::string_view text) const {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("bad field element '" + std::string(text) + "' in GF(" + std::to_string(q_) +
                                 "): " + why);
  };
  if (text.empty()) throw bad("empty");
  if (text[0] == 'w' || text[0] == 'W') {
    if (h_ == 1) throw bad("prime field elements are written as integers 0.." + std::to_string(p_ - 1));
    long long k = 1;
    if (text.size() > 1) {
      if (text[1] != '^' || text.size() < 3) throw bad("expected w^k");
      auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), k);
      if (ec != std::errc() || ptr != text.data() + text.size()) throw bad("expected integer exponent");
    }
    if (k < 0 || k >= q_ - 1)
      throw bad("exponent must lie in [0, " + std::to_string(q_ - 2) + "] (w^" + std::to_string(q_ - 1) + " = 1)");
    return exp(k);
  }
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw bad("not an integer or w^k");
  if (v < 0 || v >= p_) throw bad("integer must lie in [0, " + std::to_string(p_ - 1) + "]");
  return static_cast<Elem>(v);  // prime subfield: index v encodes the constant v
}

FieldElement Field::element(int index) const {
  if (index < 0 || index >= q_) throw std::out_of_range("field element index out of range");
  return FieldElement(*this, static_cast<Elem>(index));
}

}  // namespace semiarc
