#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

PolyField::PolyField(int p, int h, std::vector<int> modulus) : p_(p), h_(h), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < h; ++i) q_ *= p;
  if (h_ > 1 && static_cast<int>(modulus_.size()) != h_ + 1) throw std::invalid_argument("bad modulus");
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      add_[a * q_ + b] = poly_add(a, b);
      mul_[a * q_ + b] = poly_mul(a, b);
    }
}

PolyField PolyField::of_order(int q) {
  switch (q) {
    case 4: return PolyField(2, 2, {1, 1, 1});
    case 8: return PolyField(2, 3, {1, 0, 1, 1});
    case 9: return PolyField(3, 2, {2, 1, 1});
    case 16: return PolyField(2, 4, {1, 1, 0, 0, 1});
    default: return PolyField(q, 1, {});
  }
}

std::vector<int> PolyField::digits(int a) const {
  std::vector<int> d(h_);
  for (int i = 0; i < h_; ++i, a /= p_) d[i] = a % p_;
  return d;
}

int PolyField::index(const std::vector<int>& d) const {
  int a = 0;
  for (int i = h_ - 1; i >= 0; --i) a = a * p_ + d[i];
  return a;
}

int PolyField::poly_add(int a, int b) const {
  auto x = digits(a), y = digits(b);
  for (int i = 0; i < h_; ++i) x[i] = (x[i] + y[i]) % p_;
  return index(x);
}

int PolyField::neg(int a) const {
  auto x = digits(a);
  for (int& v : x) v = (p_ - v) % p_;
  return index(x);
}

int PolyField::poly_mul(int a, int b) const {
  if (h_ == 1) return a * b % p_;
  auto x = digits(a), y = digits(b);
  std::vector<int> r(2 * h_ - 1, 0);
  for (int i = 0; i < h_; ++i)
    for (int j = 0; j < h_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
  for (int k = 2 * h_ - 2; k >= h_; --k) {
    const int c = r[k];
    if (!c) continue;
    // x^k = x^(k-h) * x^h and x^h = -(c_0 + ... + c_{h-1} x^{h-1})
    for (int i = 0; i < h_; ++i) r[k - h_ + i] = ((r[k - h_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    r[k] = 0;
  }
  r.resize(h_);
  return index(r);
}

int PolyField::inv(int a) const {
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::domain_error("no inverse");
}

int PolyField::pow(int a, long long e) const {
  int r = 1;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int PolyField::frobenius(int a, int k) const {
  long long e = 1;
  for (int i = 0; i < k; ++i) e *= p_;
  return pow(a, e);
}

std::vector<Triple> normalized_triples(const PolyField& f) {
  std::vector<Triple> out;
  const int q = f.q();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const Triple t{a, b, c};
        if (t == Triple{0, 0, 0}) continue;
        if (normalize(f, t) == t) out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Triple normalize(const PolyField& f, Triple v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] == 0) continue;
    const int s = f.inv(v[i]);
    for (int& x : v) x = f.mul(x, s);
    return v;
  }
  throw std::invalid_argument("zero triple");
}

bool incident(const PolyField& f, const Triple& point, const Triple& line) {
  int s = 0;
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(point[i], line[i]));
  return s == 0;
}

int tangent_count(const PolyField& f, const std::vector<Triple>& set, const Triple& p) {
  int n = 0;
  for (const Triple& l : normalized_triples(f)) {
    if (!incident(f, p, l)) continue;
    int k = 0;
    for (const Triple& r : set) k += incident(f, r, l);
    n += k == 1;
  }
  return n;
}

std::vector<int> secant_distribution(const PolyField& f, const std::vector<Triple>& set) {
  std::vector<int> x(f.q() + 2, 0);
  for (const Triple& l : normalized_triples(f)) {
    int k = 0;
    for (const Triple& r : set) k += incident(f, r, l);
    ++x[k];
  }
  return x;
}

Triple apply(const PolyField& f, const Matrix& g, const Triple& p) {
  Triple v{f.frobenius(p[0], g.frob), f.frobenius(p[1], g.frob), f.frobenius(p[2], g.frob)};
  Triple out{};
  for (int r = 0; r < 3; ++r) {
    int s = 0;
    for (int c = 0; c < 3; ++c) s = f.add(s, f.mul(g.m[3 * r + c], v[c]));
    out[r] = s;
  }
  return normalize(f, out);
}

int det(const PolyField& f, const std::array<int, 9>& m) {
  auto term = [&](int a, int b, int c) { return f.mul(m[a], f.mul(m[b], m[c])); };
  int plus = f.add(f.add(term(0, 4, 8), term(1, 5, 6)), term(2, 3, 7));
  int minus = f.add(f.add(term(2, 4, 6), term(0, 5, 7)), term(1, 3, 8));
  return f.add(plus, f.neg(minus));
}

std::vector<Matrix> enumerate_group(const PolyField& f, bool semilinear) {
  std::vector<Matrix> out;
  const int q = f.q();
  std::array<int, 9> m{};
  const long long total = [&] {
    long long t = 1;
    for (int i = 0; i < 9; ++i) t *= q;
    return t;
  }();
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 8; i >= 0; --i, c /= q) m[i] = static_cast<int>(c % q);
    int first = 0;
    while (first < 9 && m[first] == 0) ++first;
    if (first == 9 || m[first] != 1) continue;
    if (det(f, m) == 0) continue;
    for (int k = 0; k < (semilinear ? f.h() : 1); ++k) out.push_back({m, k});
  }
  return out;
}

std::size_t orbit_size(const PolyField& f, const std::vector<Matrix>& group, const std::vector<Triple>& set) {
  const std::vector<Triple> pts = normalized_triples(f);
  const int q = f.q();
  std::vector<int> id(q * q * q, -1);
  for (std::size_t i = 0; i < pts.size(); ++i) id[(pts[i][0] * q + pts[i][1]) * q + pts[i][2]] = static_cast<int>(i);
  std::set<std::array<std::uint64_t, 4>> seen;
  for (const Matrix& g : group) {
    std::array<std::uint64_t, 4> key{};
    for (const Triple& p : set) {
      const Triple r = apply(f, g, p);
      const int i = id[(r[0] * q + r[1]) * q + r[2]];
      key[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    seen.insert(key);
  }
  return seen.size();
}

std::uint64_t stabilizer_order(const PolyField& f, const std::vector<Matrix>& group, const std::vector<Triple>& set) {
  const std::set<Triple> s(set.begin(), set.end());
  std::uint64_t n = 0;
  for (const Matrix& g : group) {
    bool ok = true;
    for (const Triple& p : set)
      if (!s.count(apply(f, g, p))) {
        ok = false;
        break;
      }
    n += ok;
  }
  return n;
}

std::uint64_t pgl_order(std::uint64_t q) { return q * q * q * (q * q * q - 1) * (q * q - 1); }

std::uint64_t size_q_census(std::uint64_t q) { return q * q * (q * q + q + 1) * (q - 1) * (q + 1); }

}  // namespace oracle
