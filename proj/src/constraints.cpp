#include "semiarc/constraints.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace semiarc {

SizeBounds size_bounds(int q) {
  // Largest n with 4(n-1) - q <= q sqrt(8q-7), decided in integers.
  const long long Q = q;
  long long n = q;
  while (true) {
    const long long lhs = 4 * n - Q;  // 4((n+1)-1) - q
    if (lhs > 0 && lhs * lhs > Q * Q * (8 * Q - 7)) break;
    ++n;
  }
  return {q, static_cast<int>(n)};
}

FeasibilityVerdict size_feasibility(int q, int s) {
  const SizeBounds b = size_bounds(q);
  if (s < b.lower || s > b.upper)
    throw std::invalid_argument("size " + std::to_string(s) + " outside [" + std::to_string(b.lower) + ", " +
                                std::to_string(b.upper) + "] for q=" + std::to_string(q));
  FeasibilityVerdict v;
  if (s == q + 1) {
    if ((q + 1) % 3 != 0) {
      v.feasible = false;
      v.reason = "q+1 = " + std::to_string(q + 1) + " is not divisible by 3";
    } else {
      v.reason = "q+1 divisible by 3";
    }
  } else if (s == q + 2) {
    for (int beta = 0; 3 * beta <= q + 2 && !v.witness; ++beta) {
      if (beta == 1 || (q + 2 - 3 * beta) % 4 != 0) continue;
      v.witness = std::make_pair((q + 2 - 3 * beta) / 4, beta);
    }
    if (v.witness) {
      v.reason = "q+2 = 4*" + std::to_string(v.witness->first) + " + 3*" + std::to_string(v.witness->second);
    } else {
      v.feasible = false;
      v.reason = "q+2 = " + std::to_string(q + 2) + " is not 4a+3b with a, b >= 0, b != 1";
    }
  } else {
    v.reason = "no divisibility condition";
  }
  return v;
}

int max_secant_length(int q, int t) {
  if (2 * t < q - 1) return q - t;
  return q + 1 - t;
}

bool union_rule_applies(int q, int t) {
  return 2 * t < q - 1 && std::gcd(q, t) == 1 && std::gcd(q - 1, t - 1) == 1;
}

std::vector<SecantDistribution> enumerate_secant_distributions(int q, int s, int t, int max_len,
                                                               const std::map<int, int>& caps) {
  std::vector<SecantDistribution> out;
  if (max_len < 0) return out;
  const long long n = static_cast<long long>(q) * q + q + 1;
  const long long x1 = static_cast<long long>(t) * s;
  auto cap = [&](int i, long long fallback) {
    auto it = caps.find(i);
    return it == caps.end() ? fallback : std::min<long long>(fallback, it->second);
  };
  if (max_len < 1) {
    if (s == 0 && cap(0, n) >= n) out.push_back({static_cast<int>(n)});
    return out;
  }
  if (x1 > cap(1, n)) return out;
  // After fixing x_1 and x_k for k >= 4, the identities leave
  //   x_0 + x_2 + x_3 = N, 2 x_2 + 3 x_3 = R1, 2 x_2 + 6 x_3 = R2.
  const long long n0 = n - x1;
  const long long r1 = static_cast<long long>(q + 1) * s - x1;
  const long long r2 = static_cast<long long>(s) * (s - 1);
  std::vector<long long> x(max_len + 1, 0);
  x[1] = x1;
  const int m = union_rule_applies(q, t) && q - t <= max_len ? q - t : -1;
  auto packed = [&](long long v) { return m * v - v * (v - 1) / 2 <= s; };

  std::function<void(int, long long, long long, long long)> rec = [&](int i, long long rn, long long rr1,
                                                                        long long rr2) {
    if (rn < 0 || rr1 < 0 || rr2 < 0) return;
    if (i >= 4) {
      const long long lim = std::min({cap(i, rn), rr1 / i, rr2 / (static_cast<long long>(i) * (i - 1))});
      for (long long v = 0; v <= lim; ++v) {
        x[i] = v;
        rec(i - 1, rn - v, rr1 - i * v, rr2 - static_cast<long long>(i) * (i - 1) * v);
      }
      x[i] = 0;
      return;
    }
    // Solve for x_3, x_2, x_0 within the lengths still allowed.
    long long x3 = 0, x2 = 0;
    if (max_len >= 3) {
      if ((rr2 - rr1) % 3 != 0) return;
      x3 = (rr2 - rr1) / 3;
      if (x3 < 0 || (rr1 - 3 * x3) % 2 != 0) return;
      x2 = (rr1 - 3 * x3) / 2;
    } else if (max_len == 2) {
      if (rr1 % 2 != 0 || rr2 != rr1) return;
      x2 = rr1 / 2;
    } else {
      if (rr1 != 0 || rr2 != 0) return;
    }
    const long long x0 = rn - x2 - x3;
    if (x2 < 0 || x0 < 0) return;
    if (x0 > cap(0, n) || x2 > cap(2, n) || x3 > cap(3, n)) return;
    x[0] = x0;
    if (max_len >= 2) x[2] = x2;
    if (max_len >= 3) x[3] = x3;
    if (m >= 0 && !packed(x[m])) return;
    SecantDistribution d(x.begin(), x.end());
    out.push_back(std::move(d));
  };
  rec(max_len, n0, r1, r2);
  std::sort(out.begin(), out.end());
  return out;
}

SizeQCensus expected_size_q_census(int q, int h) {
  if (q % 2 == 0) throw std::invalid_argument("the size-q census formula is stated for odd q");
  const std::uint64_t Q = q;
  return {Q * Q * (Q * Q + Q + 1) * (Q - 1) * (Q + 1), static_cast<std::uint64_t>(h) * Q * (Q - 1)};
}

}  // namespace semiarc
