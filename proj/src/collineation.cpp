#include "semiarc/collineation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "semiarc/explicit_group.hpp"
#include "semiarc/kernels.hpp"

namespace semiarc {

namespace {

using Mat = std::array<Elem, 9>;

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix2(std::uint64_t a, std::uint64_t b) { return mix(a * 0x100000001b3ULL ^ mix(b)); }

struct Arith {
  const Elem* add;
  const Elem* mul;
  int q;
  explicit Arith(const Field& f) : add(f.add_table()), mul(f.mul_table()), q(f.q()) {}
  Elem a(Elem x, Elem y) const noexcept { return add[x * q + y]; }
  Elem m(Elem x, Elem y) const noexcept { return mul[x * q + y]; }
  Elem dot(Elem x0, Elem x1, Elem x2, Elem y0, Elem y1, Elem y2) const noexcept {
    return a(a(m(x0, y0), m(x1, y1)), m(x2, y2));
  }
};

inline int packed_image(const Arith& ar, const Mat& m, const Coords& v) {
  const int q = ar.q;
  const Elem x = ar.dot(m[0], m[1], m[2], v[0], v[1], v[2]);
  const Elem y = ar.dot(m[3], m[4], m[5], v[0], v[1], v[2]);
  const Elem z = ar.dot(m[6], m[7], m[8], v[0], v[1], v[2]);
  return (x * q + y) * q + z;
}

Elem det3(const Field& f, const Mat& m) {
  auto mul = [&](Elem a, Elem b) { return f.mul(a, b); };
  auto sub = [&](Elem a, Elem b) { return f.sub(a, b); };
  const Elem t0 = mul(m[0], sub(mul(m[4], m[8]), mul(m[5], m[7])));
  const Elem t1 = mul(m[1], sub(mul(m[3], m[8]), mul(m[5], m[6])));
  const Elem t2 = mul(m[2], sub(mul(m[3], m[7]), mul(m[4], m[6])));
  return f.add(f.sub(t0, t1), t2);
}

Mat adjugate(const Field& f, const Mat& m) {
  auto cof = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(m[r0 * 3 + c0], m[r1 * 3 + c1]), f.mul(m[r0 * 3 + c1], m[r1 * 3 + c0]));
  };
  Mat adj;
  // adj[i][j] = cofactor(j, i)
  adj[0] = cof(1, 2, 1, 2);
  adj[1] = f.neg(cof(0, 2, 1, 2));
  adj[2] = cof(0, 1, 1, 2);
  adj[3] = f.neg(cof(1, 2, 0, 2));
  adj[4] = cof(0, 2, 0, 2);
  adj[5] = f.neg(cof(0, 1, 0, 2));
  adj[6] = cof(1, 2, 0, 1);
  adj[7] = f.neg(cof(0, 2, 0, 1));
  adj[8] = cof(0, 1, 0, 1);
  return adj;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i * 3 + k], b[k * 3 + j]));
      r[i * 3 + j] = s;
    }
  return r;
}

Mat frob_mat(const Field& f, Mat m, int k) {
  if (k == 0) return m;
  for (Elem& e : m) e = f.frobenius(e, k);
  return m;
}

Coords frob_coords(const Field& f, Coords c, int k) {
  if (k == 0) return c;
  for (Elem& e : c) e = f.frobenius(e, k);
  return c;
}

int frob_count(const Plane& plane, GroupKind kind) { return kind == GroupKind::kPgammal ? plane.field().h() : 1; }

// Frame map from coordinates already frobenius-twisted; nullopt when the four
// points are not in general position.
std::optional<Mat> frame_matrix(const Field& f, const Coords& a, const Coords& b, const Coords& c, const Coords& d) {
  const Mat cols{a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]};
  if (det3(f, cols) == 0) return std::nullopt;
  const Mat k = adjugate(f, cols);
  Elem lambda[3];
  for (int i = 0; i < 3; ++i) {
    lambda[i] = f.add(f.add(f.mul(k[i * 3], d[0]), f.mul(k[i * 3 + 1], d[1])), f.mul(k[i * 3 + 2], d[2]));
    if (lambda[i] == 0) return std::nullopt;
  }
  Mat m;
  for (int i = 0; i < 3; ++i) {
    const Elem s = f.inv_unchecked(lambda[i]);
    for (int j = 0; j < 3; ++j) m[i * 3 + j] = f.mul(s, k[i * 3 + j]);
  }
  return m;
}

// Point off every listed line, scanning in plane order.
PointId point_off(const Plane& plane, std::initializer_list<LineId> lines) {
  for (int p = 0; p < plane.size(); ++p) {
    bool ok = true;
    for (LineId l : lines) ok = ok && !plane.incident(static_cast<PointId>(p), l);
    if (ok) return static_cast<PointId>(p);
  }
  throw std::logic_error("no point off the given lines");
}

// Point on line l other than the two given ones.
PointId other_on(const Plane& plane, LineId l, PointId x, PointId y) {
  for (PointId p : plane.points_on(l))
    if (p != x && p != y) return p;
  throw std::logic_error("line has too few points");
}

class Labeler {
 public:
  Labeler(const Plane& plane, const PointSet& s, GroupKind kind)
      : plane_(plane), f_(plane.field()), ar_(plane.field()), kind_(kind), set_(s), members_(s.members()) {
    counts_.resize(plane.size());
    kernels::line_counts(plane.line_masks(), s, counts_);
  }

  Labeling run() {
    const int s = static_cast<int>(members_.size());
    int max_count = 0;
    for (std::uint8_t c : counts_) max_count = std::max<int>(max_count, c);
    if (s <= 2) return small();
    if (max_count == s) return line_based(false);
    if (s == 3) return triangle();
    if (max_count == s - 1) return line_based(true);
    return general();
  }

 private:
  Collineation make(const Mat& m, int k) const { return normalized(f_, Collineation{m, k}); }

  Collineation frame(PointId a, PointId b, PointId c, PointId d, int k) const {
    auto m = frame_matrix(f_, plane_.point(a), plane_.point(b), plane_.point(c), plane_.point(d));
    if (!m) throw std::logic_error("frame points not in general position");
    return make(*m, k);
  }

  PointId twist(PointId p, int k) const { return plane_.point_id(frob_coords(f_, plane_.point(p), k)); }

  PointSet image(const Mat& m, int k) const {
    PointSet out;
    for (PointId p : members_) {
      const Coords v = frob_coords(f_, plane_.point(p), k);
      out.insert(plane_.point_id_packed(packed_image(ar_, m, v)));
    }
    return out;
  }

  void consider(Labeling& lab, const Collineation& g, const PointSet& img) const {
    if (lab.optimal.empty() || lex_less(img, lab.canonical)) {
      lab.canonical = img;
      lab.optimal.clear();
      lab.optimal.push_back(g);
    } else if (img == lab.canonical) {
      lab.optimal.push_back(g);
    }
  }

  Labeling small() {
    Labeling lab;
    lab.degenerate = true;
    const std::uint64_t order = group_order(plane_.q(), kind_);
    const std::uint64_t n = plane_.size();
    if (members_.empty()) {
      lab.optimal.push_back(Collineation{});
      lab.stab_order = order;
      return lab;
    }
    if (members_.size() == 1) {
      const PointId p = members_[0];
      const PointId a = p == 0 ? 1 : 0;
      const LineId pa = plane_.join_unchecked(p, a);
      const PointId b = point_off(plane_, {pa});
      const PointId d = point_off(plane_, {pa, plane_.join_unchecked(p, b), plane_.join_unchecked(a, b)});
      const Collineation g = frame(a, b, p, d, 0);
      lab.optimal.push_back(g);
      lab.canonical = apply(plane_, g, set_);
      lab.stab_order = order / n;
      return lab;
    }
    // Two points: send them to (0:0:1) and (0:1:0) in both orders.
    const PointId x = point_off(plane_, {plane_.join_unchecked(members_[0], members_[1])});
    for (int swap = 0; swap < 2; ++swap) {
      const PointId p = members_[swap], r = members_[1 - swap];
      const PointId d = point_off(plane_, {plane_.join_unchecked(p, r), plane_.join_unchecked(p, x),
                                           plane_.join_unchecked(r, x)});
      const Collineation g = frame(x, r, p, d, 0);
      consider(lab, g, apply(plane_, g, set_));
    }
    lab.stab_order = 2 * order / (n * (n - 1));
    return lab;
  }

  Labeling triangle() {
    Labeling lab;
    lab.degenerate = true;
    const PointId d = point_off(plane_, {plane_.join_unchecked(members_[0], members_[1]),
                                         plane_.join_unchecked(members_[0], members_[2]),
                                         plane_.join_unchecked(members_[1], members_[2])});
    std::array<PointId, 3> perm{members_[0], members_[1], members_[2]};
    do {
      const Collineation g = frame(perm[0], perm[1], perm[2], d, 0);
      consider(lab, g, apply(plane_, g, set_));
    } while (std::next_permutation(perm.begin(), perm.end()));
    const std::uint64_t q1 = plane_.q() - 1;
    lab.stab_order = 6 * q1 * q1 * frob_count(plane_, kind_);
    return lab;
  }

  // All members on one line L, or all but one point `apex`. Ordered triples
  // of points on L go to (1:0:0), (0:1:0), (1:1:0); the apex goes to (0:0:1).
  Labeling line_based(bool with_apex) {
    Labeling lab;
    lab.degenerate = true;
    LineId line = 0;
    for (int l = 0; l < plane_.size(); ++l)
      if (counts_[l] >= static_cast<int>(members_.size()) - (with_apex ? 1 : 0)) {
        line = static_cast<LineId>(l);
        break;
      }
    std::vector<PointId> on_line;
    int apex = -1;
    for (PointId p : members_) {
      if (plane_.incident(p, line))
        on_line.push_back(p);
      else
        apex = p;
    }
    const int hk = frob_count(plane_, kind_);
    for (int k = 0; k < hk; ++k) {
      const LineId tl = apply_to_line(plane_, Collineation{Mat{1, 0, 0, 0, 1, 0, 0, 0, 1}, k}, line);
      std::vector<PointId> tw;
      for (PointId p : on_line) tw.push_back(twist(p, k));
      const PointId x = with_apex ? twist(static_cast<PointId>(apex), k) : point_off(plane_, {tl});
      for (PointId a : tw)
        for (PointId b : tw) {
          if (b == a) continue;
          for (PointId c : tw) {
            if (c == a || c == b) continue;
            const PointId d = other_on(plane_, plane_.join_unchecked(c, x), c, x);
            auto m = frame_matrix(f_, plane_.point(a), plane_.point(b), plane_.point(x), plane_.point(d));
            const Collineation g = make(*m, k);
            consider(lab, g, image(*m, k));
          }
        }
    }
    const std::uint64_t q = plane_.q();
    const std::uint64_t kernel = with_apex ? q - 1 : q * q * (q - 1);
    lab.stab_order = lab.optimal.size() * kernel;
    return lab;
  }

  void refine() {
    const int n = plane_.size();
    inv_.assign(256, 0);
    for (PointId p : members_) {
      std::uint64_t h = 0;
      for (LineId l : plane_.lines_through(p)) h += mix(counts_[l]);
      inv_[p] = h;
    }
    std::vector<std::uint64_t> acc(n);
    for (int round = 0; round < 2; ++round) {
      std::fill(acc.begin(), acc.end(), 0);
      for (PointId p : members_)
        for (LineId l : plane_.lines_through(p))
          if (counts_[l] >= 2) acc[l] += mix(inv_[p]);
      std::vector<std::uint64_t> next(256, 0);
      for (PointId p : members_) {
        std::uint64_t h = 0;
        for (LineId l : plane_.lines_through(p))
          if (counts_[l] >= 2) h += mix2(counts_[l], acc[l]);
        next[p] = mix2(inv_[p], h);
      }
      inv_.swap(next);
    }
  }

  void tuples(std::vector<PointId>& prefix, std::vector<std::array<PointId, 4>>& out) const {
    const std::size_t level = prefix.size();
    std::vector<std::pair<std::uint64_t, PointId>> keyed;
    for (PointId p : members_) {
      bool ok = true;
      for (std::size_t i = 0; i < level && ok; ++i) ok = p != prefix[i];
      for (std::size_t i = 0; i < level && ok; ++i)
        for (std::size_t j = i + 1; j < level && ok; ++j) ok = !plane_.collinear(prefix[i], prefix[j], p);
      if (!ok) continue;
      std::uint64_t key = inv_[p];
      for (std::size_t i = 0; i < level; ++i) key = mix2(key, counts_[plane_.join_unchecked(prefix[i], p)]);
      keyed.emplace_back(key, p);
    }
    std::sort(keyed.begin(), keyed.end());
    struct Group {
      std::size_t begin, end;
      std::uint64_t key;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < keyed.size();) {
      std::size_t j = i;
      while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
      groups.push_back({i, j, keyed[i].first});
      i = j;
    }
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
      const std::size_t sa = a.end - a.begin, sb = b.end - b.begin;
      return sa != sb ? sa < sb : a.key < b.key;
    });
    for (const Group& g : groups) {
      const std::size_t before = out.size();
      for (std::size_t i = g.begin; i < g.end; ++i) {
        prefix.push_back(keyed[i].second);
        if (level == 3)
          out.push_back({prefix[0], prefix[1], prefix[2], prefix[3]});
        else
          tuples(prefix, out);
        prefix.pop_back();
      }
      if (out.size() > before) return;
    }
  }

  Labeling general() {
    refine();
    std::vector<std::array<PointId, 4>> family;
    std::vector<PointId> prefix;
    tuples(prefix, family);
    if (family.empty()) throw std::logic_error("no quadrangle in a non-degenerate set");
    Labeling lab;
    const int hk = frob_count(plane_, kind_);
    for (int k = 0; k < hk; ++k) {
      for (const auto& t : family) {
        auto m = frame_matrix(f_, frob_coords(f_, plane_.point(t[0]), k), frob_coords(f_, plane_.point(t[1]), k),
                              frob_coords(f_, plane_.point(t[2]), k), frob_coords(f_, plane_.point(t[3]), k));
        const PointSet img = image(*m, k);
        if (!lab.optimal.empty() && lex_less(lab.canonical, img)) continue;
        consider(lab, make(*m, k), img);
      }
    }
    lab.stab_order = lab.optimal.size();
    return lab;
  }

  const Plane& plane_;
  const Field& f_;
  Arith ar_;
  GroupKind kind_;
  PointSet set_;
  std::vector<PointId> members_;
  std::vector<std::uint8_t> counts_;
  std::vector<std::uint64_t> inv_;
};

int permutation_order(const std::vector<PointId>& perm) {
  std::vector<char> seen(perm.size(), 0);
  long long order = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, static_cast<long long>(len));
  }
  return static_cast<int>(order);
}

}  // namespace

const char* group_kind_name(GroupKind kind) { return kind == GroupKind::kPgl ? "pgl" : "pgammal"; }

GroupKind parse_group_kind(std::string_view text) {
  if (text == "pgl" || text == "PGL") return GroupKind::kPgl;
  if (text == "pgammal" || text == "PGammaL" || text == "pgaml") return GroupKind::kPgammal;
  throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected pgl or pgammal)");
}

Collineation normalized(const Field& f, Collineation g) {
  for (Elem e : g.m) {
    if (e == 0) continue;
    const Elem s = f.inv_unchecked(e);
    for (Elem& x : g.m) x = f.mul(x, s);
    break;
  }
  return g;
}

Collineation make_collineation(const Field& f, const std::array<Elem, 9>& m, int frob) {
  for (Elem e : m)
    if (e >= f.q()) throw std::invalid_argument("matrix entry outside the field");
  if (frob < 0 || frob >= f.h()) throw std::invalid_argument("automorphism exponent outside [0, h)");
  if (det3(f, m) == 0) throw std::invalid_argument("singular matrix");
  return normalized(f, Collineation{m, frob});
}

PointId apply(const Plane& plane, const Collineation& g, PointId p) {
  const Arith ar(plane.field());
  return plane.point_id_packed(packed_image(ar, g.m, frob_coords(plane.field(), plane.point(p), g.frob)));
}

PointSet apply(const Plane& plane, const Collineation& g, const PointSet& s) {
  const Arith ar(plane.field());
  PointSet out;
  s.for_each([&](PointId p) {
    out.insert(plane.point_id_packed(packed_image(ar, g.m, frob_coords(plane.field(), plane.point(p), g.frob))));
  });
  return out;
}

LineId apply_to_line(const Plane& plane, const Collineation& g, LineId l) {
  auto pts = plane.points_on(l);
  return plane.join_unchecked(apply(plane, g, pts[0]), apply(plane, g, pts[1]));
}

Collineation compose(const Field& f, const Collineation& a, const Collineation& b) {
  Collineation r;
  r.m = mat_mul(f, a.m, frob_mat(f, b.m, a.frob));
  r.frob = (a.frob + b.frob) % f.h();
  return normalized(f, r);
}

Collineation inverse(const Field& f, const Collineation& g) {
  const int k = (f.h() - g.frob) % f.h();
  Collineation r;
  r.m = frob_mat(f, adjugate(f, g.m), k);
  r.frob = k;
  return normalized(f, r);
}

int element_order(const Plane& plane, const Collineation& g) {
  std::vector<PointId> perm(plane.size());
  for (int p = 0; p < plane.size(); ++p) perm[p] = apply(plane, g, static_cast<PointId>(p));
  return permutation_order(perm);
}

Collineation random_collineation(const Plane& plane, GroupKind kind, std::mt19937_64& rng) {
  const Field& f = plane.field();
  std::uniform_int_distribution<int> elem(0, f.q() - 1);
  Mat m;
  do {
    for (Elem& e : m) e = static_cast<Elem>(elem(rng));
  } while (det3(f, m) == 0);
  int k = 0;
  if (kind == GroupKind::kPgammal) k = std::uniform_int_distribution<int>(0, f.h() - 1)(rng);
  return normalized(f, Collineation{m, k});
}

std::uint64_t group_order(int q, GroupKind kind) {
  const FieldSpec spec = default_field_spec(q);
  const std::uint64_t Q = q;
  const std::uint64_t pgl = (Q * Q * Q - 1) * (Q * Q * Q - Q) * (Q * Q * Q - Q * Q) / (Q - 1);
  return kind == GroupKind::kPgammal ? pgl * spec.h : pgl;
}

std::optional<Collineation> frame_map(const Plane& plane, PointId a, PointId b, PointId c, PointId d) {
  auto m = frame_matrix(plane.field(), plane.point(a), plane.point(b), plane.point(c), plane.point(d));
  if (!m) return std::nullopt;
  return normalized(plane.field(), Collineation{*m, 0});
}

Labeling canonical_labeling(const Plane& plane, const PointSet& s, GroupKind kind) {
  return Labeler(plane, s, kind).run();
}

PointSet canonical_form(const Plane& plane, const PointSet& s, GroupKind kind) {
  return canonical_labeling(plane, s, kind).canonical;
}

std::optional<Collineation> are_equivalent(const Plane& plane, const PointSet& a, const PointSet& b, GroupKind kind) {
  if (a.size() != b.size()) return std::nullopt;
  const Labeling la = canonical_labeling(plane, a, kind);
  const Labeling lb = canonical_labeling(plane, b, kind);
  if (!(la.canonical == lb.canonical)) return std::nullopt;
  const Field& f = plane.field();
  return compose(f, inverse(f, lb.optimal.front()), la.optimal.front());
}

std::vector<Collineation> stabilizer_elements(const Plane& plane, const PointSet& s, GroupKind kind) {
  const Labeling lab = canonical_labeling(plane, s, kind);
  if (lab.degenerate) return {};
  const Field& f = plane.field();
  const Collineation g0inv = inverse(f, lab.optimal.front());
  std::vector<Collineation> out;
  out.reserve(lab.optimal.size());
  for (const Collineation& g : lab.optimal) out.push_back(compose(f, g0inv, g));
  return out;
}

namespace {
constexpr std::uint64_t kExplicitGroupLimit = 400000;
}

StabilizerReport stabilizer(const Plane& plane, const PointSet& s, GroupKind kind) {
  StabilizerReport rep;
  const Labeling lab = canonical_labeling(plane, s, kind);
  rep.order = lab.stab_order;
  if (!lab.degenerate) {
    const Field& f = plane.field();
    const Collineation g0inv = inverse(f, lab.optimal.front());
    for (const Collineation& g : lab.optimal) ++rep.profile[element_order(plane, compose(f, g0inv, g))];
    rep.profile_complete = true;
  } else if (group_order(plane.q(), kind) <= kExplicitGroupLimit) {
    const ExplicitGroup& group = ExplicitGroup::get(plane, kind);
    for (std::size_t i = 0; i < group.size(); ++i)
      if (group.maps_onto(i, s, s)) ++rep.profile[group.element_order(i)];
    rep.profile_complete = true;
  }
  if (rep.profile_complete) rep.name = recognize_group(rep.order, rep.profile);
  return rep;
}

}  // namespace semiarc
