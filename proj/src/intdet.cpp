#include "wtower/intdet.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wtower/errors.hpp"

namespace wtower {

namespace {

IntVec negated(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

std::string pair_key(int i, int j) {
  return std::to_string(i) + std::to_string(j);
}

std::string triple_key(int i, int j, int k) {
  return pair_key(i, j) + "," + std::to_string(k);
}

}  // namespace

std::optional<IntVec> IntersectionData::pair_vec(int i, int j) const {
  auto it = pair_vecs.find(pair_key(i, j));
  if (it != pair_vecs.end()) return it->second;
  it = pair_vecs.find(pair_key(j, i));
  if (it != pair_vecs.end()) return negated(it->second);
  return std::nullopt;
}

std::optional<IntVec> IntersectionData::triple_vec(int i, int j, int k) const {
  auto it = triple_vecs.find(triple_key(i, j, k));
  if (it != triple_vecs.end()) return it->second;
  it = triple_vecs.find(triple_key(j, i, k));
  if (it != triple_vecs.end()) return negated(it->second);
  return std::nullopt;
}

IntersectionData parse_intersection_data(std::istream& in) {
  IntersectionData data;
  bool saw_r = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string body = line.substr(start);
    size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, (int)start + 1, "expected 'name = values'");
    std::string name = body.substr(0, eq);
    std::string values = body.substr(eq + 1);
    // Trim the name.
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
      name.pop_back();
    auto parse_ints = [&](const std::string& s) {
      IntVec v;
      std::istringstream is(s);
      int64_t x;
      while (is >> x) v.push_back(x);
      if (!is.eof() && is.fail()) {
        is.clear();
        std::string bad;
        is >> bad;
        throw ParseError(lineno, (int)start + 1, "bad integer '" + bad + "'");
      }
      return v;
    };
    if (name == "r") {
      IntVec v = parse_ints(values);
      if (v.size() != 1 || v[0] < 0)
        throw ParseError(lineno, (int)start + 1, "r must be one integer >= 0");
      data.r = (int)v[0];
      saw_r = true;
    } else if (name == "Q") {
      data.Q.clear();
      std::istringstream rows(values);
      std::string rowtext;
      while (std::getline(rows, rowtext, ';')) data.Q.push_back(parse_ints(rowtext));
    } else if (name.size() > 1 && name[0] == 'a') {
      std::string pattern = name.substr(1);
      size_t p = pattern.find_first_not_of(" \t");
      if (p == std::string::npos)
        throw ParseError(lineno, (int)start + 1, "bad pattern in '" + name + "'");
      pattern = pattern.substr(p);
      IntVec v = parse_ints(values);
      if (pattern.find(',') != std::string::npos) {
        if (pattern.size() != 4 || pattern[2] != ',' ||
            !isdigit((unsigned char)pattern[0]) ||
            !isdigit((unsigned char)pattern[1]) ||
            !isdigit((unsigned char)pattern[3]))
          throw ParseError(lineno, (int)start + 1,
                           "triple pattern must look like 'a 12,3'");
        data.triple_vecs[pattern] = v;
      } else {
        if (pattern.size() != 2 || !isdigit((unsigned char)pattern[0]) ||
            !isdigit((unsigned char)pattern[1]))
          throw ParseError(lineno, (int)start + 1,
                           "pair pattern must look like 'a 12'");
        data.pair_vecs[pattern] = v;
      }
    } else {
      throw ParseError(lineno, (int)start + 1, "unknown entry '" + name + "'");
    }
  }
  if (!saw_r) throw DomainError("MissingPattern", "data file does not set r");
  if (data.Q.empty()) data.Q.assign(data.r, IntVec(data.r, 0));
  if ((int)data.Q.size() != data.r)
    throw DomainError("MissingPattern", "Q must be r x r");
  for (const auto& row : data.Q)
    if ((int)row.size() != data.r)
      throw DomainError("MissingPattern", "Q must be r x r");
  for (const auto& [k, v] : data.pair_vecs)
    if ((int)v.size() != data.r)
      throw DomainError("MissingPattern", "vector 'a " + k + "' must have length r");
  for (const auto& [k, v] : data.triple_vecs)
    if ((int)v.size() != data.r)
      throw DomainError("MissingPattern", "vector 'a " + k + "' must have length r");
  return data;
}

LatticeSubgroup make_subgroup(int dim, const IntMat& generators) {
  LatticeSubgroup s;
  s.dim = dim;
  s.basis = row_hnf(generators);
  s.factors = invariant_factors(s.basis, dim);
  return s;
}

TripleResult int1_triple(const IntersectionData& data) {
  int64_t d = 0;
  for (auto [i, j] : {std::pair{1, 2}, {3, 1}, {2, 3}}) {
    if (auto v = data.pair_vec(i, j))
      for (int64_t x : *v) d = gcd64(d, x);
  }
  return TripleResult{d};
}

LatticeSubgroup int1_quadruple(const IntersectionData& data) {
  // Column blocks in the order (x12, x13, x41, x23, x24, x34); rows in the
  // basis { <(1,2),3>, <(1,2),4>, <(1,3),4>, <(2,3),4> }.
  struct Block {
    int i, j;
    int k_row[2];      // which k feeds which basis row
    int rows[2];
    int signs[2];
  };
  const Block blocks[6] = {
      {1, 2, {3, 4}, {0, 1}, {1, 1}},   // a_{12,3}, a_{12,4}
      {1, 3, {2, 4}, {0, 2}, {-1, 1}},  // -a_{13,2}, a_{13,4}
      {4, 1, {2, 3}, {1, 2}, {1, 1}},   // a_{41,2}, a_{41,3}
      {2, 3, {1, 4}, {0, 3}, {1, 1}},   // a_{23,1}, a_{23,4}
      {2, 4, {1, 3}, {1, 3}, {1, -1}},  // a_{24,1}, -a_{24,3}
      {3, 4, {1, 2}, {2, 3}, {1, 1}},   // a_{34,1}, a_{34,2}
  };
  IntMat generators;
  for (const Block& b : blocks) {
    std::array<IntVec, 2> vecs;
    for (int t = 0; t < 2; ++t) {
      auto v = data.triple_vec(b.i, b.j, b.k_row[t]);
      if (!v)
        throw DomainError("MissingPattern",
                          "missing a " + std::to_string(b.i) + std::to_string(b.j) +
                              "," + std::to_string(b.k_row[t]));
      vecs[t] = *v;
    }
    for (int alpha = 0; alpha < data.r; ++alpha) {
      IntVec col(4, 0);
      for (int t = 0; t < 2; ++t) col[b.rows[t]] = b.signs[t] * vecs[t][alpha];
      generators.push_back(col);
    }
  }
  return make_subgroup(4, generators);
}

namespace {

IntVec pair_or_zero(const IntersectionData& data, int i, int j) {
  if (auto v = data.pair_vec(i, j)) return *v;
  return IntVec(data.r, 0);
}

}  // namespace

LatticeSubgroup int2_linear(const IntersectionData& data) {
  // Columns (x12, x34, x13, x24, x14, x23); rows in the basis {t1, t2}:
  //   ( a12 a34  0   0  a14 a23 )
  //   (  0   0  a13 a24 a14 a23 )
  struct Block {
    int i, j;
    int t1, t2;  // multiplicity in each coordinate
  };
  const Block blocks[6] = {{1, 2, 1, 0}, {3, 4, 1, 0}, {1, 3, 0, 1},
                           {2, 4, 0, 1}, {1, 4, 1, 1}, {2, 3, 1, 1}};
  IntMat generators;
  for (const Block& b : blocks) {
    IntVec v = pair_or_zero(data, b.i, b.j);
    for (int alpha = 0; alpha < data.r; ++alpha)
      generators.push_back(IntVec{b.t1 * v[alpha], b.t2 * v[alpha]});
  }
  return make_subgroup(2, generators);
}

namespace {

// One pair-choice of the quadratic map: value(x, y) = x.a + y.b + x Q y^T
// over x, y in [-B, B]^r. Returns value -> lexicographically least witness.
struct PairMap {
  std::map<int64_t, std::pair<IntVec, IntVec>> values;
};

int64_t dot(const IntVec& a, const IntVec& b) {
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int64_t quad_form(const IntMat& Q, const IntVec& x, const IntVec& y) {
  int64_t s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) s += x[i] * Q[i][j] * y[j];
  }
  return s;
}

// Unranks index -> vector in [-B,B]^r, lexicographic from most significant.
IntVec unrank(uint64_t idx, int r, int64_t B) {
  IntVec v(r);
  uint64_t base = (uint64_t)(2 * B + 1);
  for (int i = r - 1; i >= 0; --i) {
    v[i] = (int64_t)(idx % base) - B;
    idx /= base;
  }
  return v;
}

PairMap enumerate_pair(const IntersectionData& data, const IntVec& a,
                       const IntVec& b, int64_t B) {
  int r = data.r;
  uint64_t side = 1;
  for (int i = 0; i < r; ++i) side *= (uint64_t)(2 * B + 1);
  PairMap out;

#ifdef _OPENMP
  int nthreads = omp_get_max_threads();
#else
  int nthreads = 1;
#endif
  std::vector<std::map<int64_t, std::pair<IntVec, IntVec>>> local(nthreads);

#pragma omp parallel for schedule(static)
  for (int64_t xi = 0; xi < (int64_t)side; ++xi) {
#ifdef _OPENMP
    auto& mine = local[omp_get_thread_num()];
#else
    auto& mine = local[0];
#endif
    IntVec x = unrank((uint64_t)xi, r, B);
    int64_t xa = dot(x, a);
    for (uint64_t yi = 0; yi < side; ++yi) {
      IntVec y = unrank(yi, r, B);
      int64_t v = xa + dot(y, b) + quad_form(data.Q, x, y);
      auto it = mine.find(v);
      if (it == mine.end()) {
        mine.emplace(v, std::make_pair(x, y));
      } else {
        auto cand = std::make_pair(x, y);
        if (cand < it->second) it->second = cand;
      }
    }
  }
  for (auto& m : local)
    for (auto& [v, w] : m) {
      auto it = out.values.find(v);
      if (it == out.values.end())
        out.values.emplace(v, w);
      else if (w < it->second)
        it->second = w;
    }
  return out;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int64_t norm1(const IntVec& v) {
  int64_t s = 0;
  for (int64_t x : v) s += std::abs(x);
  return s;
}

// Value range bound of one pair-choice map over the box [-B,B]^r.
int64_t pair_range(const IntersectionData& data, int i, int j, int k, int l,
                   int64_t B) {
  int64_t m = B * (norm1(pair_or_zero(data, i, j)) + norm1(pair_or_zero(data, k, l)));
  for (const auto& row : data.Q) m += B * B * norm1(row);
  return m;
}

struct PairMaps {
  PairMap p12_34, p13_24, p14_23;
  int64_t effective_bound;
  bool exhaustive;
};

PairMaps build_pair_maps(const IntersectionData& data, int64_t bound,
                         uint64_t budget) {
  if (bound < 1) throw DomainError("ContextMismatch", "box bound must be >= 1");
  int r = data.r;
  int64_t B = bound;
  bool exhaustive = true;
  auto cost = [&](int64_t b) {
    // Pair enumeration plus the bitmap sumset (word operations).
    uint64_t enumeration =
        3 * ipow((uint64_t)(2 * b + 1), 2 * r) * (uint64_t)(r + 1);
    uint64_t m1 = (uint64_t)pair_range(data, 1, 2, 3, 4, b);
    uint64_t m2 = (uint64_t)pair_range(data, 1, 3, 2, 4, b);
    uint64_t m3 = (uint64_t)pair_range(data, 1, 4, 2, 3, b);
    uint64_t rows = 2 * (m1 + m3) + 1;
    uint64_t width = (2 * (m2 + m3) + 1) / 64 + 1;
    uint64_t sumset = (2 * m3 + 1) * (2 * m1 + 1) * width;
    return enumeration + sumset + rows * width;
  };
  while (B > 1 && cost(B) > budget) {
    --B;
    exhaustive = false;
  }
  if (cost(B) > budget)
    throw DomainError("BudgetExceeded",
                      "enumeration exceeds the budget even at bound 1");
  PairMaps maps{
      enumerate_pair(data, pair_or_zero(data, 1, 2), pair_or_zero(data, 3, 4), B),
      enumerate_pair(data, pair_or_zero(data, 1, 3), pair_or_zero(data, 2, 4), B),
      enumerate_pair(data, pair_or_zero(data, 1, 4), pair_or_zero(data, 2, 3), B),
      B, exhaustive};
  return maps;
}

// Dense bit rows over a shifted integer range.
struct BitGrid {
  int64_t off0, off1;  // index = value + off
  int64_t n0, n1;
  size_t words;
  std::vector<uint64_t> bits;  // row-major, n0 rows of `words` words

  BitGrid(int64_t m0, int64_t m1)
      : off0(m0), off1(m1), n0(2 * m0 + 1), n1(2 * m1 + 1),
        words((size_t)(n1 / 64 + 1)), bits((size_t)n0 * words, 0) {}

  void set(int64_t v0, int64_t v1) {
    size_t row = (size_t)(v0 + off0);
    size_t col = (size_t)(v1 + off1);
    bits[row * words + col / 64] |= (uint64_t(1) << (col % 64));
  }
  bool get(int64_t v0, int64_t v1) const {
    if (v0 < -off0 || v0 > n0 - 1 - off0 || v1 < -off1 || v1 > n1 - 1 - off1)
      return false;
    size_t row = (size_t)(v0 + off0);
    size_t col = (size_t)(v1 + off1);
    return bits[row * words + col / 64] & (uint64_t(1) << (col % 64));
  }
  // OR a source bit row (over values with offset src_off) into row v0,
  // shifting source values by `delta`.
  void or_shifted_row(int64_t v0, const std::vector<uint64_t>& src,
                      int64_t src_off, int64_t delta) {
    size_t row = (size_t)(v0 + off0);
    int64_t shift = delta + off1 - src_off;  // target bit = src bit + shift
    uint64_t* dst = &bits[row * words];
    int64_t q = shift >= 0 ? shift / 64 : -((-shift + 63) / 64);
    int s = (int)(shift - 64 * q);  // in [0, 64)
    for (size_t w = 0; w < src.size(); ++w) {
      if (src[w] == 0) continue;
      uint64_t lo = s ? (src[w] << s) : src[w];
      uint64_t hi = s ? (src[w] >> (64 - s)) : 0;
      int64_t tw = (int64_t)w + q;
      if (tw >= 0 && tw < (int64_t)words) dst[tw] |= lo;
      if (hi && tw + 1 >= 0 && tw + 1 < (int64_t)words) dst[tw + 1] |= hi;
    }
  }
};

}  // namespace

Point2 int2_evaluate(const IntersectionData& data,
                     const std::array<IntVec, 6>& x) {
  // Block order (x12, x34, x13, x24, x14, x23).
  const IntVec a12 = pair_or_zero(data, 1, 2), a34 = pair_or_zero(data, 3, 4),
               a13 = pair_or_zero(data, 1, 3), a24 = pair_or_zero(data, 2, 4),
               a14 = pair_or_zero(data, 1, 4), a23 = pair_or_zero(data, 2, 3);
  int64_t lin1 = dot(x[0], a12) + dot(x[1], a34) + dot(x[4], a14) + dot(x[5], a23);
  int64_t lin2 = dot(x[2], a13) + dot(x[3], a24) + dot(x[4], a14) + dot(x[5], a23);
  int64_t cross_12_34 = quad_form(data.Q, x[0], x[1]);
  int64_t cross_13_24 = quad_form(data.Q, x[2], x[3]);
  int64_t cross_14_23 = quad_form(data.Q, x[4], x[5]);
  return Point2{lin1 + cross_12_34 + cross_14_23, lin2 + cross_13_24 + cross_14_23};
}

QuadImageReport int2_quadratic_image(const IntersectionData& data, int64_t bound,
                                     uint64_t budget) {
  PairMaps maps = build_pair_maps(data, bound, budget);
  QuadImageReport rep;
  rep.bound = bound;
  rep.effective_bound = maps.effective_bound;
  rep.exhaustive = maps.exhaustive;
  int64_t B = maps.effective_bound;

  // Sumset via bit rows: value = v1*(1,0) + v2*(0,1) + v3*(1,1).
  int64_t m1 = pair_range(data, 1, 2, 3, 4, B);
  int64_t m2 = pair_range(data, 1, 3, 2, 4, B);
  int64_t m3 = pair_range(data, 1, 4, 2, 3, B);
  BitGrid grid(m1 + m3, m2 + m3);
  // One bit row for the attained v2 values.
  int64_t v2_off = m2;
  std::vector<uint64_t> v2bits((size_t)(2 * m2 + 1) / 64 + 1, 0);
  for (const auto& [v, w] : maps.p13_24.values)
    v2bits[(size_t)(v + v2_off) / 64] |= uint64_t(1) << ((size_t)(v + v2_off) % 64);
  for (const auto& [v3, w3] : maps.p14_23.values)
    for (const auto& [v1, w1] : maps.p12_34.values)
      grid.or_shifted_row(v1 + v3, v2bits, v2_off, v3);

  for (int64_t p0 = -grid.off0; p0 < grid.n0 - grid.off0; ++p0)
    for (int64_t p1 = -grid.off1; p1 < grid.n1 - grid.off1; ++p1)
      if (grid.get(p0, p1)) rep.points.push_back(Point2{p0, p1});

  // Projection gcds and the (always re-verified) multiple-of-gcd check.
  int64_t g0 = 0, g1 = 0;
  for (const auto& p : rep.points) {
    g0 = gcd64(g0, p[0]);
    g1 = gcd64(g1, p[1]);
  }
  rep.projection_gcds = {g0, g1};
  for (const auto& p : rep.points) {
    if ((g0 == 0 && p[0] != 0) || (g0 != 0 && p[0] % g0 != 0) ||
        (g1 == 0 && p[1] != 0) || (g1 != 0 && p[1] % g1 != 0)) {
      rep.projection_check_ok = false;
      break;
    }
  }

  // Additive-closure evidence inside the attained bounding box.
  int64_t max0 = 0, max1 = 0;
  for (const auto& p : rep.points) {
    max0 = std::max(max0, std::abs(p[0]));
    max1 = std::max(max1, std::abs(p[1]));
  }
  const uint64_t pair_cap = 200000;
  const size_t violation_cap = 100;
  bool capped = false;
  for (size_t i = 0; i < rep.points.size() && !capped; ++i) {
    for (size_t j = i; j < rep.points.size() && !capped; ++j) {
      if (rep.closure_pairs_checked >= pair_cap ||
          rep.closure_violations.size() >= violation_cap) {
        capped = true;
        break;
      }
      ++rep.closure_pairs_checked;
      Point2 sum{rep.points[i][0] + rep.points[j][0],
                 rep.points[i][1] + rep.points[j][1]};
      if (std::abs(sum[0]) > max0 || std::abs(sum[1]) > max1) continue;
      if (!grid.get(sum[0], sum[1]))
        rep.closure_violations.push_back({rep.points[i][0], rep.points[i][1],
                                          rep.points[j][0], rep.points[j][1]});
    }
  }
  return rep;
}

std::vector<Point2> int2_quadratic_points_reference(const IntersectionData& data,
                                                    int64_t bound) {
  int r = data.r;
  uint64_t side = ipow((uint64_t)(2 * bound + 1), r);
  std::set<Point2> pts;
  std::array<IntVec, 6> x;
  std::array<uint64_t, 6> idx{};
  while (true) {
    for (int b = 0; b < 6; ++b) x[b] = unrank(idx[b], r, bound);
    pts.insert(int2_evaluate(data, x));
    int b = 5;
    while (b >= 0) {
      if (++idx[b] < side) break;
      idx[b] = 0;
      --b;
    }
    if (b < 0) break;
  }
  return std::vector<Point2>(pts.begin(), pts.end());
}

MembershipResult int2_membership(const Point2& target,
                                 const IntersectionData& data, int64_t bound,
                                 uint64_t budget) {
  PairMaps maps = build_pair_maps(data, bound, budget);
  MembershipResult res;
  for (const auto& [v3, w3] : maps.p14_23.values) {
    auto it1 = maps.p12_34.values.find(target[0] - v3);
    if (it1 == maps.p12_34.values.end()) continue;
    auto it2 = maps.p13_24.values.find(target[1] - v3);
    if (it2 == maps.p13_24.values.end()) continue;
    res.attained = true;
    // Witness blocks (x12, x34, x13, x24, x14, x23).
    const auto& [x12, x34] = it1->second;
    const auto& [x13, x24] = it2->second;
    const auto& [x14, x23] = w3;
    for (const IntVec* v : {&x12, &x34, &x13, &x24, &x14, &x23})
      res.witness.insert(res.witness.end(), v->begin(), v->end());
    return res;
  }
  return res;
}

bool gcd_pullapart_check(const std::vector<int64_t>& sphere_pairings) {
  int64_t d = 0;
  for (int64_t v : sphere_pairings) d = gcd64(d, v);
  return d == 1;
}

}  // namespace wtower
