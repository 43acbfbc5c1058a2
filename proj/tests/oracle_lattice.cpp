#include "oracle_lattice.hpp"

#include <cstdlib>
#include <tuple>

namespace wtower::testing {

namespace {

using SparseRow = EchelonLattice::SparseRow;

void prune(SparseRow& r) {
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
}

// r += k * s
void axpy(SparseRow& r, int64_t k, const SparseRow& s) {
  if (k == 0) return;
  for (const auto& [c, v] : s) r[c] += k * v;
  prune(r);
}

SparseRow scaled(const SparseRow& r, int64_t k) {
  SparseRow out;
  if (k == 0) return out;
  for (const auto& [c, v] : r) out[c] = k * v;
  return out;
}

// Extended gcd: g = a*x + b*y with g > 0.
std::tuple<int64_t, int64_t, int64_t> xgcd(int64_t a, int64_t b) {
  int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace

void EchelonLattice::insert(SparseRow row) {
  prune(row);
  while (!row.empty()) {
    int c = row.begin()->first;
    int64_t a = row.begin()->second;
    auto it = basis_.find(c);
    if (it == basis_.end()) {
      if (a < 0) row = scaled(row, -1);
      basis_.emplace(c, std::move(row));
      return;
    }
    int64_t b = it->second.begin()->second;
    if (a % b == 0) {
      axpy(row, -(a / b), it->second);
      continue;
    }
    // Replace the basis row by the gcd combination, keep eliminating the
    // complementary row; the spanned lattice is unchanged.
    auto [g, x, y] = xgcd(b, a);
    SparseRow combo = scaled(it->second, x);
    axpy(combo, y, row);
    SparseRow rest = scaled(it->second, -(a / g));
    axpy(rest, b / g, row);
    it->second = std::move(combo);
    row = std::move(rest);
  }
}

bool EchelonLattice::contains(SparseRow row) const {
  prune(row);
  while (!row.empty()) {
    int c = row.begin()->first;
    int64_t a = row.begin()->second;
    auto it = basis_.find(c);
    if (it == basis_.end()) return false;
    int64_t b = it->second.begin()->second;
    if (a % b != 0) return false;
    axpy(row, -(a / b), it->second);
  }
  return true;
}

}  // namespace wtower::testing
