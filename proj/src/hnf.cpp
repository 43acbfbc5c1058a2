#include "wtower/hnf.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace wtower {

int64_t gcd64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

void axpy(IntVec& dst, int64_t k, const IntVec& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += k * src[i];
}

void drop_zero_rows(IntMat& rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const IntVec& r) {
                              return std::all_of(r.begin(), r.end(),
                                                 [](int64_t v) { return v == 0; });
                            }),
             rows.end());
}

}  // namespace

IntMat row_hnf(IntMat rows) {
  drop_zero_rows(rows);
  if (rows.empty()) return rows;
  size_t cols = rows[0].size();
  size_t top = 0;
  for (size_t col = 0; col < cols && top < rows.size(); ++col) {
    // Euclidean elimination in this column among rows[top..].
    while (true) {
      size_t best = top;
      int64_t best_abs = 0;
      for (size_t i = top; i < rows.size(); ++i) {
        int64_t a = std::abs(rows[i][col]);
        if (a != 0 && (best_abs == 0 || a < best_abs)) {
          best_abs = a;
          best = i;
        }
      }
      if (best_abs == 0) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        int64_t q = rows[i][col] / rows[top][col];
        axpy(rows[i], -q, rows[top]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (auto& v : rows[top]) v = -v;
      // Reduce entries above the pivot into [0, pivot).
      for (size_t i = 0; i < top; ++i) {
        int64_t q = rows[i][col] / rows[top][col];
        if (rows[i][col] - q * rows[top][col] < 0) --q;
        if (q != 0) axpy(rows[i], -q, rows[top]);
      }
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

bool hnf_member(const IntMat& hnf, IntVec v) {
  size_t row = 0;
  for (size_t col = 0; col < v.size(); ++col) {
    // Find the HNF row with pivot at this column, if any.
    if (row < hnf.size()) {
      size_t pivot_col = 0;
      while (pivot_col < v.size() && hnf[row][pivot_col] == 0) ++pivot_col;
      if (pivot_col == col) {
        if (v[col] % hnf[row][col] != 0) return false;
        int64_t q = v[col] / hnf[row][col];
        for (size_t i = 0; i < v.size(); ++i) v[i] -= q * hnf[row][i];
        ++row;
      }
    }
    if (v[col] != 0) return false;
  }
  return true;
}

bool hnf_solve(const IntMat& rows, const IntVec& v, IntVec& coeffs_out) {
  // Augment each row with indicator coordinates to track coefficients.
  size_t n = rows.size();
  if (n == 0) {
    coeffs_out.clear();
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
  }
  size_t d = rows[0].size();
  IntMat aug(n, IntVec(d + n, 0));
  for (size_t i = 0; i < n; ++i) {
    std::copy(rows[i].begin(), rows[i].end(), aug[i].begin());
    aug[i][d + i] = 1;
  }
  // Row-reduce only over the first d columns.
  size_t top = 0;
  for (size_t col = 0; col < d && top < n; ++col) {
    while (true) {
      size_t best = top;
      int64_t best_abs = 0;
      for (size_t i = top; i < n; ++i) {
        int64_t a = std::abs(aug[i][col]);
        if (a != 0 && (best_abs == 0 || a < best_abs)) {
          best_abs = a;
          best = i;
        }
      }
      if (best_abs == 0) break;
      std::swap(aug[top], aug[best]);
      bool clean = true;
      for (size_t i = top + 1; i < n; ++i) {
        if (aug[i][col] == 0) continue;
        int64_t q = aug[i][col] / aug[top][col];
        axpy(aug[i], -q, aug[top]);
        if (aug[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (aug[top][col] != 0) ++top;
  }
  // Back-substitute v through the triangular system.
  IntVec target = v;
  IntVec comb(n, 0);
  for (size_t i = 0; i < top; ++i) {
    size_t col = 0;
    while (col < d && aug[i][col] == 0) ++col;
    if (col == d) continue;
    if (target[col] % aug[i][col] != 0) return false;
    int64_t q = target[col] / aug[i][col];
    for (size_t j = 0; j < d; ++j) target[j] -= q * aug[i][j];
    for (size_t j = 0; j < n; ++j) comb[j] += q * aug[i][d + j];
  }
  if (!std::all_of(target.begin(), target.end(), [](int64_t x) { return x == 0; }))
    return false;
  coeffs_out = comb;
  return true;
}

IntVec invariant_factors(IntMat rows, int dim) {
  drop_zero_rows(rows);
  IntVec factors;
  if (!rows.empty()) {
    size_t n = rows.size();
    size_t d = rows[0].size();
    // Smith normal form by alternating row/column reduction.
    size_t t = 0;
    while (t < n && t < d) {
      // Find a nonzero entry in the submatrix.
      size_t pi = n, pj = d;
      int64_t best = 0;
      for (size_t i = t; i < n; ++i)
        for (size_t j = t; j < d; ++j) {
          int64_t a = std::abs(rows[i][j]);
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;
      std::swap(rows[t], rows[pi]);
      for (size_t i = 0; i < n; ++i) std::swap(rows[i][t], rows[i][pj]);
      bool again = false;
      for (size_t i = t + 1; i < n; ++i) {
        if (rows[i][t] == 0) continue;
        int64_t q = rows[i][t] / rows[t][t];
        axpy(rows[i], -q, rows[t]);
        if (rows[i][t] != 0) again = true;
      }
      for (size_t j = t + 1; j < d; ++j) {
        if (rows[t][j] == 0) continue;
        int64_t q = rows[t][j] / rows[t][t];
        for (size_t i = 0; i < n; ++i) rows[i][j] -= q * rows[i][t];
        if (rows[t][j] != 0) again = true;
      }
      if (again) continue;
      // Divisibility fix-up: the pivot must divide the rest.
      bool fixed = true;
      for (size_t i = t + 1; i < n && fixed; ++i)
        for (size_t j = t + 1; j < d && fixed; ++j) {
          if (rows[i][j] % rows[t][t] != 0) {
            axpy(rows[t], 1, rows[i]);
            fixed = false;
          }
        }
      if (!fixed) continue;
      ++t;
    }
    for (size_t i = 0; i < t; ++i) factors.push_back(std::abs(rows[i][i]));
  }
  std::sort(factors.begin(), factors.end());
  while ((int)factors.size() < dim) factors.push_back(0);
  return factors;
}

}  // namespace wtower
