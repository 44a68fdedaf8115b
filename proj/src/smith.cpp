#include "eqcoh/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace eqcoh {

namespace {

long long checked_sub_mul(long long a, long long q, long long b) {
  long long prod, out;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("integer overflow in Smith form");
  return out;
}

}  // namespace

SmithForm smith_form(IntMatrix A, int cols) {
  std::erase_if(A, [](const auto& row) {
    for (long long v : row)
      if (v != 0) return false;
    return true;
  });
  const int rows = static_cast<int>(A.size());
  IntMatrix V(cols, std::vector<long long>(cols, 0));
  for (int i = 0; i < cols; ++i) V[i][i] = 1;

  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (auto& r : A) std::swap(r[a], r[b]);
    for (auto& r : V) std::swap(r[a], r[b]);
  };
  auto col_sub = [&](int j, long long q, int t) {  // col_j -= q col_t
    for (auto& r : A) r[j] = checked_sub_mul(r[j], q, r[t]);
    for (auto& r : V) r[j] = checked_sub_mul(r[j], q, r[t]);
  };
  auto row_sub = [&](int i, long long q, int t) {  // row_i -= q row_t
    for (int c = 0; c < cols; ++c) A[i][c] = checked_sub_mul(A[i][c], q, A[t][c]);
  };

  int t = 0;
  for (; t < std::min(rows, cols); ++t) {
    int pr = -1, pc = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (A[i][j] != 0 && (best == 0 || std::llabs(A[i][j]) < best)) {
          best = std::llabs(A[i][j]);
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(A[t], A[pr]);
    swap_cols(t, pc);

    for (;;) {
      bool changed = false;
      for (int i = t + 1; i < rows && !changed; ++i) {
        if (A[i][t] == 0) continue;
        row_sub(i, A[i][t] / A[t][t], t);
        if (A[i][t] != 0) {
          std::swap(A[t], A[i]);
          changed = true;
        }
      }
      for (int j = t + 1; j < cols && !changed; ++j) {
        if (A[t][j] == 0) continue;
        col_sub(j, A[t][j] / A[t][t], t);
        if (A[t][j] != 0) {
          swap_cols(t, j);
          changed = true;
        }
      }
      if (changed) continue;
      bool clean = true;
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (A[i][j] % A[t][t] != 0) {
            for (int c = 0; c < cols; ++c) A[t][c] += A[i][c];
            clean = false;
            break;
          }
      if (clean) break;
    }
    if (A[t][t] < 0) {
      for (auto& r : A) r[t] = -r[t];
      for (auto& r : V) r[t] = -r[t];
    }
  }

  SmithForm out;
  out.invariants.assign(cols, 0);
  for (int i = 0; i < t; ++i) out.invariants[i] = A[i][i];
  out.V = std::move(V);
  return out;
}

}  // namespace eqcoh
