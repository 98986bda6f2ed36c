#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace qaff {

template <class R>
using Matrix = std::vector<std::vector<R>>;

// Laplace expansion along rows with memoized minors keyed by column subsets.
// Only commutative rings are supported; `one` is the empty determinant.
template <class R, class Mul>
R det(const Matrix<R>& m, const R& zero, const R& one, Mul mul) {
  const size_t k = m.size();
  if (k == 0) return one;
  std::unordered_map<uint64_t, R> memo;
  auto rec = [&](auto&& self, size_t row, uint64_t cols) -> R {
    if (row == k) return one;
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    R sum = zero;
    int pos = 0;
    for (size_t c = 0; c < k; ++c) {
      if (!(cols >> c & 1)) continue;
      const R& entry = m[row][c];
      if (!(entry == zero)) {
        R term = mul(entry, self(self, row + 1, cols & ~(uint64_t(1) << c)));
        if (pos % 2)
          sum = sum - term;
        else
          sum = sum + term;
      }
      ++pos;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(rec, 0, (k == 64 ? ~uint64_t(0) : (uint64_t(1) << k) - 1));
}

template <class R>
R det(const Matrix<R>& m, const R& zero, const R& one) {
  return det(m, zero, one, [](const R& a, const R& b) { return a * b; });
}

}  // namespace qaff
