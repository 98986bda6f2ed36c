#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qaff/weyl.hpp"

namespace qaff {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::erase(parts, 0);
  if (!std::is_sorted(parts.rbegin(), parts.rend())) throw std::invalid_argument("partition parts must be weakly decreasing");
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("negative partition part");
}

int Partition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

Partition Partition::transpose() const {
  std::vector<int> t(parts.empty() ? 0 : parts[0], 0);
  for (int x : parts)
    for (int c = 0; c < x; ++c) ++t[c];
  return Partition(t);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int size) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(size, size, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int s = 0; s <= rows * cols; ++s)
    for (auto& p : partitions_of(s))
      if (p.fits_box(rows, cols)) out.push_back(p);
  return out;
}

Partition rectangle(int n, int i) { return Partition(std::vector<int>(n - i, i)); }

// ---- cores ----

namespace {

int residue(int row, int col, int n) { return ((col - row) % n + n) % n; }

std::vector<int> add_residue(std::vector<int> rows, int r, int n) {
  std::vector<int> adds;
  for (size_t j = 0; j <= rows.size(); ++j) {
    int c = j < rows.size() ? rows[j] : 0;
    bool addable = j == 0 || rows[j - 1] > c;
    if (addable && residue(int(j), c, n) == r) adds.push_back(int(j));
  }
  for (int j : adds) {
    if (j == int(rows.size()))
      rows.push_back(1);
    else
      ++rows[j];
  }
  return rows;
}

}  // namespace

Partition core_of(const ExtAffine& u) {
  if (u.tau_power() != 0) throw std::invalid_argument("core_of expects an element of W_af");
  auto word = u.reduced_word();
  std::vector<int> rows;
  for (auto it = word.rbegin(); it != word.rend(); ++it) rows = add_residue(rows, *it, u.n());
  return Partition(rows);
}

Partition bounded_of_core(const Partition& core, int n) {
  Partition t = core.transpose();
  std::vector<int> out;
  for (int r = 0; r < core.length(); ++r) {
    int cnt = 0;
    for (int c = 0; c < core.parts[r]; ++c) {
      int hook = core.parts[r] - c - 1 + t.parts[c] - r - 1 + 1;
      if (hook < n) ++cnt;
    }
    out.push_back(cnt);
  }
  std::sort(out.rbegin(), out.rend());
  return Partition(out);
}

Partition grassmannian_to_partition(const ExtAffine& u) {
  if (u.tau_power() != 0 || !u.is_grassmannian()) throw std::invalid_argument("not a Grassmannian element of W_af");
  return bounded_of_core(core_of(u), u.n());
}

namespace {

struct BijectionCache {
  std::mutex mu;
  struct PerRank {
    std::vector<std::vector<std::pair<ExtAffine, std::vector<int>>>> layers;  // (element, core rows)
    std::map<Partition, ExtAffine> by_partition;
  };
  std::map<int, PerRank> ranks;
};

BijectionCache& bijection_cache() {
  static BijectionCache c;
  return c;
}

}  // namespace

ExtAffine partition_to_grassmannian(const Partition& lambda, int n) {
  if (!lambda.parts.empty() && lambda.parts[0] > n - 1) throw std::invalid_argument("partition is not (n-1)-bounded");
  auto& cache = bijection_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& pr = cache.ranks[n];
  if (pr.layers.empty()) {
    pr.layers.push_back({{ExtAffine::identity(n), {}}});
    pr.by_partition.emplace(Partition(), ExtAffine::identity(n));
  }
  while (int(pr.layers.size()) <= lambda.size()) {
    std::map<std::vector<int>, ExtAffine> next;
    for (auto& [u, rows] : pr.layers.back()) {
      for (int r = 0; r < n; ++r) {
        auto grown = add_residue(rows, r, n);
        if (grown == rows) continue;
        next.emplace(grown, u.mul_s_left(r));
      }
    }
    std::vector<std::pair<ExtAffine, std::vector<int>>> layer;
    for (auto& [rows, u] : next) {
      layer.emplace_back(u, rows);
      pr.by_partition.emplace(bounded_of_core(Partition(rows), n), u);
    }
    pr.layers.push_back(std::move(layer));
  }
  auto it = pr.by_partition.find(lambda);
  if (it == pr.by_partition.end()) throw std::logic_error("bounded partition missing from bijection table");
  return it->second;
}

}  // namespace qaff
