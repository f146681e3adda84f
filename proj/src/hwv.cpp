#include "plethysm/hwv.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "plethysm/tensor.hpp"

namespace plethysm {

namespace {

using SparseRow = std::vector<std::pair<int, BigInt>>;  // sorted by column

void gcd_normalize(SparseRow& row) {
  BigInt g = 0;
  for (auto& e : row) {
    g = boost::multiprecision::gcd(g, e.second);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : row) e.second /= g;
}

// row := pv * row - v * pivot  (eliminates pivot's lead column from row)
SparseRow combine(const SparseRow& row, const BigInt& v,
                  const SparseRow& pivot, const BigInt& pv) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, pv * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -v * pivot[j].second);
      ++j;
    } else {
      BigInt val = pv * row[i].second - v * pivot[j].second;
      if (val != 0) out.emplace_back(row[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  gcd_normalize(out);
  return out;
}

}  // namespace

long long sparse_rank(std::vector<SparseRow> rows) {
  int ncols = 0;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    SparseRow merged;  // combine duplicate columns, drop zeros
    for (auto& e : r) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
    }
    r = std::move(merged);
    for (auto& e : r) ncols = std::max(ncols, e.first + 1);
  }
  std::vector<std::unordered_set<int>> col_rows(ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : rows[i]) col_rows[c].insert(static_cast<int>(i));

  // min-heap on row support size, lazily revalidated
  using Entry = std::pair<size_t, int>;  // (nnz, row id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<char> dead(rows.size(), 0);
  for (size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) heap.emplace(rows[i].size(), static_cast<int>(i));

  long long rank = 0;
  while (!heap.empty()) {
    auto [nnz, r] = heap.top();
    heap.pop();
    if (dead[r] || rows[r].empty() || rows[r].size() != nnz) continue;

    // pivot column: prefer unit entries, then minimal column degree
    int best_c = -1;
    bool best_unit = false;
    size_t best_deg = 0;
    for (auto& [c, v] : rows[r]) {
      bool unit = v == 1 || v == -1;
      size_t deg = col_rows[c].size();
      if (best_c < 0 || (unit && !best_unit) ||
          (unit == best_unit && deg < best_deg)) {
        best_c = c;
        best_unit = unit;
        best_deg = deg;
      }
    }

    ++rank;
    dead[r] = 1;
    SparseRow pivot = std::move(rows[r]);
    rows[r].clear();
    BigInt pv;
    for (auto& [c, v] : pivot) {
      col_rows[c].erase(r);
      if (c == best_c) pv = v;
    }

    std::vector<int> touched(col_rows[best_c].begin(), col_rows[best_c].end());
    for (int r2 : touched) {
      BigInt v2;
      for (auto& [c, v] : rows[r2])
        if (c == best_c) {
          v2 = v;
          break;
        }
      for (auto& [c, v] : rows[r2]) col_rows[c].erase(r2);
      rows[r2] = combine(rows[r2], v2, pivot, pv);
      for (auto& [c, v] : rows[r2]) col_rows[c].insert(r2);
      if (!rows[r2].empty()) heap.emplace(rows[r2].size(), r2);
    }
  }
  return rank;
}

namespace {

void enum_weight_basis(int k, int n, int d, std::vector<int>& budget,
                       SimpleTensor& cur, std::vector<SimpleTensor>& out) {
  if (static_cast<int>(cur.size()) == d) {
    for (int b : budget)
      if (b != 0) return;
    out.push_back(cur);
    return;
  }
  // choose one strictly increasing k-word within the remaining budget
  WedgeWord word;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(word.size()) == k) {
      cur.push_back(word);
      enum_weight_basis(k, n, d, budget, cur, out);
      cur.pop_back();
      return;
    }
    for (int x = next; x <= n; ++x) {
      if (budget[x - 1] == 0) continue;
      --budget[x - 1];
      word.push_back(x);
      self(self, x + 1);
      word.pop_back();
      ++budget[x - 1];
    }
  };
  rec(rec, 1);
}

}  // namespace

long long hwv_space_dim(int k, int d, const Partition& mu, int n) {
  if (k < 1 || d < 1) throw std::invalid_argument("hwv_space_dim needs k, d >= 1");
  if (k > n) throw std::invalid_argument("hwv_space_dim needs k <= n");
  if (mu.weight() != static_cast<long long>(k) * d)
    throw std::invalid_argument("hwv_space_dim needs |mu| == k*d");
  if (mu.length() > n) throw std::invalid_argument("hwv_space_dim needs l(mu) <= n");
  for (int p : mu.parts())
    if (p > d) return 0;  // each index occurs at most once per factor

  std::vector<int> budget(n, 0);
  for (int i = 1; i <= n; ++i) budget[i - 1] = mu.part(i);
  std::vector<SimpleTensor> basis;
  SimpleTensor cur;
  enum_weight_basis(k, n, d, budget, cur, basis);

  std::map<SimpleTensor, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

  // stacked matrix: one row per (j, image tensor), columns indexed by basis
  std::map<std::pair<int, SimpleTensor>, SparseRow> rows;
  for (size_t t = 0; t < basis.size(); ++t) {
    for (int j = 1; j < n; ++j) {
      TensorVector v;
      v.add_term(basis[t], 1);
      TensorVector image = raising_op(j, v);
      for (const auto& [u, c] : image.terms()) {
        SparseRow& row = rows[{j, u}];
        row.emplace_back(static_cast<int>(t), c);
      }
    }
  }

  std::vector<SparseRow> mat;
  mat.reserve(rows.size());
  for (auto& [key, row] : rows) mat.push_back(std::move(row));
  long long rank = sparse_rank(std::move(mat));
  return static_cast<long long>(basis.size()) - rank;
}

}  // namespace plethysm
