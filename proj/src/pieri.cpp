#include "plethysm/pieri.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace plethysm {

int PieriTableau::h(int a, int b) const {
  if (b < 1) return 0;
  int count = 0;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    if (a <= static_cast<int>(rows[r].size()) && rows[r][a - 1] == b) ++count;
  return count;
}

int PieriTableau::f(int a, int b) const {
  int sum = 0;
  for (int i = 1; i <= b; ++i) sum += h(a, i);
  return sum;
}

std::vector<int> PieriTableau::h_key() const {
  std::vector<int> key;
  key.reserve(static_cast<size_t>(lambda.length()) * d);
  for (int a = 1; a <= lambda.length(); ++a)
    for (int b = 1; b <= d; ++b) key.push_back(h(a, b));
  return key;
}

bool tableau_leq(const PieriTableau& t, const PieriTableau& u) {
  if (t.shape != u.shape || t.k != u.k || t.d != u.d)
    throw std::invalid_argument("tableau_leq compares tableaux of one family");
  return t.h_key() <= u.h_key();
}

namespace {

// cell-by-cell backtracking, row-major over the shape lambda*
void fill_cells(PieriTableau& t, int r, int c, std::vector<int>& left,
                std::vector<PieriTableau>& out) {
  int nrows = t.shape.length();
  if (r == nrows) {
    out.push_back(t);
    return;
  }
  int width = t.shape.part(r + 1);
  if (c == width) {
    fill_cells(t, r + 1, 0, left, out);
    return;
  }
  int lo = 1, hi = t.d;
  if (c > 0) lo = std::max(lo, t.rows[r][c - 1] + 1);        // strict in rows
  if (r > 0 && c < static_cast<int>(t.rows[r - 1].size()))
    lo = std::max(lo, t.rows[r - 1][c]);                     // weak down columns
  for (int v = lo; v <= hi; ++v) {
    if (left[v - 1] == 0) continue;
    --left[v - 1];
    t.rows[r].push_back(v);
    fill_cells(t, r, c + 1, left, out);
    t.rows[r].pop_back();
    ++left[v - 1];
  }
}

}  // namespace

std::vector<PieriTableau> enumerate_pieri_tableaux(int k, int d,
                                                   const Partition& lambda) {
  if (k < 1 || d < 1)
    throw std::invalid_argument("enumerate_pieri_tableaux needs k, d >= 1");
  if (lambda.weight() != static_cast<long long>(k) * d)
    throw std::invalid_argument("enumerate_pieri_tableaux needs |lambda| == k*d");
  PieriTableau t;
  t.lambda = lambda;
  t.shape = lambda.conjugate();
  t.k = k;
  t.d = d;
  t.rows.assign(t.shape.length(), {});
  std::vector<int> left(d, k);
  std::vector<PieriTableau> out;
  fill_cells(t, 0, 0, left, out);
  std::sort(out.begin(), out.end(), [](const PieriTableau& a, const PieriTableau& b) {
    return a.h_key() < b.h_key();
  });
  return out;
}

namespace {

// Enumerate permutations of {1..m} that increase on each of the given
// consecutive position blocks, emitting (values in position order, sign).
void block_increasing_perms(const std::vector<int>& block_sizes,
                            std::vector<int>& remaining, std::vector<int>& seq,
                            int inversions, size_t blk,
                            const std::function<void(const std::vector<int>&, int)>& emit) {
  if (blk == block_sizes.size()) {
    emit(seq, inversions % 2 == 0 ? 1 : -1);
    return;
  }
  int need = block_sizes[blk];
  // choose an increasing subsequence of `remaining` of length `need`
  std::vector<int> picked;
  auto rec = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(picked.size()) == need) {
      int inv = inversions;
      std::vector<int> rest;
      rest.reserve(remaining.size() - need);
      {
        size_t pi = 0;
        for (size_t i = 0; i < remaining.size(); ++i) {
          if (pi < picked.size() && remaining[i] == picked[pi]) {
            inv += static_cast<int>(i - pi);  // smaller values left behind
            ++pi;
          } else {
            rest.push_back(remaining[i]);
          }
        }
      }
      for (int v : picked) seq.push_back(v);
      std::swap(remaining, rest);
      block_increasing_perms(block_sizes, remaining, seq, inv, blk + 1, emit);
      std::swap(remaining, rest);
      seq.resize(seq.size() - need);
      return;
    }
    for (size_t i = from; i < remaining.size(); ++i) {
      picked.push_back(remaining[i]);
      self(self, i + 1);
      picked.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<RawTerm> wt_raw_terms(const PieriTableau& t) {
  int l = t.lambda.length();
  std::vector<RawTerm> out;

  // recursive product over columns
  std::vector<std::pair<std::vector<int>, int>> partial;  // per-column (seq, sign)
  auto column_rec = [&](auto&& self, int a) -> void {
    if (a > l) {
      RawTerm term;
      term.sign = 1;
      for (auto& [seq, sg] : partial) term.sign *= sg;
      term.factors.assign(t.d, {});
      for (int col = 1; col <= l; ++col) {
        const std::vector<int>& seq = partial[col - 1].first;
        for (int g = 1; g <= t.d; ++g) {
          int lo = t.f(col, g - 1), hi = t.f(col, g);
          for (int p = lo; p < hi; ++p)
            term.factors[g - 1].push_back(seq[p]);
        }
      }
      out.push_back(std::move(term));
      return;
    }
    std::vector<int> sizes;
    for (int g = 1; g <= t.d; ++g) sizes.push_back(t.h(a, g));
    std::vector<int> remaining(t.lambda.part(a));
    for (int i = 0; i < t.lambda.part(a); ++i) remaining[i] = i + 1;
    std::vector<int> seq;
    block_increasing_perms(sizes, remaining, seq, 0, 0,
                           [&](const std::vector<int>& s, int sg) {
                             partial.emplace_back(s, sg);
                             self(self, a + 1);
                             partial.pop_back();
                           });
  };
  column_rec(column_rec, 1);
  return out;
}

TensorVector build_wT(const PieriTableau& t) {
  TensorVector v;
  for (const RawTerm& term : wt_raw_terms(t)) v.add_term(term.factors, term.sign);
  return v;
}

std::pair<SimpleTensor, int> build_rT(const PieriTableau& t) {
  SimpleTensor factors;
  int sign = 1;
  for (int g = 1; g <= t.d; ++g) {
    std::vector<int> raw;
    for (int a = 1; a <= t.lambda.length(); ++a)
      for (int p = t.f(a, g - 1) + 1; p <= t.f(a, g); ++p) raw.push_back(p);
    auto [w, s] = canonical_wedge(raw);
    if (s == 0) throw std::logic_error("dual tensor with repeated position");
    sign *= s;
    factors.push_back(std::move(w));
  }
  return {factors, sign};
}

BigInt dual_pairing(const std::pair<SimpleTensor, int>& r, const TensorVector& v) {
  BigInt c = v.coeff(r.first);
  return r.second > 0 ? c : -c;
}

}  // namespace plethysm
