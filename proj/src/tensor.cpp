#include "plethysm/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace plethysm {

std::pair<WedgeWord, int> canonical_wedge(const std::vector<int>& raw) {
  WedgeWord w;
  w.reserve(raw.size());
  int sign = 1;
  for (int x : raw) {
    // insertion sort, counting the slots x jumps over
    auto pos = std::upper_bound(w.begin(), w.end(), x);
    if (pos != w.begin() && *(pos - 1) == x) return {{}, 0};
    if ((w.end() - pos) % 2 != 0) sign = -sign;
    w.insert(pos, x);
  }
  return {w, sign};
}

std::vector<int> weight_of(const SimpleTensor& t, int n) {
  std::vector<int> wt(n, 0);
  for (const auto& f : t)
    for (int x : f) {
      if (x < 1 || x > n) throw std::invalid_argument("index outside 1..n");
      ++wt[x - 1];
    }
  return wt;
}

void TensorVector::add_term(const SimpleTensor& t, const BigInt& c) {
  if (c == 0) return;
  SimpleTensor canon;
  canon.reserve(t.size());
  int sign = 1;
  for (const auto& f : t) {
    auto [w, s] = canonical_wedge(f);
    if (s == 0) return;
    sign *= s;
    canon.push_back(std::move(w));
  }
  auto it = terms_.find(canon);
  if (it == terms_.end()) {
    terms_.emplace(std::move(canon), sign > 0 ? c : -c);
  } else {
    it->second += sign > 0 ? c : -c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt TensorVector::coeff(const SimpleTensor& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SymVector::add_term(SymTensorWord w, const BigInt& c) {
  if (c == 0) return;
  std::sort(w.begin(), w.end());
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SymVector::coeff(const SymTensorWord& sorted) const {
  auto it = terms_.find(sorted);
  return it == terms_.end() ? BigInt(0) : it->second;
}

TensorVector raising_op(int j, const TensorVector& v) {
  if (j < 1) throw std::invalid_argument("raising_op needs j >= 1");
  TensorVector out;
  for (const auto& [t, c] : v.terms()) {
    for (size_t g = 0; g < t.size(); ++g) {
      for (size_t s = 0; s < t[g].size(); ++s) {
        if (t[g][s] != j + 1) continue;
        SimpleTensor u = t;
        u[g][s] = j;  // may break sortedness or repeat; add_term canonicalizes
        out.add_term(u, c);
      }
    }
  }
  return out;
}

SymVector symmetrize(const TensorVector& v) {
  SymVector out;
  for (const auto& [t, c] : v.terms()) out.add_term(t, c);
  return out;
}

}  // namespace plethysm
