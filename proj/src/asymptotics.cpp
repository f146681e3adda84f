#include "plethysm/asymptotics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "plethysm/oracle.hpp"

namespace plethysm {

namespace {

Partition augmented_shape(const Partition& lambda, int k, int d) {
  long long first = static_cast<long long>(k) * d - lambda.weight();
  if (first < lambda.part(1))
    throw std::invalid_argument("augmented shape is not a partition");
  std::vector<int> parts;
  if (first > 0) parts.push_back(static_cast<int>(first));
  else if (!lambda.empty())
    throw std::invalid_argument("augmented shape is not a partition");
  for (int p : lambda.parts()) parts.push_back(p);
  return Partition(std::move(parts));
}

Partition rectangle_content(int k, int d) {
  return Partition(std::vector<int>(d, k));
}

// first semistandard filling of shape with the given content, row-major
bool first_tableau(const Partition& shape, const Partition& content,
                   std::vector<std::vector<int>>& out) {
  int nrows = shape.length(), nvals = content.length();
  std::vector<int> left(content.parts());
  out.assign(nrows, {});
  std::function<bool(int, int)> rec = [&](int r, int c) -> bool {
    if (r == nrows) return true;
    if (c == shape.part(r + 1)) return rec(r + 1, 0);
    int lo = 1;
    if (c > 0) lo = std::max(lo, out[r][c - 1]);
    if (r > 0 && c < static_cast<int>(out[r - 1].size()))
      lo = std::max(lo, out[r - 1][c] + 1);
    for (int v = lo; v <= nvals; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      out[r].push_back(v);
      if (rec(r, c + 1)) return true;
      out[r].pop_back();
      ++left[v - 1];
    }
    return false;
  };
  return rec(0, 0);
}

// strip the first row, subtract one, rebuild, compare
bool round_trip_witness(const Partition& lambda, int k, int d) {
  Partition shape = augmented_shape(lambda, k, d);
  std::vector<std::vector<int>> t;
  if (!first_tableau(shape, rectangle_content(k, d), t)) return true;  // count 0

  std::vector<std::vector<int>> s(t.begin() + (shape.length() > 0 ? 1 : 0), t.end());
  std::vector<int> occurrences(d + 1, 0);  // of original values in rows 2+
  for (auto& row : s)
    for (int& v : row) {
      ++occurrences[v];
      if (v < 2 || v > d) return false;  // rows below the first hold 2..d
      v -= 1;                            // now an entry of S, in 1..d-1
    }
  // S must be semistandard of shape lambda
  for (size_t r = 0; r < s.size(); ++r) {
    if (static_cast<int>(s[r].size()) != lambda.part(static_cast<int>(r) + 1))
      return false;
    for (size_t c = 0; c < s[r].size(); ++c) {
      if (c > 0 && s[r][c] < s[r][c - 1]) return false;
      if (r > 0 && s[r][c] <= s[r - 1][c]) return false;
    }
  }
  // rebuild the first row: k ones, then k - occurrences(v) copies of each v
  std::vector<int> row1;
  for (int i = 0; i < k; ++i) row1.push_back(1);
  for (int v = 2; v <= d; ++v)
    for (int i = 0; i < k - occurrences[v]; ++i) row1.push_back(v);
  return row1 == t[0];
}

}  // namespace

long long s_kd(const Partition& lambda, int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("s_kd needs k, d >= 1");
  return kostka(augmented_shape(lambda, k, d), rectangle_content(k, d));
}

StabilizationRow stabilization_check(const Partition& lambda, int d, int kmax) {
  if (d < 1) throw std::invalid_argument("stabilization_check needs d >= 1");
  if (kmax < std::max(1, lambda.part(1)))
    throw std::invalid_argument("stabilization_check needs kmax >= lambda_1");
  StabilizationRow row;
  row.lambda = lambda;
  row.d = d;
  row.kmax = kmax;
  for (int k = 1; k <= kmax; ++k) {
    long long v = 0;
    if (static_cast<long long>(k) * d - lambda.weight() >= lambda.part(1))
      v = s_kd(lambda, k, d);
    row.values.push_back(v);
  }
  row.stable = schur_dimension(lambda, d - 1);
  row.stabilized = true;
  row.bijection_ok = true;
  for (int k = std::max(1, lambda.part(1)); k <= kmax; ++k) {
    if (BigInt(row.values[k - 1]) != row.stable) {
      row.stabilized = false;
      row.failed_k = k;
      break;
    }
    bool valid_shape =
        static_cast<long long>(k) * d - lambda.weight() >= lambda.part(1);
    if (valid_shape && !round_trip_witness(lambda, k, d)) {
      row.bijection_ok = false;
      if (!row.failed_k) row.failed_k = k;
    }
  }
  row.nondecreasing =
      std::is_sorted(row.values.begin(), row.values.end());
  return row;
}

}  // namespace plethysm
