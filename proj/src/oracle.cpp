#include "plethysm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "plethysm/weintraub.hpp"

namespace plethysm {

std::string functor_name(Functor f) {
  return f == Functor::wedge ? "wedge" : "sym";
}

Functor parse_functor(const std::string& name) {
  if (name == "wedge") return Functor::wedge;
  if (name == "sym") return Functor::sym;
  throw std::invalid_argument("functor must be 'wedge' or 'sym'");
}

namespace {

void check_oracle_args(int k, int d, int n, Functor f, bool force) {
  if (k < 1 || d < 1 || n < 1)
    throw std::invalid_argument("oracle needs k, d, n >= 1");
  if (f == Functor::wedge && k > n)
    throw std::invalid_argument("wedge oracle needs k <= n");
  if (static_cast<long long>(k) * d > 16 && !force)
    throw std::invalid_argument("oracle refuses k*d > 16 without force");
}

// basis words of F^k C^n as content vectors over 1..n
std::vector<std::vector<int>> unit_contents(int k, int n, Functor f) {
  std::vector<std::vector<int>> out;
  std::vector<int> content(n, 0);
  std::function<void(int, int)> rec = [&](int picked, int from) {
    if (picked == k) {
      out.push_back(content);
      return;
    }
    for (int x = from; x <= n; ++x) {
      ++content[x - 1];
      rec(picked + 1, f == Functor::wedge ? x + 1 : x);
      --content[x - 1];
    }
  };
  rec(0, 1);
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

Partition to_partition(const std::vector<int>& dominant) {
  std::vector<int> parts;
  for (int x : dominant) {
    if (x == 0) break;
    parts.push_back(x);
  }
  return Partition(std::move(parts));
}

}  // namespace

std::map<Partition, long long> weight_multiplicities(int k, int d, int n,
                                                     Functor f, bool force) {
  check_oracle_args(k, d, n, f, force);
  auto units = unit_contents(k, n, f);
  std::map<Partition, long long> tally;
  std::vector<int> content(n, 0);
  // multisets of size d over the unit basis: indices weakly increasing
  std::function<void(int, int)> rec = [&](int depth, int from) {
    if (depth == d) {
      if (weakly_decreasing(content)) ++tally[to_partition(content)];
      return;
    }
    for (int i = from; i < static_cast<int>(units.size()); ++i) {
      for (int j = 0; j < n; ++j) content[j] += units[i][j];
      rec(depth + 1, i);
      for (int j = 0; j < n; ++j) content[j] -= units[i][j];
    }
  };
  rec(0, 0);
  return tally;
}

std::map<Partition, BigInt> tuple_weight_multiplicities(int k, int d, int n,
                                                        Functor f, bool force) {
  check_oracle_args(k, d, n, f, force);
  auto units = unit_contents(k, n, f);
  std::map<std::vector<int>, BigInt> dist;
  dist[std::vector<int>(n, 0)] = 1;
  for (int t = 0; t < d; ++t) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [c, cnt] : dist)
      for (const auto& u : units) {
        std::vector<int> nc(n);
        for (int j = 0; j < n; ++j) nc[j] = c[j] + u[j];
        next[nc] += cnt;
      }
    dist = std::move(next);
  }
  std::map<Partition, BigInt> out;
  for (const auto& [c, cnt] : dist)
    if (weakly_decreasing(c)) out[to_partition(c)] = cnt;
  return out;
}

long long kostka(const Partition& shape, const Partition& content) {
  if (shape.weight() != content.weight())
    throw std::invalid_argument("kostka needs |shape| == |content|");
  int nrows = shape.length(), nvals = content.length();
  std::vector<int> left(content.parts());
  std::vector<std::vector<int>> rows(nrows);
  long long count = 0;
  // row-major semistandard fill: rows weakly increase, columns strictly
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == nrows) {
      ++count;
      return;
    }
    if (c == shape.part(r + 1)) {
      rec(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0 && c < static_cast<int>(rows[r - 1].size()))
      lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= nvals; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      rows[r].push_back(v);
      rec(r, c + 1);
      rows[r].pop_back();
      ++left[v - 1];
    }
  };
  rec(0, 0);
  return count;
}

namespace {

template <typename Count>
std::vector<std::pair<Partition, BigInt>> triangular_solve(
    const std::map<Partition, Count>& wc) {
  // dominance-largest first: decreasing lex is a linear extension
  std::vector<Partition> order;
  for (const auto& [mu, c] : wc) order.push_back(mu);
  std::sort(order.begin(), order.end(), lex_greater);

  std::vector<std::pair<Partition, BigInt>> components;
  for (const Partition& mu : order) {
    BigInt m = BigInt(wc.at(mu));
    for (const auto& [nu, mult] : components) {
      if (!dominance_leq(mu, nu)) continue;
      m -= mult * kostka(nu, mu);
    }
    if (m < 0)
      throw check_failure("negative multiplicity at " + mu.to_string());
    if (m > 0) components.emplace_back(mu, m);
  }
  return components;
}

BigInt binomial(BigInt n, int r) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

BigInt DecompositionTable::multiplicity(const Partition& mu) const {
  for (const auto& [nu, m] : components)
    if (nu == mu) return m;
  return 0;
}

BigInt DecompositionTable::dimension_sum(int n_override) const {
  int nn = n_override < 0 ? n : n_override;
  BigInt sum = 0;
  for (const auto& [mu, m] : components) sum += m * schur_dimension(mu, nn);
  return sum;
}

BigInt ambient_dimension(int k, int d, int n, Functor f) {
  BigInt base = f == Functor::wedge ? binomial(n, k) : binomial(BigInt(n) + k - 1, k);
  return binomial(base + d - 1, d);
}

BigInt tuple_ambient_dimension(int k, int d, int n, Functor f) {
  BigInt base = f == Functor::wedge ? binomial(n, k) : binomial(BigInt(n) + k - 1, k);
  BigInt out = 1;
  for (int i = 0; i < d; ++i) out *= base;
  return out;
}

DecompositionTable decompose(int k, int d, int n, Functor f, bool force) {
  DecompositionTable table;
  table.functor = f;
  table.k = k;
  table.d = d;
  table.n = n;
  table.components = triangular_solve(weight_multiplicities(k, d, n, f, force));
  return table;
}

DecompositionTable decompose_tuple_power(int k, int d, int n, Functor f,
                                         bool force) {
  DecompositionTable table;
  table.functor = f;
  table.k = k;
  table.d = d;
  table.n = n;
  table.tuple = true;
  table.components = triangular_solve(tuple_weight_multiplicities(k, d, n, f, force));
  return table;
}

bool duality_check(int k, int d, int n, DecompositionTable* wedge_out,
                   DecompositionTable* sym_out) {
  if (n < k * d) throw std::invalid_argument("duality_check needs n >= k*d");
  // conjugation pairs the two d-th symmetric powers only for even k; for odd
  // k the conjugate of S^d(S^k) is the d-th exterior power of wedges instead
  if (k % 2 != 0) throw std::invalid_argument("duality_check needs even k");
  DecompositionTable w = decompose(k, d, n, Functor::wedge);
  DecompositionTable s = decompose(k, d, n, Functor::sym);
  bool ok = w.components.size() == s.components.size();
  if (ok)
    for (const auto& [mu, m] : s.components)
      if (w.multiplicity(mu.conjugate()) != m) {
        ok = false;
        break;
      }
  if (wedge_out) *wedge_out = std::move(w);
  if (sym_out) *sym_out = std::move(s);
  return ok;
}

ScanReport scan_instance(int k, int d) {
  ScanReport report;
  int n = k * d;  // one table serves every lambda* with l(lambda*) <= kd
  DecompositionTable table = decompose(k, d, n, Functor::wedge);
  for (const Partition& lambda : partitions_of(k * d, /*even_only=*/true)) {
    // lambda* with a column taller than d cannot occur in a d-th symmetric
    // power, so the positivity claim is scoped to at most d parts
    if (lambda.length() > d) continue;
    ScanRow row;
    row.lambda = lambda;
    row.k = k;
    row.d = d;
    row.oracle_multiplicity = table.multiplicity(lambda.conjugate());
    try {
      AlgoResult algo = run_algorithm(lambda, k);
      TensorVector p = expand_P(algo.tableau);
      HighestWeightReport hw = verify_highest_weight(p, lambda);
      QCertificate q = q_coefficient(p, algo.tableau);
      row.witness_ok = hw.pass() && q.positive && q.all_paired;
      if (!row.witness_ok) row.detail = "witness verification failed";
    } catch (const std::exception& e) {
      row.witness_ok = false;
      row.detail = e.what();
    }
    row.ok = row.witness_ok && row.oracle_multiplicity >= 1;
    if (!row.ok) report.all_ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ScanReport weintraub_positivity_scan(int kmax, int dmax) {
  ScanReport report;
  for (int k = 2; k <= kmax; k += 2)
    for (int d = 1; d <= dmax; ++d) {
      if (static_cast<long long>(k) * d > 12) continue;
      ScanReport part = scan_instance(k, d);
      if (!part.all_ok) report.all_ok = false;
      for (auto& row : part.rows) report.rows.push_back(std::move(row));
    }
  return report;
}

}  // namespace plethysm
