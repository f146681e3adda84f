#pragma once

// Independent brute-force decomposition of S^d(Wedge^k C^n) and
// S^d(S^k C^n): enumerate basis monomials, tally weight multiplicities at
// dominant weights, then peel off irreducibles from the dominance-largest
// weight down using Kostka numbers. Also a tensor-power variant (ordered
// tuples, weight counts by convolution) used as a cross-check for the
// highest-weight-vector counts.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"

namespace plethysm {

enum class Functor { wedge, sym };

std::string functor_name(Functor f);
Functor parse_functor(const std::string& name);

// Number of basis monomials of S^d(F^k C^n) whose content vector equals the
// dominant weight exactly (keys: dominant weights as partitions).
// Requires k <= n for wedge; k*d <= 16 unless force.
std::map<Partition, long long> weight_multiplicities(int k, int d, int n,
                                                     Functor f,
                                                     bool force = false);

// Same for the ordered tensor power (F^k C^n)^(x d), via convolution.
std::map<Partition, BigInt> tuple_weight_multiplicities(int k, int d, int n,
                                                        Functor f,
                                                        bool force = false);

// Semistandard tableaux of the given shape and content.
long long kostka(const Partition& shape, const Partition& content);

struct DecompositionTable {
  Functor functor = Functor::wedge;
  int k = 0, d = 0, n = 0;
  bool tuple = false;  // ordered tensor power instead of S^d
  // sorted by decreasing lex on parts (a linear extension of dominance)
  std::vector<std::pair<Partition, BigInt>> components;

  BigInt multiplicity(const Partition& mu) const;
  BigInt dimension_sum(int n_override = -1) const;  // sum mult * dim S_mu
};

// Throws check_failure (see below) if an intermediate multiplicity turns
// negative, which would mean the weight counts are inconsistent.
struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DecompositionTable decompose(int k, int d, int n, Functor f, bool force = false);
DecompositionTable decompose_tuple_power(int k, int d, int n, Functor f,
                                         bool force = false);

// dim of the ambient space: binom(|basis of F^k C^n| + d - 1, d).
BigInt ambient_dimension(int k, int d, int n, Functor f);
BigInt tuple_ambient_dimension(int k, int d, int n, Functor f);

// S^d(S^k) and S^d(Wedge^k) decompositions match under conjugation.
// Requires n >= k*d and even k (odd k conjugates into the d-th exterior
// power, which this oracle does not build).
bool duality_check(int k, int d, int n, DecompositionTable* wedge_out = nullptr,
                   DecompositionTable* sym_out = nullptr);

struct ScanRow {
  Partition lambda;
  int k = 0, d = 0;
  BigInt oracle_multiplicity;
  bool witness_ok = false;   // full construct-and-verify pipeline passed
  bool ok = false;           // multiplicity >= 1 and witness_ok
  std::string detail;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  bool all_ok = true;
};

// One (k, d): every even lambda with |lambda| = k*d.
ScanReport scan_instance(int k, int d);

// All even k <= kmax, d <= dmax with k*d <= 12.
ScanReport weintraub_positivity_scan(int kmax, int dmax);

}  // namespace plethysm
