#pragma once

// Stable multiplicities s_{k,d}(lambda): the multiplicity of the augmented
// shape (kd - |lambda|, lambda) in (S^k)^{tensor d}, counted as semistandard
// tableaux of that shape with exactly k entries equal to each of 1..d.
// For k >= lambda_1 the count stops depending on k and equals
// dim S_lambda C^(d-1).

#include <vector>

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"

namespace plethysm {

// Requires the augmented shape to be a partition: k*d >= |lambda| + lambda_1.
long long s_kd(const Partition& lambda, int k, int d);

struct StabilizationRow {
  Partition lambda;
  int d = 0, kmax = 0;
  std::vector<long long> values;  // k = 1..kmax; 0 where the shape is invalid
  BigInt stable;                  // dim S_lambda C^(d-1)
  bool stabilized = false;        // values[k-1] == stable for k in [lambda_1, kmax]
  bool nondecreasing = false;
  int failed_k = 0;
  // round trip of one witness tableau per k through the strip-first-row map
  bool bijection_ok = false;
};

// Requires kmax >= lambda_1 and d >= 1.
StabilizationRow stabilization_check(const Partition& lambda, int d, int kmax);

}  // namespace plethysm
