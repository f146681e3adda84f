#pragma once

// Kernel dimension of the stacked raising operators on one weight space of
// (Wedge^k C^n)^(x d): the number of independent highest weight vectors of
// weight mu. Exact integer linear algebra throughout (sparse elimination
// with gcd-normalized rows); no floating point, no modular arithmetic.

#include <utility>
#include <vector>

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"

namespace plethysm {

// Sparse rows over Z; returns the rank over Q. Row entries are
// (column, coefficient) pairs, columns 0-based and unique per row.
long long sparse_rank(std::vector<std::vector<std::pair<int, BigInt>>> rows);

// dim of the mu weight-space intersection of ker X_j, j = 1..n-1, inside
// (Wedge^k C^n)^(x d). Requires |mu| == k*d, l(mu) <= n, k <= n.
long long hwv_space_dim(int k, int d, const Partition& mu, int n);

}  // namespace plethysm
