#pragma once

// Integer partitions: weakly decreasing positive parts, no trailing zeros.
// Conventions: |lambda| is the sum of parts, l(lambda) the number of parts,
// lambda* the conjugate. Dimensions of Schur modules come from the
// hook-content formula with exact big-integer arithmetic.

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "plethysm/bigint.hpp"

namespace plethysm {

class Partition {
public:
  Partition() = default;
  // Validates weak decrease and positivity; throws std::invalid_argument.
  explicit Partition(std::vector<int> parts);

  // Comma-separated decimal list, e.g. "6,6,6,2"; empty string is the
  // zero partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long weight() const;           // |lambda|
  int part(int i) const;              // 1-based, 0 beyond the length
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool is_even() const;               // all parts even (vacuously true for ())

  std::string to_string() const;      // "6,6,6,2"

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

// True iff a is dominated by b (prefix sums of a never exceed those of b).
// Requires |a| == |b|; throws std::invalid_argument otherwise.
bool dominance_leq(const Partition& a, const Partition& b);

// Strict decreasing-lex order on parts. A linear extension of dominance:
// used for the oracle's triangular solve and for JSON component ordering.
bool lex_greater(const Partition& a, const Partition& b);

// dim S_lambda C^n by hook content: prod (n + j - i) / prod hooks, with
// numerator and denominator accumulated separately and divided exactly once.
BigInt schur_dimension(const Partition& lambda, int n);

// All partitions of n (n >= 0), optionally restricted to even parts.
std::vector<Partition> partitions_of(int n, bool even_only = false);

}  // namespace plethysm
