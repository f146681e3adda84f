#pragma once

// Exact multilinear layer: tensor products of wedge powers with integer
// coefficients. Wedge factors are stored canonically (strictly increasing
// index words); canonicalization tracks the sort sign and collapses repeated
// indices to zero. Keys compare lexicographically, which for fixed (k, d)
// agrees with lex order on the concatenated factor words.

#include <map>
#include <utility>
#include <vector>

#include "plethysm/bigint.hpp"

namespace plethysm {

using WedgeWord = std::vector<int>;          // strictly increasing when canonical
using SimpleTensor = std::vector<WedgeWord>; // ordered factors, one per tensor slot
using SymTensorWord = std::vector<WedgeWord>; // factors sorted: a monomial in Sym^d

// Sorts a raw index word, returning (sorted word, sign of the sorting
// permutation); sign 0 if an index repeats.
std::pair<WedgeWord, int> canonical_wedge(const std::vector<int>& raw);

// Occurrence count of each index 1..n across all factors.
std::vector<int> weight_of(const SimpleTensor& t, int n);

class TensorVector {
public:
  // Adds c * t; factors of t may be unsorted (canonicalized here).
  void add_term(const SimpleTensor& t, const BigInt& c);
  const std::map<SimpleTensor, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  BigInt coeff(const SimpleTensor& canonical) const;
  bool operator==(const TensorVector&) const = default;

private:
  std::map<SimpleTensor, BigInt> terms_;
};

class SymVector {
public:
  void add_term(SymTensorWord w, const BigInt& c);  // w sorted here
  const std::map<SymTensorWord, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(const SymTensorWord& sorted) const;

private:
  std::map<SymTensorWord, BigInt> terms_;
};

// Raising operator X_j: replaces one occurrence of j+1 by j in every factor
// slot in turn, summing the signed canonical results. Requires j >= 1.
TensorVector raising_op(int j, const TensorVector& v);

// Projects each simple tensor onto its sorted factor multiset.
SymVector symmetrize(const TensorVector& v);

}  // namespace plethysm
