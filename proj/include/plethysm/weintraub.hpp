#pragma once

// Constructive witness that lambda* occurs in S^d(Wedge^k) for every even
// partition lambda with at most d parts, k even, |lambda| = k*d. (More than
// d parts is out of scope: no lambda* with a column taller than d occurs in
// a d-th symmetric power.) A k x d rectangle is
// filled column-by-column by a three-step state machine (A: freeze two top
// rows; B: spend one column of lambda* into one rectangle column; C: finish
// a column of lambda* and start the next). Cells are either frozen literals
// or slots (s, p) meaning sigma_s(p) for one permutation per lambda*-column.
// Expanding over all slot assignments with permutation signs gives a highest
// weight vector P of weight lambda*; symmetrizing P and reading off the
// identity assignment's monomial Q gives a strictly positive coefficient.

#include <vector>

#include "plethysm/partition.hpp"
#include "plethysm/tensor.hpp"

namespace plethysm {

struct StepRecord {
  char step = '?';  // 'A', 'B' or 'C'
  // state before the step
  int k_prime = 0, d_prime = 0, m_prime = 0, l_prime = 0;
  int o_prime = 0, h_prime = 0, j_prime = 0;
};

struct Cell {
  bool frozen = false;
  int value = 0;     // frozen literal, equal to the cell's lambda*-row index
  int column = 0;    // slot: lambda*-column s (1-based)
  int position = 0;  // slot: position p, a row of that column
};

struct SymbolicTableau {
  Partition lambda;
  Partition dual;  // lambda*
  int k = 0, d = 0;
  std::vector<std::vector<Cell>> grid;        // [row 0..k-1][col 0..d-1]
  std::vector<std::vector<int>> slot_rows;    // per lambda*-column: non-frozen rows
};

struct AlgoResult {
  SymbolicTableau tableau;
  std::vector<StepRecord> log;
  // observational: (l' immediately after each Step B, k); not asserted
  std::vector<std::pair<int, int>> post_b_lprime;
};

// Requires lambda nonempty and even with at most |lambda|/k parts, k even,
// k | |lambda|. Throws std::invalid_argument on bad input, std::logic_error
// if an internal state invariant breaks (never expected on valid input).
AlgoResult run_algorithm(const Partition& lambda, int k);

// Number of block-increasing slot assignments expand_P will enumerate.
BigInt expansion_size(const SymbolicTableau& st);

// Signed sum over all slot assignments. Enumerates block-increasing
// representatives with an exact orbit multiplier; identical to the naive
// accumulate-all-assignments sum.
TensorVector expand_P(const SymbolicTableau& st);

// The identity assignment's canonical simple tensor. Asserts that no
// rectangle column repeats an index (in particular frozen literals never
// collide with identity slot values).
SimpleTensor identity_term(const SymbolicTableau& st);

struct HighestWeightReport {
  bool nonzero = false;
  bool weight_ok = false;    // every term has weight lambda*
  bool killed = false;       // X_j P = 0 for j = 1..l(lambda*)
  int failed_j = 0;          // first failing j if !killed
  bool pass() const { return nonzero && weight_ok && killed; }
};

HighestWeightReport verify_highest_weight(const TensorVector& p,
                                          const Partition& lambda);

struct QContributor {
  // per lambda*-column: (position, value) pairs over the non-frozen rows
  std::vector<std::vector<std::pair<int, int>>> perms;
  int sign = 0;      // permutation sign x wedge sort sign
  bool paired = false;
};

struct QCertificate {
  SymTensorWord multiset;       // symmetrized identity term
  BigInt coefficient;           // its coefficient in symmetrize(P)
  bool positive = false;
  bool all_paired = false;      // every contributor paired with positive sign
  std::vector<QContributor> contributors;
};

// Requires p == expand_P(st).
QCertificate q_coefficient(const TensorVector& p, const SymbolicTableau& st);

}  // namespace plethysm
