#pragma once

// Basis of highest weight vectors for weight lambda* in (Wedge^k C^n)^(x d):
// one vector w_T per filling T of shape lambda* with entries 1..d, each used
// k times, rows strictly increasing and columns weakly increasing. Entries
// equal to g in column a sit at consecutive positions f(a,g-1)+1 .. f(a,g);
// factor g of w_T wedges those positions' images under one permutation per
// column. Dual vectors r_T pick out the unpermuted position blocks; r_T of a
// smaller tableau (h-lex) annihilates w_T of a strictly larger one, so in
// increasing h-lex order the pairing matrix is lower-unitriangular.

#include <utility>
#include <vector>

#include "plethysm/partition.hpp"
#include "plethysm/tensor.hpp"

namespace plethysm {

struct PieriTableau {
  Partition lambda;                    // original partition, |lambda| = k*d
  Partition shape;                     // lambda*
  int k = 0, d = 0;
  std::vector<std::vector<int>> rows;  // entries, row i has shape.part(i+1) cells

  // h(a,b): entries equal to b in column a; f(a,b) the partial sum over
  // values <= b. 1-based a in 1..l(lambda), b in 0..d.
  int h(int a, int b) const;
  int f(int a, int b) const;
  std::vector<int> h_key() const;      // flattened column-major, the sort key
};

// All valid tableaux for (k, d, lambda), sorted by increasing h-lex.
// Requires |lambda| == k*d.
std::vector<PieriTableau> enumerate_pieri_tableaux(int k, int d,
                                                   const Partition& lambda);

// Total order used above: T <= T' iff h(T) <=_lex h(T').
bool tableau_leq(const PieriTableau& t, const PieriTableau& u);

// One pre-canonical summand of w_T: factor words as generated plus the
// permutation sign.
struct RawTerm {
  std::vector<std::vector<int>> factors;
  int sign = 1;
};

// Summands of w_T over block-increasing permutation tuples (equivalent to
// the full sum divided by prod h(a,b)!).
std::vector<RawTerm> wt_raw_terms(const PieriTableau& t);

TensorVector build_wT(const PieriTableau& t);

// r_T as a canonical simple tensor plus the sign picked up sorting its
// factor words.
std::pair<SimpleTensor, int> build_rT(const PieriTableau& t);

// Pairing of a canonical dual tensor (with sign) against a vector: the dual
// of a sorted word is the indicator of equal index sets.
BigInt dual_pairing(const std::pair<SimpleTensor, int>& r, const TensorVector& v);

}  // namespace plethysm
