#include "plethysm/weintraub.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace plethysm {

namespace {

std::logic_error state_bug(const std::string& what) {
  return std::logic_error("algorithm state invariant broken: " + what);
}

}  // namespace

AlgoResult run_algorithm(const Partition& lambda, int k) {
  if (lambda.empty()) throw std::invalid_argument("lambda must be nonempty");
  if (!lambda.is_even()) throw std::invalid_argument("lambda must have even parts");
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer");
  if (lambda.weight() % k != 0) throw std::invalid_argument("k must divide |lambda|");
  int d = static_cast<int>(lambda.weight() / k);
  // more parts than rectangle columns would start with l' > d'; such lambda*
  // never occur in the d-th symmetric power in the first place
  if (lambda.length() > d)
    throw std::invalid_argument("lambda must have at most |lambda|/k parts");

  int big_l = lambda.length();  // number of lambda*-columns; column s has lambda_s boxes
  std::vector<int> crossed(big_l + 1, 0);
  long long total_crossed = 0;

  AlgoResult res;
  SymbolicTableau& st = res.tableau;
  st.lambda = lambda;
  st.dual = lambda.conjugate();
  st.k = k;
  st.d = d;
  st.grid.assign(k, std::vector<Cell>(d));
  st.slot_rows.assign(big_l + 1, {});
  std::vector<std::vector<int>> frozen_rows(big_l + 1);

  int m_prime = 0;
  int cur = 1;  // next rectangle column to fill

  auto l_prime_of = [&]() {
    int count = 0;
    for (int s = 1; s <= big_l; ++s)
      if (lambda.part(s) >= m_prime + 1 && crossed[s] <= m_prime) ++count;
    return count;
  };

  while (total_crossed < lambda.weight()) {
    int d_prime = d - (cur - 1);
    int k_prime = k - m_prime;
    if (d_prime < 1 || k_prime < 1) throw state_bug("rectangle exhausted early");

    int o_prime = 0;
    for (int s = 1; s <= big_l; ++s)
      if (crossed[s] < lambda.part(s)) {
        o_prime = s;
        break;
      }
    if (o_prime == 0) throw state_bug("no active column with boxes remaining");
    int h_prime = crossed[o_prime];
    int j_prime = lambda.part(o_prime) - h_prime;
    int l_prime = l_prime_of();
    if (l_prime > d_prime) throw state_bug("l' exceeds d'");

    StepRecord rec{'?', k_prime, d_prime, m_prime, l_prime,
                   o_prime, h_prime, j_prime};

    if (l_prime == d_prime) {
      rec.step = 'A';
      if (k_prime < 2) throw state_bug("step A with fewer than two rows left");
      // freeze exactly the l' columns whose row-(m'+1) box is uncrossed;
      // columns already crossed past m' keep their boxes for later B/C steps
      int actives = 0;
      for (int s = 1; s <= big_l; ++s) {
        if (lambda.part(s) < m_prime + 1 || crossed[s] > m_prime) continue;
        ++actives;
        if (crossed[s] != m_prime)
          throw state_bug("step A with a column not crossed to exactly m'");
        if (lambda.part(s) < m_prime + 2)
          throw state_bug("step A on a column with one box left");
        crossed[s] += 2;
        frozen_rows[s].push_back(m_prime + 1);
        frozen_rows[s].push_back(m_prime + 2);
      }
      if (actives != d_prime)
        throw state_bug("step A active columns do not match d'");
      for (int r = m_prime + 1; r <= m_prime + 2; ++r)
        for (int c = cur; c <= d; ++c)
          st.grid[r - 1][c - 1] = Cell{true, r, 0, 0};
      total_crossed += 2LL * d_prime;
      m_prime += 2;
    } else if (j_prime >= k_prime) {
      rec.step = 'B';
      for (int r = m_prime + 1; r <= k; ++r)
        st.grid[r - 1][cur - 1] = Cell{false, 0, o_prime, h_prime + (r - m_prime)};
      crossed[o_prime] += k_prime;
      total_crossed += k_prime;
      ++cur;
      res.post_b_lprime.emplace_back(l_prime_of(), k);
    } else {
      rec.step = 'C';
      if (o_prime + 1 > big_l)
        throw state_bug("step C without a next column");
      int y1 = lambda.part(o_prime) - h_prime;
      int y2 = lambda.part(o_prime + 1) - m_prime;
      if (y1 + y2 < k_prime) throw state_bug("step C box-count inequality fails");
      if (crossed[o_prime + 1] != m_prime)
        throw state_bug("step C next column not crossed to exactly m'");
      for (int r = m_prime + 1; r <= m_prime + j_prime; ++r)
        st.grid[r - 1][cur - 1] = Cell{false, 0, o_prime, h_prime + (r - m_prime)};
      for (int r = m_prime + j_prime + 1; r <= k; ++r)
        st.grid[r - 1][cur - 1] =
            Cell{false, 0, o_prime + 1, m_prime + (r - m_prime - j_prime)};
      crossed[o_prime] = lambda.part(o_prime);
      crossed[o_prime + 1] += k_prime - j_prime;
      total_crossed += k_prime;
      ++cur;
    }
    res.log.push_back(rec);

    // rows 1..m' of lambda* stay completely crossed out
    for (int s = 1; s <= big_l; ++s)
      if (crossed[s] < std::min(m_prime, lambda.part(s)))
        throw state_bug("rows above m' not fully crossed");
  }

  for (int s = 1; s <= big_l; ++s) {
    for (int p = 1; p <= lambda.part(s); ++p)
      if (!std::count(frozen_rows[s].begin(), frozen_rows[s].end(), p))
        st.slot_rows[s].push_back(p);
  }

  // every cell filled, slots referencing exactly the non-frozen rows
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < d; ++c) {
      const Cell& cell = st.grid[r][c];
      if (!cell.frozen && cell.column == 0) throw state_bug("unfilled cell");
    }
  return res;
}

namespace {

struct Block {
  int s = 0;                         // lambda*-column
  std::vector<int> positions;        // ascending
  std::vector<std::pair<int, int>> cells;  // (row, col) 0-based, same order
};

std::vector<Block> slot_blocks(const SymbolicTableau& st) {
  // group slot cells by (lambda*-column, rectangle column); positions within
  // a rectangle column are consecutive and increase down the rows
  std::vector<Block> blocks;
  for (int s = 1; s <= st.lambda.length(); ++s) {
    for (int c = 0; c < st.d; ++c) {
      Block b;
      b.s = s;
      for (int r = 0; r < st.k; ++r) {
        const Cell& cell = st.grid[r][c];
        if (!cell.frozen && cell.column == s) {
          b.positions.push_back(cell.position);
          b.cells.emplace_back(r, c);
        }
      }
      if (!b.positions.empty()) {
        if (!std::is_sorted(b.positions.begin(), b.positions.end()))
          throw std::logic_error("slot positions out of order in a column");
        blocks.push_back(std::move(b));
      }
    }
  }
  return blocks;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Enumerates block-increasing slot assignments. leaf(vals, parity) sees the
// filled value grid and the total permutation parity (0 or 1).
void expand_core(const SymbolicTableau& st,
                 const std::function<void(const std::vector<std::vector<int>>&, int)>& leaf,
                 std::vector<std::vector<std::pair<int, int>>>* perm_track) {
  if (st.lambda.part(1) >= 64)
    throw std::invalid_argument("expansion supports row indices below 64");
  auto blocks = slot_blocks(st);
  int big_l = st.lambda.length();

  std::vector<std::vector<int>> vals(st.k, std::vector<int>(st.d, 0));
  std::vector<std::uint64_t> col_mask(st.d, 0);
  for (int r = 0; r < st.k; ++r)
    for (int c = 0; c < st.d; ++c)
      if (st.grid[r][c].frozen) {
        vals[r][c] = st.grid[r][c].value;
        col_mask[c] |= 1ULL << st.grid[r][c].value;
      }

  // per lambda*-column pool of unused values, kept sorted
  std::vector<std::vector<int>> pool(big_l + 1);
  for (int s = 1; s <= big_l; ++s) pool[s] = st.slot_rows[s];

  std::function<void(size_t, int)> dfs = [&](size_t bi, int parity) {
    if (bi == blocks.size()) {
      leaf(vals, parity);
      return;
    }
    const Block& b = blocks[bi];
    std::vector<int>& rem = pool[b.s];
    int need = static_cast<int>(b.positions.size());
    int rect_col = b.cells[0].second;
    std::vector<int> picked_idx;

    std::function<void(int)> pick = [&](int from) {
      if (static_cast<int>(picked_idx.size()) == need) {
        int inv = 0;
        for (int j = 0; j < need; ++j) inv += picked_idx[j] - j;
        std::vector<int> rest;
        rest.reserve(rem.size() - need);
        {
          size_t pi = 0;
          for (size_t i = 0; i < rem.size(); ++i) {
            if (pi < picked_idx.size() &&
                static_cast<int>(i) == picked_idx[pi]) {
              ++pi;
            } else {
              rest.push_back(rem[i]);
            }
          }
        }
        std::vector<int> picked_vals(need);
        for (int j = 0; j < need; ++j) picked_vals[j] = rem[picked_idx[j]];
        for (int j = 0; j < need; ++j) {
          auto [r, c] = b.cells[j];
          vals[r][c] = picked_vals[j];
          col_mask[c] |= 1ULL << picked_vals[j];
        }
        if (perm_track)
          for (int j = 0; j < need; ++j)
            (*perm_track)[b.s].emplace_back(b.positions[j], picked_vals[j]);
        std::swap(rem, rest);
        dfs(bi + 1, (parity + inv) & 1);
        std::swap(rem, rest);
        if (perm_track)
          (*perm_track)[b.s].resize((*perm_track)[b.s].size() - need);
        for (int j = 0; j < need; ++j) {
          auto [r, c] = b.cells[j];
          vals[r][c] = 0;
          col_mask[c] &= ~(1ULL << picked_vals[j]);
        }
        return;
      }
      for (int i = from; i < static_cast<int>(rem.size()); ++i) {
        if (col_mask[rect_col] & (1ULL << rem[i])) continue;  // collision: zero
        picked_idx.push_back(i);
        pick(i + 1);
        picked_idx.pop_back();
      }
    };
    pick(0);
  };
  dfs(0, 0);
}

SimpleTensor columns_of(const std::vector<std::vector<int>>& vals, int k, int d) {
  SimpleTensor t(d);
  for (int c = 0; c < d; ++c) {
    t[c].resize(k);
    for (int r = 0; r < k; ++r) t[c][r] = vals[r][c];
  }
  return t;
}

}  // namespace

BigInt expansion_size(const SymbolicTableau& st) {
  BigInt total = 1;
  for (int s = 1; s <= st.lambda.length(); ++s)
    total *= factorial(static_cast<int>(st.slot_rows[s].size()));
  for (const Block& b : slot_blocks(st))
    total /= factorial(static_cast<int>(b.positions.size()));
  return total;
}

TensorVector expand_P(const SymbolicTableau& st) {
  BigInt mult = 1;
  for (const Block& b : slot_blocks(st))
    mult *= factorial(static_cast<int>(b.positions.size()));
  TensorVector p;
  expand_core(
      st,
      [&](const std::vector<std::vector<int>>& vals, int parity) {
        p.add_term(columns_of(vals, st.k, st.d), parity == 0 ? mult : -mult);
      },
      nullptr);
  return p;
}

SimpleTensor identity_term(const SymbolicTableau& st) {
  if (st.lambda.part(1) >= 64)
    throw std::invalid_argument("expansion supports row indices below 64");
  std::vector<std::vector<int>> vals(st.k, std::vector<int>(st.d, 0));
  for (int r = 0; r < st.k; ++r)
    for (int c = 0; c < st.d; ++c) {
      const Cell& cell = st.grid[r][c];
      vals[r][c] = cell.frozen ? cell.value : cell.position;
    }
  for (int c = 0; c < st.d; ++c) {
    std::uint64_t frozen_mask = 0, slot_mask = 0;
    for (int r = 0; r < st.k; ++r) {
      std::uint64_t bit = 1ULL << vals[r][c];
      std::uint64_t& mask = st.grid[r][c].frozen ? frozen_mask : slot_mask;
      if ((frozen_mask | slot_mask) & bit)
        throw std::logic_error("identity assignment repeats an index in a column");
      mask |= bit;
    }
  }
  SimpleTensor raw = columns_of(vals, st.k, st.d);
  SimpleTensor canon;
  for (auto& f : raw) {
    auto [w, s] = canonical_wedge(f);
    if (s == 0) throw std::logic_error("identity assignment column collapses");
    canon.push_back(std::move(w));
  }
  return canon;
}

HighestWeightReport verify_highest_weight(const TensorVector& p,
                                          const Partition& lambda) {
  HighestWeightReport rep;
  rep.nonzero = !p.is_zero();
  Partition dual = lambda.conjugate();
  int n = dual.length() == 0 ? 0 : lambda.part(1);
  std::vector<int> target(n);
  for (int i = 1; i <= n; ++i) target[i - 1] = dual.part(i);
  rep.weight_ok = true;
  for (const auto& [t, c] : p.terms())
    if (weight_of(t, n) != target) {
      rep.weight_ok = false;
      break;
    }
  rep.killed = true;
  for (int j = 1; j <= n; ++j) {
    if (!raising_op(j, p).is_zero()) {
      rep.killed = false;
      rep.failed_j = j;
      break;
    }
  }
  return rep;
}

namespace {

bool is_paired(const std::vector<std::pair<int, int>>& perm) {
  // perm: (position, value) pairs; value odd at position j forces value+1 at j+1
  std::map<int, int> m(perm.begin(), perm.end());
  for (auto& [pos, val] : m) {
    if (val % 2 == 1) {
      auto it = m.find(pos + 1);
      if (it == m.end() || it->second != val + 1) return false;
    }
  }
  return true;
}

}  // namespace

QCertificate q_coefficient(const TensorVector& p, const SymbolicTableau& st) {
  QCertificate cert;
  SimpleTensor q = identity_term(st);
  SymTensorWord multiset = q;
  std::sort(multiset.begin(), multiset.end());
  cert.multiset = multiset;
  cert.coefficient = symmetrize(p).coeff(multiset);
  cert.positive = cert.coefficient > 0;

  BigInt mult = 1;
  for (const Block& b : slot_blocks(st))
    mult *= factorial(static_cast<int>(b.positions.size()));

  int big_l = st.lambda.length();
  std::vector<std::vector<std::pair<int, int>>> track(big_l + 1);
  BigInt recount = 0;
  cert.all_paired = true;
  expand_core(
      st,
      [&](const std::vector<std::vector<int>>& vals, int parity) {
        SimpleTensor t = columns_of(vals, st.k, st.d);
        int wedge_sign = 1;
        SymTensorWord sorted;
        for (auto& f : t) {
          auto [w, s] = canonical_wedge(f);
          if (s == 0) return;  // zero term, can't contribute
          wedge_sign *= s;
          sorted.push_back(std::move(w));
        }
        std::sort(sorted.begin(), sorted.end());
        if (sorted != cert.multiset) return;
        QContributor contrib;
        contrib.perms.assign(track.begin() + 1, track.end());
        contrib.sign = (parity == 0 ? 1 : -1) * wedge_sign;
        contrib.paired = true;
        for (int s = 1; s <= big_l; ++s)
          if (!is_paired(track[s])) contrib.paired = false;
        if (!contrib.paired || contrib.sign <= 0) cert.all_paired = false;
        recount += contrib.sign > 0 ? mult : -mult;
        cert.contributors.push_back(std::move(contrib));
      },
      &track);
  if (recount != cert.coefficient)
    throw std::logic_error("contributor resum disagrees with symmetrized coefficient");
  return cert;
}

}  // namespace plethysm
