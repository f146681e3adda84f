#include "plethysm/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plethysm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size())
      throw std::invalid_argument("bad partition entry '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

long long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(parts_[0]);
    for (int i = 1; i <= parts_[0]; ++i) {
      int count = 0;
      for (int p : parts_)
        if (p >= i) ++count;
      conj[i - 1] = count;
    }
  }
  return Partition(std::move(conj));
}

bool Partition::is_even() const {
  for (int p : parts_)
    if (p % 2 != 0) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw std::invalid_argument("dominance compares partitions of equal size");
  long long sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

bool lex_greater(const Partition& a, const Partition& b) {
  return a.parts() > b.parts();
}

BigInt schur_dimension(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("schur_dimension needs n >= 0");
  Partition conj = lambda.conjugate();
  BigInt num = 1, den = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= n + j - i;
      den *= lambda.part(i) - j + conj.part(j) - i + 1;  // hook length
    }
  }
  if (num == 0) return 0;
  BigInt q = num / den;
  if (q * den != num)
    throw std::logic_error("hook-content division not exact");
  return q;
}

namespace {

void gen_partitions(int remaining, int max_part, int step,
                    std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= step; p -= step) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, step, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, bool even_only) {
  if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  int step = even_only ? 2 : 1;
  if (n % step == 0) gen_partitions(n, n, step, cur, out);
  return out;
}

}  // namespace plethysm
