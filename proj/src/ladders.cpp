#include "eireg/ladders.hpp"

namespace eireg {

LadderKey ladder_key(Node x, const EiParams& p) {
  const int e = p.e();
  const int i = p.i();
  return {(e - i) * x.col + x.row * i + 1 - e, residue(x, e)};
}

std::vector<Node> ladder_rungs(LadderKey key, const EiParams& p, int max_row, int max_col) {
  const int e = p.e();
  const int i = p.i();
  std::vector<Node> out;
  // Solve a * i = l - 1 + e - (e - i) * b column by column; a falls as b grows,
  // so the rungs come out lowest row first.
  for (int b = 1; b <= max_col; ++b) {
    const int rhs = key.l - 1 + e - (e - i) * b;
    if (rhs < i) break;
    if (rhs % i != 0) continue;
    const Node x{rhs / i, b};
    if (x.row <= max_row && residue(x, e) == key.r) out.push_back(x);
  }
  return out;
}

int LadderFingerprint::total() const noexcept {
  int sum = 0;
  for (const auto& [key, n] : counts_) sum += n;
  return sum;
}

int LadderFingerprint::count(LadderKey key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

LadderFingerprint fingerprint(const Partition& lambda, const EiParams& p) {
  LadderFingerprint::Counts counts;
  for (int a = 1; a <= lambda.length(); ++a) {
    for (int b = 1; b <= lambda.part(a); ++b) ++counts[ladder_key({a, b}, p)];
  }
  return LadderFingerprint(std::move(counts));
}

bool same_class(const Partition& lambda, const Partition& mu, const EiParams& p) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorKind::SizeMismatch, "same_class needs partitions of the same size");
  }
  return fingerprint(lambda, p) == fingerprint(mu, p);
}

}  // namespace eireg
