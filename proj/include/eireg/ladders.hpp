#pragma once

// (e, i)-ladders. The node (a, b) lies on the ladder with key
//   l = (e - i) * b + a * i + 1 - e,   r = (b - a) mod e,
// and every key built from a node satisfies i * r + l = 1 (mod e). Walking a
// ladder "upwards" means (a, b) -> (a - (e - i), b + i).

#include <compare>
#include <map>
#include <vector>

#include "eireg/partition.hpp"

namespace eireg {

struct LadderKey {
  int l = 1;
  int r = 0;

  friend auto operator<=>(const LadderKey&, const LadderKey&) = default;
};

LadderKey ladder_key(Node x, const EiParams& p);

// Rungs of the ladder inside the box [1, max_row] x [1, max_col], lowest row
// first. A key that breaks the congruence names an empty ladder.
std::vector<Node> ladder_rungs(LadderKey key, const EiParams& p, int max_row, int max_col);

// Node count per ladder; two partitions share a regularisation class exactly
// when their fingerprints agree.
class LadderFingerprint {
 public:
  using Counts = std::map<LadderKey, int>;

  LadderFingerprint() = default;
  explicit LadderFingerprint(Counts counts) : counts_(std::move(counts)) {}

  const Counts& counts() const noexcept { return counts_; }
  int total() const noexcept;
  int count(LadderKey key) const;

  friend bool operator==(const LadderFingerprint&, const LadderFingerprint&) = default;
  friend auto operator<=>(const LadderFingerprint&, const LadderFingerprint&) = default;

 private:
  Counts counts_;
};

LadderFingerprint fingerprint(const Partition& lambda, const EiParams& p);

// Throws SizeMismatch.
bool same_class(const Partition& lambda, const Partition& mu, const EiParams& p);

}  // namespace eireg
