#pragma once

// Beta-sets and e-abacus displays, plus the bead-moving step that pushes a
// partition up its (e, i)-regularisation class.
//
// Position t sits on runner t mod e. A bead at position p stands for a row of
// the diagram and an empty position for a column boundary; with s beads the
// k-th largest bead sits at parts[k] + s - k.

#include <optional>
#include <span>
#include <vector>

#include "eireg/ladders.hpp"
#include "eireg/partition.hpp"

namespace eireg {

struct BetaSet {
  std::vector<int> values;  // strictly decreasing

  friend bool operator==(const BetaSet&, const BetaSet&) = default;
};

class AbacusDisplay {
 public:
  AbacusDisplay() = default;

  // Throws InvalidAbacus for runners < 2, negative or repeated positions.
  AbacusDisplay(int runners, std::span<const int> occupied);

  int runners() const noexcept { return runners_; }
  int bead_count() const noexcept { return static_cast<int>(beads_.size()); }

  // Ascending bead positions.
  std::span<const int> beads() const noexcept { return beads_; }

  bool occupied(int pos) const noexcept;

  // Largest occupied position, or -1 with no beads.
  int top() const noexcept { return beads_.empty() ? -1 : beads_.back(); }

  int runner_of(int pos) const noexcept { return pos % runners_; }

  // Number of beads at positions strictly between lo and hi.
  int beads_between(int lo, int hi) const noexcept;

  // Same beads read on a different number of runners.
  AbacusDisplay with_runners(int runners) const;

  friend bool operator==(const AbacusDisplay&, const AbacusDisplay&) = default;

 private:
  int runners_ = 2;
  std::vector<int> beads_;
};

struct AbacusHook {
  int bead = 0;
  int k = 0;

  friend bool operator==(const AbacusHook&, const AbacusHook&) = default;
};

// s_1 < ... < s_i: the empty positions of the window [s_1, s_1 + e).
struct SPositions {
  int s1 = 0;
  std::vector<int> s_list;
};

// Everything phi_step decided on its way from `before` to `after`.
struct PhiTrace {
  int s1 = 0;
  std::vector<int> s_list;
  std::vector<int> x_list;  // runners of s_list
  std::vector<int> b_list;  // b_1 = s_1 + e, then later beads on those runners
  std::vector<int> t_list;  // t_1 .. t_l, where l = b_list.size()
  int c = 0;
  AbacusDisplay before;
  AbacusDisplay after;

  std::span<const int> t_prefix() const noexcept {
    return std::span<const int>(t_list).first(static_cast<std::size_t>(c));
  }
};

// Default bead count: max(1, number of parts).
int default_bead_count(const Partition& lambda);

// Throws TooFewBeads when s is below the number of parts.
BetaSet beta_set(const Partition& lambda, int s);

AbacusDisplay abacus_from_partition(const Partition& lambda, int e, int s);
AbacusDisplay abacus_from_partition(const Partition& lambda, int e);

Partition partition_from_abacus(const AbacusDisplay& abacus);

// A bead b and k >= 1 with b - k*e empty and exactly k*(e - i) beads strictly
// between. Picks the largest empty end b - k*e, then the smallest k.
std::optional<AbacusHook> find_abacus_ei_hook(const AbacusDisplay& abacus, int i);

// Every such (b, k); in bijection with find_ei_hooks on the decoded partition.
std::vector<AbacusHook> all_abacus_ei_hooks(const AbacusDisplay& abacus, int i);

// Largest empty s_1 with s_1 + e occupied and exactly i empty positions in
// [s_1, s_1 + e). Only hooks with k = 1 show up here.
std::optional<SPositions> find_s_positions(const AbacusDisplay& abacus, int i);

// One bead-moving step. Beads b_1..b_c move one place up their runners, then
// beads move one place down into t_1..t_c, each phase in increasing k; a move
// onto a bead or off an empty position throws InternalMoveConflict. Throws
// NoHook when find_s_positions finds nothing.
PhiTrace phi_step(const AbacusDisplay& abacus, int i);

// Ladder of the rim node attached to the empty position pos: column m + 1 and
// row (beads above pos), with m the number of empty positions below pos.
// Throws PositionOccupied or NoBeadAbove.
LadderKey ladder_index_of_empty_position(const AbacusDisplay& abacus, int i, int pos);

// Ladders of the e nodes removed by sliding the bead s_1 + e down to s_1:
// l_{s_j} - k*i for 0 <= k <= k_j, where k_j counts the beads between s_j and
// the next s (or s_1 + e).
std::vector<LadderKey> predicted_rim_ladders(const AbacusDisplay& abacus,
                                             const SPositions& s, int i);

}  // namespace eireg
