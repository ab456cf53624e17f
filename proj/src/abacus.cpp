#include "eireg/abacus.hpp"

#include <algorithm>
#include <string>

namespace eireg {

namespace {

void require_i(const AbacusDisplay& abacus, int i) {
  if (i < 1 || i >= abacus.runners()) {
    throw Error(ErrorKind::InvalidParams,
                "need 0 < i < e, got e=" + std::to_string(abacus.runners()) +
                    ", i=" + std::to_string(i));
  }
}

// Mutable bead layout used while phi_step moves beads around.
class Board {
 public:
  explicit Board(const AbacusDisplay& abacus)
      : cells_(static_cast<std::size_t>(abacus.top() + 1), 0) {
    for (int p : abacus.beads()) cells_[static_cast<std::size_t>(p)] = 1;
  }

  bool occupied(int pos) const {
    return pos >= 0 && pos < static_cast<int>(cells_.size()) &&
           cells_[static_cast<std::size_t>(pos)] != 0;
  }

  void move(int from, int to) {
    if (!occupied(from) || to < 0 || occupied(to)) {
      throw Error(ErrorKind::InternalMoveConflict,
                  "cannot move bead " + std::to_string(from) + " -> " + std::to_string(to));
    }
    if (to >= static_cast<int>(cells_.size())) cells_.resize(static_cast<std::size_t>(to) + 1, 0);
    cells_[static_cast<std::size_t>(from)] = 0;
    cells_[static_cast<std::size_t>(to)] = 1;
  }

  std::vector<int> beads() const {
    std::vector<int> out;
    for (std::size_t p = 0; p < cells_.size(); ++p) {
      if (cells_[p] != 0) out.push_back(static_cast<int>(p));
    }
    return out;
  }

 private:
  std::vector<char> cells_;
};

}  // namespace

AbacusDisplay::AbacusDisplay(int runners, std::span<const int> occupied)
    : runners_(runners), beads_(occupied.begin(), occupied.end()) {
  if (runners < 2) {
    throw Error(ErrorKind::InvalidAbacus, "an abacus needs at least 2 runners");
  }
  std::sort(beads_.begin(), beads_.end());
  if (!beads_.empty() && beads_.front() < 0) {
    throw Error(ErrorKind::InvalidAbacus, "negative bead position");
  }
  if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end()) {
    throw Error(ErrorKind::InvalidAbacus, "two beads on one position");
  }
}

bool AbacusDisplay::occupied(int pos) const noexcept {
  return std::binary_search(beads_.begin(), beads_.end(), pos);
}

int AbacusDisplay::beads_between(int lo, int hi) const noexcept {
  if (hi <= lo + 1) return 0;
  auto first = std::upper_bound(beads_.begin(), beads_.end(), lo);
  auto last = std::lower_bound(beads_.begin(), beads_.end(), hi);
  return static_cast<int>(last - first);
}

AbacusDisplay AbacusDisplay::with_runners(int runners) const {
  return AbacusDisplay(runners, beads_);
}

int default_bead_count(const Partition& lambda) { return std::max(1, lambda.length()); }

BetaSet beta_set(const Partition& lambda, int s) {
  if (s < lambda.length()) {
    throw Error(ErrorKind::TooFewBeads, std::to_string(s) + " beads for " +
                                            std::to_string(lambda.length()) + " parts");
  }
  BetaSet out;
  out.values.reserve(static_cast<std::size_t>(s));
  for (int k = 1; k <= s; ++k) out.values.push_back(lambda.part(k) + s - k);
  return out;
}

AbacusDisplay abacus_from_partition(const Partition& lambda, int e, int s) {
  return AbacusDisplay(e, beta_set(lambda, s).values);
}

AbacusDisplay abacus_from_partition(const Partition& lambda, int e) {
  return abacus_from_partition(lambda, e, default_bead_count(lambda));
}

Partition partition_from_abacus(const AbacusDisplay& abacus) {
  const auto beads = abacus.beads();
  const int s = abacus.bead_count();
  std::vector<int> parts(static_cast<std::size_t>(s));
  // beads() is ascending, so the k-th largest bead is beads[s - k].
  for (int k = 1; k <= s; ++k) {
    parts[static_cast<std::size_t>(k - 1)] = beads[static_cast<std::size_t>(s - k)] - (s - k);
  }
  return Partition(std::move(parts));
}

std::vector<AbacusHook> all_abacus_ei_hooks(const AbacusDisplay& abacus, int i) {
  require_i(abacus, i);
  const int e = abacus.runners();
  std::vector<AbacusHook> out;
  for (int foot = abacus.top() - e; foot >= 0; --foot) {
    if (abacus.occupied(foot)) continue;
    for (int k = 1; foot + k * e <= abacus.top(); ++k) {
      const int bead = foot + k * e;
      if (abacus.occupied(bead) && abacus.beads_between(foot, bead) == k * (e - i)) {
        out.push_back({bead, k});
      }
    }
  }
  return out;
}

std::optional<AbacusHook> find_abacus_ei_hook(const AbacusDisplay& abacus, int i) {
  // all_abacus_ei_hooks lists feet from the top down and k upwards.
  auto hooks = all_abacus_ei_hooks(abacus, i);
  if (hooks.empty()) return std::nullopt;
  return hooks.front();
}

std::optional<SPositions> find_s_positions(const AbacusDisplay& abacus, int i) {
  require_i(abacus, i);
  const int e = abacus.runners();
  for (int s1 = abacus.top() - e; s1 >= 0; --s1) {
    if (abacus.occupied(s1) || !abacus.occupied(s1 + e)) continue;
    SPositions out{s1, {}};
    for (int p = s1; p < s1 + e; ++p) {
      if (!abacus.occupied(p)) out.s_list.push_back(p);
    }
    if (static_cast<int>(out.s_list.size()) == i) return out;
  }
  return std::nullopt;
}

PhiTrace phi_step(const AbacusDisplay& abacus, int i) {
  auto s = find_s_positions(abacus, i);
  if (!s) throw Error(ErrorKind::NoHook, "no empty s_1 with a bead at s_1 + e");

  const int e = abacus.runners();
  PhiTrace trace;
  trace.s1 = s->s1;
  trace.s_list = s->s_list;
  trace.before = abacus;

  std::vector<bool> s_runner(static_cast<std::size_t>(e), false);
  for (int p : trace.s_list) {
    trace.x_list.push_back(abacus.runner_of(p));
    s_runner[static_cast<std::size_t>(abacus.runner_of(p))] = true;
  }
  const auto on_s_runner = [&](int p) { return s_runner[static_cast<std::size_t>(p % e)]; };

  const int b1 = trace.s1 + e;
  trace.b_list.push_back(b1);
  for (int p : abacus.beads()) {
    if (p > b1 && on_s_runner(p)) trace.b_list.push_back(p);
  }
  const int l = static_cast<int>(trace.b_list.size());

  // Every position above the top bead is empty, so this stops.
  for (int p = trace.s_list.back() + 1; static_cast<int>(trace.t_list.size()) < l; ++p) {
    if (!abacus.occupied(p) && !on_s_runner(p)) trace.t_list.push_back(p);
  }

  trace.c = l;
  for (int c = 1; c < l; ++c) {
    if (trace.t_list[static_cast<std::size_t>(c - 1)] < trace.b_list[static_cast<std::size_t>(c)]) {
      trace.c = c;
      break;
    }
  }

  Board board(abacus);
  for (int k = 0; k < trace.c; ++k) {
    const int b = trace.b_list[static_cast<std::size_t>(k)];
    board.move(b, b - e);
  }
  for (int k = 0; k < trace.c; ++k) {
    const int t = trace.t_list[static_cast<std::size_t>(k)];
    board.move(t - e, t);
  }
  trace.after = AbacusDisplay(e, board.beads());
  return trace;
}

LadderKey ladder_index_of_empty_position(const AbacusDisplay& abacus, int i, int pos) {
  require_i(abacus, i);
  if (pos < 0) throw Error(ErrorKind::InvalidAbacus, "negative position");
  if (abacus.occupied(pos)) {
    throw Error(ErrorKind::PositionOccupied, "position " + std::to_string(pos) + " holds a bead");
  }
  const int beads_below = abacus.beads_between(-1, pos);
  const int beads_above = abacus.bead_count() - beads_below;
  if (beads_above == 0) {
    throw Error(ErrorKind::NoBeadAbove, "no bead above position " + std::to_string(pos));
  }
  const int e = abacus.runners();
  const int m = pos - beads_below;  // empty positions below pos
  const int l = e * m + (abacus.bead_count() - pos - 1) * i + 1;
  const int r = ((pos + 1 - abacus.bead_count()) % e + e) % e;
  return {l, r};
}

std::vector<LadderKey> predicted_rim_ladders(const AbacusDisplay& abacus,
                                             const SPositions& s, int i) {
  const int e = abacus.runners();
  std::vector<LadderKey> out;
  for (std::size_t j = 0; j < s.s_list.size(); ++j) {
    const int sj = s.s_list[j];
    const int next = j + 1 < s.s_list.size() ? s.s_list[j + 1] : s.s1 + e;
    const int kj = abacus.beads_between(sj, next);
    const LadderKey base = ladder_index_of_empty_position(abacus, i, sj);
    // Each bead step lowers l by i and raises the residue by one.
    for (int k = 0; k <= kj; ++k) out.push_back({base.l - k * i, (base.r + k) % e});
  }
  return out;
}

}  // namespace eireg
