#include <algorithm>

#include <doctest.h>

#include "eireg/abacus.hpp"
#include "eireg/io.hpp"
#include "eireg/ladders.hpp"
#include "eireg/oracle.hpp"
#include "eireg/regulariser.hpp"
#include "support/brute.hpp"

using namespace eireg;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

// lambda with the bead at `from` slid to the empty position `to`.
Partition slide(const AbacusDisplay& abacus, int from, int to) {
  std::vector<int> beads = vec(abacus.beads());
  std::replace(beads.begin(), beads.end(), from, to);
  return partition_from_abacus(AbacusDisplay(abacus.runners(), beads));
}

// Minimal d in 1..l-1 with t_{d+1} < b_{d+1}, else l.
int dual_index(const PhiTrace& t) {
  const int l = static_cast<int>(t.b_list.size());
  for (int d = 1; d < l; ++d) {
    if (t.t_list[static_cast<std::size_t>(d)] < t.b_list[static_cast<std::size_t>(d)]) return d;
  }
  return l;
}

}  // namespace

TEST_CASE("beta_set") {
  CHECK(beta_set(P({9, 7, 6, 6, 4, 3, 3, 2}), 10).values ==
        std::vector<int>{18, 15, 13, 12, 9, 7, 6, 4, 1, 0});
  CHECK(beta_set(Partition{}, 0).values.empty());
  CHECK(beta_set(Partition{}, 2).values == std::vector<int>{1, 0});
  CHECK(beta_set(P({2}), 1).values == std::vector<int>{2});
  CHECK_THROWS_AS(beta_set(P({2, 1}), 1), Error);
  CHECK(default_bead_count(Partition{}) == 1);
  CHECK(default_bead_count(P({3, 1})) == 2);
}

TEST_CASE("abacus rendering") {
  const AbacusDisplay a = abacus_from_partition(P({9, 7, 6, 6, 4, 3, 3, 2}), 5, 10);
  CHECK(render_abacus(a) == "bbnnb\nnbbnb\nnnbbn\nbnnbn\nnnnnn\n");
  CHECK(render_abacus(abacus_from_partition(Partition{}, 3, 0)) == "nnn\n");
  CHECK(render_abacus(abacus_from_partition(Partition{}, 3, 1)) == "bnn\nnnn\n");
  CHECK(render_abacus(abacus_from_partition(P({1}), 2, 1)) == "nb\nnn\n");
}

TEST_CASE("AbacusDisplay validation") {
  CHECK_THROWS_AS(AbacusDisplay(1, std::vector<int>{0}), Error);
  CHECK_THROWS_AS(AbacusDisplay(3, std::vector<int>{-1}), Error);
  CHECK_THROWS_AS(AbacusDisplay(3, std::vector<int>{2, 2}), Error);
  const AbacusDisplay a(3, std::vector<int>{5, 0, 2});
  CHECK(vec(a.beads()) == std::vector<int>{0, 2, 5});
  CHECK(a.top() == 5);
  CHECK(a.beads_between(0, 5) == 1);
  CHECK(a.runner_of(5) == 2);
  CHECK(a.with_runners(4).runners() == 4);
  CHECK(partition_from_abacus(a) == P({3, 1}));
}

TEST_CASE("golden phi step") {
  const Partition lambda = P({14, 13, 5, 4, 4, 4, 4, 4, 3, 1, 1});
  const AbacusDisplay a = abacus_from_partition(lambda, 7, 11);
  CHECK(render_abacus(a) == "nbbnnbn\nbbbbbnb\nnnnnnnn\nnbnbnnn\nnnnnnnn\n");

  const PhiTrace t = phi_step(a, 4);
  CHECK(t.s1 == 0);
  CHECK(t.s_list == std::vector<int>{0, 3, 4, 6});
  CHECK(t.b_list == std::vector<int>{7, 10, 11, 13, 24});
  CHECK(vec(t.t_prefix()) == std::vector<int>{12, 15, 16, 19});
  CHECK(t.t_list.front() == 12);
  CHECK(t.t_list.at(4) == 23);
  CHECK(t.c == 4);
  CHECK(render_abacus(t.after) == "bbbbbnb\nnnnnnnn\nnbbnnbn\nnbnbnnn\nnnnnnnn\n");
  CHECK(partition_from_abacus(t.after) == P({14, 13, 11, 9, 9, 1}));
  CHECK(same_class(lambda, partition_from_abacus(t.after), EiParams(7, 4)));

  CHECK_THROWS_AS(phi_step(abacus_from_partition(P({6, 5, 3, 1, 1}), 4), 2), Error);
}

TEST_CASE("abacus hooks match diagram hooks") {
  for (int n = 0; n <= 11; ++n) {
    for (const auto& lambda : brute::partitions(n)) {
      for (int e = 2; e <= 5; ++e) {
        for (int i = 1; i < e; ++i) {
          const EiParams p(e, i);
          const auto diagram = find_ei_hooks(lambda, p);
          for (int s : {lambda.length(), lambda.length() + e}) {
            const AbacusDisplay a = abacus_from_partition(lambda, e, s);
            const auto beads = all_abacus_ei_hooks(a, i);
            CHECK(beads.size() == diagram.size());
            CHECK(find_abacus_ei_hook(a, i).has_value() == !diagram.empty());
            for (const auto& h : beads) {
              CHECK(a.occupied(h.bead));
              CHECK_FALSE(a.occupied(h.bead - h.k * e));
              CHECK(a.beads_between(h.bead - h.k * e, h.bead) == h.k * (e - i));
            }
          }
        }
      }
    }
  }
}

// Every phi step on partitions up to 12 with e up to 6.
TEST_CASE("phi step invariants") {
  int steps = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lambda : brute::partitions(n)) {
      for (int e = 2; e <= 6; ++e) {
        for (int i = 1; i < e; ++i) {
          const EiParams p(e, i);
          const AbacusDisplay a = abacus_from_partition(lambda, e);
          const auto sp = find_s_positions(a, i);
          if (!sp) continue;
          ++steps;
          const PhiTrace t = phi_step(a, i);
          const Partition mu = partition_from_abacus(t.after);
          INFO("lambda=", format_partition(lambda), " e=", e, " i=", i);

          CHECK(t.before == a);
          CHECK(t.s1 == sp->s1);
          CHECK(t.s_list == sp->s_list);
          CHECK(static_cast<int>(t.s_list.size()) == i);
          CHECK(t.b_list.front() == t.s1 + e);
          CHECK(t.t_list.front() > t.b_list.front());
          CHECK(t.t_list.size() == t.b_list.size());
          for (std::size_t j = 0; j < t.s_list.size(); ++j) {
            CHECK(t.x_list[j] == t.s_list[j] % e);
          }

          CHECK(lex_compare(mu, lambda) == std::strong_ordering::greater);
          CHECK(dominates(mu, lambda));
          CHECK(mu != lambda);
          CHECK(fingerprint(mu, p) == fingerprint(lambda, p));

          // The minimal d with t_{d+1} < b_{d+1} is never below c. It can be
          // above it, see "c and its dual index" below.
          CHECK(dual_index(t) >= t.c);
          CHECK(t.t_list[static_cast<std::size_t>(t.c - 1)] > t.b_list[static_cast<std::size_t>(t.c - 1)]);

          // One more bead shifts every position by one and changes nothing else.
          const PhiTrace shifted = phi_step(abacus_from_partition(lambda, e, lambda.length() + 1), i);
          CHECK(partition_from_abacus(shifted.after) == mu);
          CHECK(shifted.s1 == t.s1 + 1);
          CHECK(shifted.c == t.c);

          // Ladders of the e nodes removed by sliding b_1 down to s_1.
          const Partition xi = slide(a, t.s1 + e, t.s1);
          const auto big = brute::cells(lambda);
          const auto small = brute::cells(xi);
          std::vector<LadderKey> removed;
          for (const auto& x : big) {
            if (!small.count(x)) removed.push_back(ladder_key(x, p));
          }
          auto predicted = predicted_rim_ladders(a, *sp, i);
          std::sort(removed.begin(), removed.end());
          std::sort(predicted.begin(), predicted.end());
          CHECK(removed.size() == static_cast<std::size_t>(e));
          CHECK(predicted == removed);

          // The removed nodes carry every residue once.
          std::vector<int> residues;
          for (const auto& x : big) {
            if (!small.count(x)) residues.push_back(residue(x, e));
          }
          std::sort(residues.begin(), residues.end());
          for (int r = 0; r < e; ++r) CHECK(residues[static_cast<std::size_t>(r)] == r);
        }
      }
    }
  }
  CHECK(steps > 1000);
}

TEST_CASE("c and its dual index") {
  // b = (4,8), t = (6,9,...): c = 1 since t_1 < b_2, but t_2 > b_2. The step
  // is still a valid move within the class.
  const Partition lambda = P({3, 2, 2, 1, 1, 1, 1, 1});
  const PhiTrace t = phi_step(abacus_from_partition(lambda, 4), 1);
  CHECK(t.b_list == std::vector<int>{4, 8});
  CHECK(t.t_list == std::vector<int>{6, 9});
  CHECK(t.c == 1);
  CHECK(dual_index(t) == 2);
  CHECK(partition_from_abacus(t.after) == P({3, 2, 2, 2, 2, 1}));
  CHECK(same_class(lambda, partition_from_abacus(t.after), EiParams(4, 1)));
}

TEST_CASE("ladder_index_of_empty_position") {
  const AbacusDisplay a = abacus_from_partition(P({14, 13, 5, 4, 4, 4, 4, 4, 3, 1, 1}), 7, 11);
  CHECK(ladder_index_of_empty_position(a, 4, 0).l == 41);
  CHECK(ladder_index_of_empty_position(a, 4, 0) == ladder_key({11, 1}, EiParams(7, 4)));

  const AbacusDisplay one = abacus_from_partition(P({1}), 2, 1);
  CHECK(ladder_index_of_empty_position(one, 1, 0) == LadderKey{1, 0});

  CHECK_THROWS_AS(ladder_index_of_empty_position(a, 4, 1), Error);   // occupied
  CHECK_THROWS_AS(ladder_index_of_empty_position(a, 4, 40), Error);  // nothing above
  CHECK_THROWS_AS(ladder_index_of_empty_position(a, 4, -1), Error);

  // Against the node it names: column (empties below) + 1, row (beads above).
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lambda : brute::partitions(n)) {
      for (int e = 2; e <= 5; ++e) {
        for (int i = 1; i < e; ++i) {
          const AbacusDisplay ab = abacus_from_partition(lambda, e, lambda.length() + 2);
          int empties = 0;
          for (int pos = 0; pos < ab.top(); ++pos) {
            if (ab.occupied(pos)) continue;
            const Node x{ab.bead_count() - ab.beads_between(-1, pos), empties + 1};
            CHECK(lambda.contains(x));
            CHECK(ladder_index_of_empty_position(ab, i, pos) == ladder_key(x, EiParams(e, i)));
            ++empties;
          }
        }
      }
    }
  }
}
