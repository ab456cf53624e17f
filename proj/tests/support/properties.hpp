#pragma once

// Exhaustive property sweeps shared by the property test binary and the
// acceptance runner. Each returns the first counterexample found, described
// as text, or nothing when the property holds over the whole range.

#include <optional>
#include <string>

#include "brute.hpp"
#include "eireg/abacus.hpp"
#include "eireg/io.hpp"
#include "eireg/ladders.hpp"
#include "eireg/oracle.hpp"
#include "eireg/partition.hpp"

namespace eireg::props {

using Failure = std::optional<std::string>;

inline Failure conjugate_involution(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const Partition conj = conjugate(lambda);
      if (conjugate(conj) != lambda || conj != brute::conjugate(lambda)) {
        return "conjugate of " + format_partition(lambda);
      }
    }
  }
  return std::nullopt;
}

inline Failure hook_lengths(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const Partition conj = conjugate(lambda);
      for (const auto& x : brute::cells(lambda)) {
        const HookInfo h = hook_info(lambda, x);
        const brute::Hook ref = brute::hook(lambda, x);
        const int formula = lambda.part(x.row) - x.col + conj.part(x.col) - x.row + 1;
        if (h.hook_len != formula || h.hook_len != ref.length() || h.arm_len != ref.arm ||
            h.leg_len != ref.leg) {
          return "hook at " + format_node(x) + " of " + format_partition(lambda);
        }
      }
    }
  }
  return std::nullopt;
}

inline Failure skew_hook_removal(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& x : brute::cells(lambda)) {
        const Partition mu = remove_skew_hook(lambda, x);
        const auto expected = brute::skew_hook_removals(lambda, x);
        if (mu.size() != n - hook_info(lambda, x).hook_len || expected.size() != 1 ||
            expected.front() != mu) {
          return "removing the hook at " + format_node(x) + " of " + format_partition(lambda);
        }
      }
    }
  }
  return std::nullopt;
}

inline Failure beta_round_trip(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (int e = 2; e <= 6; ++e) {
        for (int s : {lambda.length(), lambda.length() + 1, lambda.length() + e}) {
          const AbacusDisplay abacus = abacus_from_partition(lambda, e, s);
          if (partition_from_abacus(abacus) != lambda || abacus.bead_count() != s ||
              abacus_from_partition(partition_from_abacus(abacus), e, s) != abacus) {
            return "beta round trip of " + format_partition(lambda) + " with e=" +
                   std::to_string(e) + ", s=" + std::to_string(s);
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Reflexive, antisymmetric and transitive; lex order refines it.
inline Failure dominance_axioms(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& a : all) {
      if (!dominates(a, a)) return "reflexivity at " + format_partition(a);
      for (const auto& b : all) {
        const bool ab = dominates(a, b);
        if (ab != brute::dominates(a, b)) return "dominance of " + format_partition(a) + " over " + format_partition(b);
        if (ab && dominates(b, a) && a != b) return "antisymmetry at " + format_partition(a);
        if (ab && a != b && lex_compare(a, b) != std::strong_ordering::greater) {
          return "lex does not refine dominance at " + format_partition(a);
        }
        if (!ab) continue;
        for (const auto& c : all) {
          if (dominates(b, c) && !dominates(a, c)) return "transitivity at " + format_partition(a);
        }
      }
    }
  }
  return std::nullopt;
}

// Nodes of a box share a ladder key exactly when they differ by a multiple of
// (-(e - i), i).
inline Failure ladder_parametrisation(int box, int max_e) {
  for (int e = 2; e <= max_e; ++e) {
    for (int i = 1; i < e; ++i) {
      const EiParams p(e, i);
      for (int a = 1; a <= box; ++a) {
        for (int b = 1; b <= box; ++b) {
          const LadderKey kx = ladder_key({a, b}, p);
          for (int c = 1; c <= box; ++c) {
            for (int d = 1; d <= box; ++d) {
              const bool same = ladder_key({c, d}, p) == kx;
              const bool on_orbit = (d - b) % i == 0 && (a - c) * i == (d - b) * (e - i);
              if (same != on_orbit) {
                return "nodes " + format_node({a, b}) + " and " + format_node({c, d}) +
                       " for (e,i)=(" + std::to_string(e) + "," + std::to_string(i) + ")";
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace eireg::props
