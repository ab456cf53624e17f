#pragma once

#include <optional>
#include <vector>

#include "eireg/abacus.hpp"
#include "eireg/ladders.hpp"
#include "eireg/partition.hpp"

namespace eireg {

struct RegResult {
  Partition input;
  Partition output;
  // Consecutive phi steps; steps[k].after decodes to the input of steps[k + 1].
  // A step taken for a hook of multiplicity k runs on k*e runners with k*i.
  std::vector<PhiTrace> steps;
  EiParams params;
};

// The phi step regularise would apply to an abacus with `beads` beads, or
// nothing when lambda has no (e, i)-hook. Uses (e, i) when an s_1 exists and
// otherwise (k*e, k*i) for the smallest hook multiplicity k that has one.
std::optional<PhiTrace> next_phi_step(const Partition& lambda, const EiParams& p, int beads);
std::optional<PhiTrace> next_phi_step(const Partition& lambda, const EiParams& p);

// Applies phi steps until no (e, i)-hook is left. The result is the most
// dominant partition with lambda's ladder fingerprint.
RegResult regularise(const Partition& lambda, const EiParams& p);
RegResult regularise(const Partition& lambda, const EiParams& p, int beads);

bool is_ei_regular(const Partition& lambda, const EiParams& p);

struct AbcTriple {
  Node a;  // highest rung, outside lambda
  Node b;  // inside lambda
  Node c;  // lowest rung, outside lambda

  friend bool operator==(const AbcTriple&, const AbcTriple&) = default;
};

// Rungs A above B above C on one ladder with B in lambda and A, C outside,
// looking at rows <= max_row. B is scanned in row-major order and A, C are the
// empty rungs nearest to B. Regular partitions never have one.
std::optional<AbcTriple> abc_violation(const Partition& lambda, const EiParams& p, int max_row);

// max_row = lambda'_1 + e.
std::optional<AbcTriple> abc_violation(const Partition& lambda, const EiParams& p);

// (e, 1)-regularisation of the (e, i)-regularisation; always e-regular.
Partition regularise_then_james(const Partition& lambda, const EiParams& p);

}  // namespace eireg
