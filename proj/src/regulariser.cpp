#include "eireg/regulariser.hpp"

#include <string>

namespace eireg {

std::optional<PhiTrace> next_phi_step(const Partition& lambda, const EiParams& p, int beads) {
  const AbacusDisplay abacus = abacus_from_partition(lambda, p.e(), beads);
  auto hook = find_abacus_ei_hook(abacus, p.i());
  if (!hook) return std::nullopt;
  // The hook found has multiplicity hook->k, which is a k = 1 hook for
  // (k*e, k*i), so the loop always ends with a step.
  for (int k = 1; k <= hook->k; ++k) {
    const AbacusDisplay scaled = k == 1 ? abacus : abacus.with_runners(k * p.e());
    if (find_s_positions(scaled, k * p.i())) return phi_step(scaled, k * p.i());
  }
  throw Error(ErrorKind::InternalMoveConflict, "hook of multiplicity " +
                                                   std::to_string(hook->k) +
                                                   " without a matching s_1");
}

std::optional<PhiTrace> next_phi_step(const Partition& lambda, const EiParams& p) {
  return next_phi_step(lambda, p, default_bead_count(lambda));
}

RegResult regularise(const Partition& lambda, const EiParams& p, int beads) {
  RegResult result{lambda, lambda, {}, p};
  while (auto step = next_phi_step(result.output, p, beads)) {
    Partition next = partition_from_abacus(step->after);
    if (lex_compare(next, result.output) != std::strong_ordering::greater) {
      throw Error(ErrorKind::InternalMoveConflict, "phi step did not increase the partition");
    }
    result.output = std::move(next);
    result.steps.push_back(std::move(*step));
  }
  return result;
}

RegResult regularise(const Partition& lambda, const EiParams& p) {
  return regularise(lambda, p, default_bead_count(lambda));
}

bool is_ei_regular(const Partition& lambda, const EiParams& p) {
  return find_ei_hooks(lambda, p).empty();
}

std::optional<AbcTriple> abc_violation(const Partition& lambda, const EiParams& p, int max_row) {
  const int up_rows = p.e() - p.i();
  const int up_cols = p.i();
  for (int a = 1; a <= lambda.length(); ++a) {
    for (int b = 1; b <= lambda.part(a); ++b) {
      std::optional<Node> above;
      for (Node x{a - up_rows, b + up_cols}; x.row >= 1; x = {x.row - up_rows, x.col + up_cols}) {
        if (!lambda.contains(x)) {
          above = x;
          break;
        }
      }
      if (!above) continue;
      for (Node x{a + up_rows, b - up_cols}; x.col >= 1 && x.row <= max_row;
           x = {x.row + up_rows, x.col - up_cols}) {
        if (!lambda.contains(x)) return AbcTriple{*above, {a, b}, x};
      }
    }
  }
  return std::nullopt;
}

std::optional<AbcTriple> abc_violation(const Partition& lambda, const EiParams& p) {
  return abc_violation(lambda, p, lambda.length() + p.e());
}

Partition regularise_then_james(const Partition& lambda, const EiParams& p) {
  return regularise(regularise(lambda, p).output, EiParams(p.e(), 1)).output;
}

}  // namespace eireg
