#include "eireg/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "eireg/abacus.hpp"
#include "eireg/regulariser.hpp"

namespace eireg {

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) return;
  if (n == 0) {
    visit(Partition{});
    return;
  }
  std::vector<int> parts{n};
  while (true) {
    visit(Partition(parts));
    // Drop the trailing ones, lower the last part above one, and refill with
    // the largest allowed parts.
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) return;
    const int cap = --parts.back();
    int rest = ones + 1;
    while (rest > 0) {
      parts.push_back(std::min(cap, rest));
      rest -= parts.back();
    }
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& lambda) { out.push_back(lambda); });
  return out;
}

namespace {

std::map<LadderFingerprint, std::vector<Partition>> group_by_fingerprint(
    const std::vector<Partition>& all, const EiParams& p) {
  std::map<LadderFingerprint, std::vector<Partition>> groups;
  for (const auto& lambda : all) groups[fingerprint(lambda, p)].push_back(lambda);
  return groups;
}

bool lex_greater(const Partition& a, const Partition& b) {
  return lex_compare(a, b) == std::strong_ordering::greater;
}

enum Check {
  kUniqueRep,
  kMaxDom,
  kAlgoAgree,
  kFingerprintStep,
  kLexDomStep,
  kRefine,
  kJames,
  kAbcNec,
  kHookEquiv,
  kSInv,
};

}  // namespace

std::vector<RegClass> classes(int n, const EiParams& p) {
  std::vector<RegClass> out;
  for (auto& [fp, members] : group_by_fingerprint(enumerate_partitions(n), p)) {
    RegClass cls{fp, members, {}};
    int found = 0;
    for (const auto& m : members) {
      if (find_ei_hooks(m, p).empty()) {
        cls.representative = m;
        ++found;
      }
    }
    if (found == 0) {
      throw Error(ErrorKind::NoRepresentative, "a class of partitions of " +
                                                   std::to_string(n) + " has no hook-free member");
    }
    if (found > 1) {
      throw Error(ErrorKind::MultipleRepresentatives,
                  "a class of partitions of " + std::to_string(n) +
                      " has several hook-free members");
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const RegClass& x, const RegClass& y) {
    return lex_greater(x.representative, y.representative);
  });
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "UNIQUE-REP", "MAX-DOM",   "ALGO-AGREE", "FINGERPRINT-STEP", "LEX/DOM-STEP",
      "REFINE",     "JAMES",     "ABC-NEC",    "HOOK-EQUIV",       "S-INV",
  };
  return names;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify(int n, const EiParams& p) {
  VerificationReport report;
  report.n = n;
  report.e = p.e();
  report.i = p.i();
  for (const auto& name : check_names()) report.checks.push_back({name, true, {}, {}});

  // Keeps the first counterexample per check.
  const auto fail = [&](Check id, const Partition& witness, std::string detail) {
    auto& check = report.checks[static_cast<std::size_t>(id)];
    if (!check.passed) return;
    check.passed = false;
    check.counterexample = witness;
    check.detail = std::move(detail);
  };

  const std::vector<Partition> all = enumerate_partitions(n);
  const auto groups = group_by_fingerprint(all, p);
  report.class_count = static_cast<int>(groups.size());

  for (const auto& [fp, members] : groups) {
    std::vector<Partition> hook_free;
    for (const auto& m : members) {
      if (find_ei_hooks(m, p).empty()) hook_free.push_back(m);
    }
    if (hook_free.size() != 1) {
      fail(kUniqueRep, hook_free.empty() ? members.front() : hook_free[1],
           std::to_string(hook_free.size()) + " hook-free members in one class");
    }
    const std::optional<Partition> rep =
        hook_free.size() == 1 ? std::optional<Partition>(hook_free.front()) : std::nullopt;

    if (rep) {
      if (abc_violation(*rep, p)) fail(kAbcNec, *rep, "regular partition with rungs A, B, C");
      if (p.i() == 1 && !is_e_regular(*rep, p.e())) {
        fail(kJames, *rep, "(e,1)-representative is e-singular");
      }
    }

    for (const auto& m : members) {
      if (rep && !dominates(*rep, m)) fail(kMaxDom, m, "representative does not dominate it");
      if (rep && p.i() == 1 && is_e_regular(m, p.e()) && m != *rep) {
        fail(kJames, m, "e-regular but not its own representative");
      }

      try {
        const RegResult reg = regularise(m, p);
        if (rep && reg.output != *rep) fail(kAlgoAgree, m, "regularise disagrees with the class scan");
        Partition prev = m;
        for (const auto& step : reg.steps) {
          const Partition before = partition_from_abacus(step.before);
          const Partition after = partition_from_abacus(step.after);
          if (before != prev) fail(kFingerprintStep, m, "steps do not chain");
          if (fingerprint(after, p) != fingerprint(before, p)) {
            fail(kFingerprintStep, m, "phi step changed the ladder fingerprint");
          }
          if (!lex_greater(after, before)) fail(kLexDomStep, m, "phi step not lex increasing");
          if (after == before || !dominates(after, before)) {
            fail(kLexDomStep, m, "phi step not strictly dominance increasing");
          }
          prev = after;
        }

        const int parts = m.length();
        std::optional<Partition> first_step;
        bool first = true;
        for (int s : {parts, parts + 1, parts + p.e()}) {
          auto step = next_phi_step(m, p, s);
          std::optional<Partition> stepped;
          if (step) stepped = partition_from_abacus(step->after);
          if (first) {
            first_step = stepped;
            first = false;
          } else if (stepped != first_step) {
            fail(kSInv, m, "phi result depends on the bead count " + std::to_string(s));
          }
          if (regularise(m, p, s).output != reg.output) {
            fail(kSInv, m, "regularisation depends on the bead count " + std::to_string(s));
          }
        }
      } catch (const Error& err) {
        fail(kAlgoAgree, m, std::string("regularise threw ") + to_string(err.kind()) + ": " + err.what());
      }

      const auto diagram_hooks = find_ei_hooks(m, p);
      for (int s : {m.length(), m.length() + p.e()}) {
        const AbacusDisplay abacus = abacus_from_partition(m, p.e(), s);
        const bool some = find_abacus_ei_hook(abacus, p.i()).has_value();
        const auto count = all_abacus_ei_hooks(abacus, p.i()).size();
        if (some == diagram_hooks.empty() || count != diagram_hooks.size()) {
          fail(kHookEquiv, m, "abacus and diagram disagree with " + std::to_string(s) + " beads");
        }
      }
    }
  }

  const EiParams doubled = p.scaled(2);
  for (const auto& [fp, members] : group_by_fingerprint(all, doubled)) {
    const LadderFingerprint coarse = fingerprint(members.front(), p);
    for (const auto& m : members) {
      if (fingerprint(m, p) != coarse) {
        fail(kRefine, m, "same (2e,2i) class as a partition outside its (e,i) class");
      }
    }
  }
  return report;
}

std::vector<VerificationReport> verify_all(const std::vector<VerifyJob>& jobs, unsigned workers) {
  std::vector<VerificationReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      reports[k] = verify(jobs[k].n, EiParams(jobs[k].e, jobs[k].i));
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace eireg
