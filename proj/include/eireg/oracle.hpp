#pragma once

// Brute-force ground truth: enumerate every partition of n, group them by
// ladder fingerprint and check the structural claims class by class. Class
// representatives are found by scanning members for the one without
// (e, i)-hooks, never through phi, so comparing them against regularise
// checks one implementation against another.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eireg/ladders.hpp"
#include "eireg/partition.hpp"

namespace eireg {

// Calls visit on every partition of n, in lex-descending order.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(int n);

struct RegClass {
  LadderFingerprint fingerprint;
  std::vector<Partition> members;  // lex descending
  Partition representative;
};

// Classes ordered by representative, lex descending. Throws NoRepresentative
// or MultipleRepresentatives when a class does not have exactly one hook-free
// member.
std::vector<RegClass> classes(int n, const EiParams& p);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<Partition> counterexample;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  int e = 0;
  int i = 0;
  int class_count = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

// Check names, in report order.
const std::vector<std::string>& check_names();

VerificationReport verify(int n, const EiParams& p);

// verify over many (n, e, i), sharded across `workers` threads. Reports come
// back in job order whatever the worker count.
struct VerifyJob {
  int n;
  int e;
  int i;
};
std::vector<VerificationReport> verify_all(const std::vector<VerifyJob>& jobs, unsigned workers);

}  // namespace eireg
