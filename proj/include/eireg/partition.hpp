#pragma once

// Integer partitions and Young-diagram geometry.
//
// Rows and columns are 1-indexed on every interface: the node (a, b) sits in
// row a, column b, and belongs to the diagram of a partition when b <= parts[a].

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "eireg/error.hpp"

namespace eireg {

struct Node {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Node&, const Node&) = default;
};

class Partition {
 public:
  Partition() = default;

  // Strips trailing zeros; throws NotWeaklyDecreasing or NegativePart.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }

  // Number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  // |lambda|.
  int size() const noexcept { return size_; }

  bool empty() const noexcept { return parts_.empty(); }

  // parts[row], 1-indexed, 0 beyond the last part.
  int part(int row) const noexcept {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  bool contains(Node x) const noexcept {
    return x.row >= 1 && x.col >= 1 && x.col <= part(x.row);
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// (e, i) with e >= 2 and 0 < i < e.
class EiParams {
 public:
  EiParams(int e, int i);

  int e() const noexcept { return e_; }
  int i() const noexcept { return i_; }

  // (k*e, k*i): every (k*e, k*i)-ladder lies inside one (e, i)-ladder.
  EiParams scaled(int k) const { return EiParams(k * e_, k * i_); }

  bool coprime() const noexcept;

  friend bool operator==(const EiParams&, const EiParams&) = default;

 private:
  int e_;
  int i_;
};

struct HookInfo {
  Node corner;
  int hook_len = 0;
  int arm_len = 0;
  int leg_len = 0;
  // Lowest node of the leg and rightmost node of the arm; both equal the
  // corner when the leg (resp. arm) is empty.
  Node foot;
  Node hand;
};

// A node whose hook has length k*e and leg length k*(e-i).
struct EiHook {
  Node node;
  int k = 0;

  friend bool operator==(const EiHook&, const EiHook&) = default;
};

Partition make_partition(std::span<const int> seq);

Partition conjugate(const Partition& lambda);

// (col - row) mod e, in [0, e).
int residue(Node x, int e);

HookInfo hook_info(const Partition& lambda, Node x);

// Nodes (c, d) of lambda with (c+1, d+1) outside lambda, from bottom-left to
// top-right: increasing column, and decreasing row within a column.
std::vector<Node> rim(const Partition& lambda);

// Removes the rim hook matching the hook at x. Works on the beta-set: the
// beta number of row x.row drops by the hook length.
Partition remove_skew_hook(const Partition& lambda, Node x);

// lambda dominates mu (partial sums). Throws SizeMismatch.
bool dominates(const Partition& lambda, const Partition& mu);

// Lexicographic order on partitions of the same n. Throws SizeMismatch.
std::strong_ordering lex_compare(const Partition& lambda, const Partition& mu);

// Every (x, k) where x's hook has length k*e and leg k*(e-i), in row-major
// order of x.
std::vector<EiHook> find_ei_hooks(const Partition& lambda, const EiParams& p);

// No e equal nonzero parts.
bool is_e_regular(const Partition& lambda, int e);

}  // namespace eireg
