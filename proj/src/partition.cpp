#include "eireg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace eireg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorKind::NegativePart: return "NegativePart";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NodeOutsideDiagram: return "NodeOutsideDiagram";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::TooFewBeads: return "TooFewBeads";
    case ErrorKind::InvalidAbacus: return "InvalidAbacus";
    case ErrorKind::NoHook: return "NoHook";
    case ErrorKind::InternalMoveConflict: return "InternalMoveConflict";
    case ErrorKind::PositionOccupied: return "PositionOccupied";
    case ErrorKind::NoBeadAbove: return "NoBeadAbove";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NoRepresentative: return "NoRepresentative";
    case ErrorKind::MultipleRepresentatives: return "MultipleRepresentatives";
  }
  return "Unknown";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) {
      throw Error(ErrorKind::NegativePart,
                  "negative part " + std::to_string(parts_[k]));
    }
    if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
      throw Error(ErrorKind::NotWeaklyDecreasing,
                  "parts not weakly decreasing at index " + std::to_string(k + 1));
    }
  }
  // A zero followed by a positive part was rejected above, so every part is now positive.
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

EiParams::EiParams(int e, int i) : e_(e), i_(i) {
  if (e < 2 || i < 1 || i >= e) {
    throw Error(ErrorKind::InvalidParams,
                "need e >= 2 and 0 < i < e, got e=" + std::to_string(e) +
                    ", i=" + std::to_string(i));
  }
}

bool EiParams::coprime() const noexcept { return std::gcd(e_, i_) == 1; }

Partition make_partition(std::span<const int> seq) {
  return Partition(std::vector<int>(seq.begin(), seq.end()));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int part : lambda.parts()) {
    for (int b = 0; b < part; ++b) ++cols[static_cast<std::size_t>(b)];
  }
  return Partition(std::move(cols));
}

int residue(Node x, int e) {
  const int r = (x.col - x.row) % e;
  return r < 0 ? r + e : r;
}

namespace {

void require_node(const Partition& lambda, Node x) {
  if (!lambda.contains(x)) {
    throw Error(ErrorKind::NodeOutsideDiagram,
                "node (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                    ") is not in the diagram");
  }
}

HookInfo hook_with_conjugate(const Partition& lambda, const Partition& conj, Node x) {
  HookInfo h;
  h.corner = x;
  h.arm_len = lambda.part(x.row) - x.col;
  h.leg_len = conj.part(x.col) - x.row;
  h.hook_len = h.arm_len + h.leg_len + 1;
  h.foot = {x.row + h.leg_len, x.col};
  h.hand = {x.row, x.col + h.arm_len};
  return h;
}

void require_same_size(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "partitions of different sizes " + std::to_string(lambda.size()) +
                    " and " + std::to_string(mu.size()));
  }
}

}  // namespace

HookInfo hook_info(const Partition& lambda, Node x) {
  require_node(lambda, x);
  return hook_with_conjugate(lambda, conjugate(lambda), x);
}

std::vector<Node> rim(const Partition& lambda) {
  std::vector<Node> out;
  for (int col = 1; col <= lambda.part(1); ++col) {
    // Column col runs from row 1 down to conj[col]; only its lowest cells can
    // miss the diagonal neighbour.
    int bottom = 0;
    while (lambda.part(bottom + 1) >= col) ++bottom;
    for (int row = bottom; row >= 1; --row) {
      if (lambda.contains({row + 1, col + 1})) break;
      out.push_back({row, col});
    }
  }
  return out;
}

Partition remove_skew_hook(const Partition& lambda, Node x) {
  const HookInfo h = hook_info(lambda, x);
  const int s = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(s));
  for (int k = 1; k <= s; ++k) beta[static_cast<std::size_t>(k - 1)] = lambda.part(k) + s - k;
  beta[static_cast<std::size_t>(x.row - 1)] -= h.hook_len;
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts(static_cast<std::size_t>(s));
  for (int k = 1; k <= s; ++k) {
    parts[static_cast<std::size_t>(k - 1)] = beta[static_cast<std::size_t>(k - 1)] - (s - k);
  }
  return Partition(std::move(parts));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu);
  int lhs = 0;
  int rhs = 0;
  const int rows = std::max(lambda.length(), mu.length());
  for (int j = 1; j <= rows; ++j) {
    lhs += lambda.part(j);
    rhs += mu.part(j);
    if (lhs < rhs) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu);
  const int rows = std::max(lambda.length(), mu.length());
  for (int j = 1; j <= rows; ++j) {
    if (auto c = lambda.part(j) <=> mu.part(j); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<EiHook> find_ei_hooks(const Partition& lambda, const EiParams& p) {
  std::vector<EiHook> out;
  const Partition conj = conjugate(lambda);
  for (int a = 1; a <= lambda.length(); ++a) {
    for (int b = 1; b <= lambda.part(a); ++b) {
      const HookInfo h = hook_with_conjugate(lambda, conj, {a, b});
      if (h.hook_len % p.e() != 0) continue;
      const int k = h.hook_len / p.e();
      if (h.leg_len == k * (p.e() - p.i())) out.push_back({{a, b}, k});
    }
  }
  return out;
}

bool is_e_regular(const Partition& lambda, int e) {
  int run = 0;
  for (int a = 1; a <= lambda.length(); ++a) {
    run = (a > 1 && lambda.part(a) == lambda.part(a - 1)) ? run + 1 : 1;
    if (run >= e) return false;
  }
  return true;
}

}  // namespace eireg
