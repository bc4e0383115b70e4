#include "qdet/cycles.hpp"

#include "qdet/error.hpp"

#include <string>

namespace qdet {

std::span<const std::size_t> CycleDecomposition::cycle(std::size_t t) const {
  const std::size_t begin = starts_.at(t);
  const std::size_t end = t + 1 < starts_.size() ? starts_[t + 1] : elements_.size();
  return std::span<const std::size_t>(elements_).subspan(begin, end - begin);
}

namespace {

// Appends the cycle through `leader` to `out`. Left order starts the cycle
// at the leader; right order ends it there.
void append_cycle(std::span<const std::size_t> images, std::size_t leader, CycleOrder order,
                  std::vector<std::size_t>& out, std::vector<char>& seen) {
  std::size_t x = order == CycleOrder::Left ? leader : images[leader - 1];
  while (true) {
    out.push_back(x);
    seen[x - 1] = 1;
    if (order == CycleOrder::Right && x == leader) {
      break;
    }
    x = images[x - 1];
    if (order == CycleOrder::Left && x == leader) {
      break;
    }
  }
}

} // namespace

void canonicalize_unchecked(std::span<const std::size_t> images, std::size_t anchor,
                            CycleOrder order, CycleDecomposition& out, std::vector<char>& seen) {
  const std::size_t n = images.size();
  out.anchor_ = anchor;
  out.order_ = order;
  out.elements_.clear();
  out.starts_.clear();
  seen.assign(n, 0);

  if (order == CycleOrder::Left) {
    out.starts_.push_back(0);
    append_cycle(images, anchor, order, out.elements_, seen);
    for (std::size_t m = 1; m <= n; ++m) {
      if (!seen[m - 1]) {
        out.starts_.push_back(out.elements_.size());
        append_cycle(images, m, order, out.elements_, seen);
      }
    }
    return;
  }

  // Mark the anchor's cycle first so the remaining minima can be collected,
  // then emit them largest first and the anchor's cycle last.
  for (std::size_t x = anchor;;) {
    seen[x - 1] = 1;
    x = images[x - 1];
    if (x == anchor) {
      break;
    }
  }
  std::vector<std::size_t> leaders;
  for (std::size_t m = 1; m <= n; ++m) {
    if (!seen[m - 1]) {
      leaders.push_back(m);
      for (std::size_t x = m;;) {
        seen[x - 1] = 1;
        x = images[x - 1];
        if (x == m) {
          break;
        }
      }
    }
  }
  for (auto it = leaders.rbegin(); it != leaders.rend(); ++it) {
    out.starts_.push_back(out.elements_.size());
    append_cycle(images, *it, order, out.elements_, seen);
  }
  out.starts_.push_back(out.elements_.size());
  append_cycle(images, anchor, order, out.elements_, seen);
}

CycleDecomposition canonical_cycles(std::span<const std::size_t> images, std::size_t anchor,
                                    CycleOrder order) {
  const std::size_t n = images.size();
  if (n == 0) {
    throw Error(ErrorCode::InvalidPermutation, "empty permutation");
  }
  std::vector<char> hit(n, 0);
  for (std::size_t v : images) {
    if (v < 1 || v > n || hit[v - 1]) {
      throw Error(ErrorCode::InvalidPermutation,
                  "not a bijection on {1.." + std::to_string(n) + "}");
    }
    hit[v - 1] = 1;
  }
  if (anchor < 1 || anchor > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "anchor " + std::to_string(anchor) + " outside 1.." + std::to_string(n));
  }
  CycleDecomposition out;
  canonicalize_unchecked(images, anchor, order, out, hit);
  return out;
}

} // namespace qdet
