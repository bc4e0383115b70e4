#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qdet {

// Which side the anchor's cycle sits on.
//  Left:  anchor cycle first, written (anchor, s(anchor), ...); the other
//         cycles follow, each opened by its minimum, minima ascending.
//  Right: anchor cycle last, written (s(anchor), ..., anchor); the other
//         cycles precede it, each closed by its minimum, minima descending
//         from left to right.
enum class CycleOrder { Left, Right };

// A permutation of {1..n} written in canonical cycle notation relative to an
// anchor index. Fixed points are kept as length-1 cycles.
class CycleDecomposition {
public:
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t anchor() const noexcept { return anchor_; }
  CycleOrder order() const noexcept { return order_; }

  // Number of cycles r, counting fixed points.
  std::size_t cycle_count() const noexcept { return starts_.size(); }
  // Cycle t (0-based position, left to right); elements are 1-based.
  std::span<const std::size_t> cycle(std::size_t t) const;

  // (-1)^(n - r).
  int sign() const noexcept { return (size() - cycle_count()) % 2 == 0 ? 1 : -1; }

  // Calls f(row, col) for every factor a_{row,col} of the permutation's
  // monomial, in multiplication order. Indices are 1-based.
  template <class F> void for_each_factor(F&& f) const {
    for (std::size_t t = 0; t < cycle_count(); ++t) {
      const auto c = cycle(t);
      const std::size_t len = c.size();
      if (order_ == CycleOrder::Left) {
        for (std::size_t s = 0; s < len; ++s) {
          f(c[s], c[(s + 1) % len]);
        }
      } else {
        f(c[len - 1], c[0]);
        for (std::size_t s = 0; s + 1 < len; ++s) {
          f(c[s], c[s + 1]);
        }
      }
    }
  }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

private:
  friend void canonicalize_unchecked(std::span<const std::size_t>, std::size_t, CycleOrder,
                                     CycleDecomposition&, std::vector<char>&);

  std::size_t anchor_ = 0;
  CycleOrder order_ = CycleOrder::Left;
  std::vector<std::size_t> elements_;
  std::vector<std::size_t> starts_;
};

// `images[x-1]` is the image of x under the permutation. Throws
// Error(InvalidPermutation) unless `images` is a bijection on {1..n}, and
// Error(IndexOutOfRange) unless 1 <= anchor <= n.
CycleDecomposition canonical_cycles(std::span<const std::size_t> images, std::size_t anchor,
                                    CycleOrder order);

// Same as canonical_cycles without validation, reusing `out` and `seen`.
void canonicalize_unchecked(std::span<const std::size_t> images, std::size_t anchor,
                            CycleOrder order, CycleDecomposition& out, std::vector<char>& seen);

} // namespace qdet
