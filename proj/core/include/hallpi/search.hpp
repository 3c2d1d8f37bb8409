#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hallpi/error.hpp"
#include "hallpi/group.hpp"

namespace hallpi {

/// Thrown when a backtrack search hits its node cap.  Callers turn this
/// into an "indeterminate" answer, never into a negative one.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct SearchBudget {
  std::uint64_t node_cap = 10'000'000;
  std::uint64_t nodes = 0;

  void charge() {
    if (++nodes > node_cap) throw SearchBudgetExceeded("backtrack node cap reached");
  }
};

/// Rejects a partial element given the images of the first base points of
/// the search group (images.size() >= 1).  Must be a necessary condition for
/// membership in the searched set.
using ImageFilter = std::function<bool(std::span<const Point> images)>;
using ElementProperty = std::function<bool(const Permutation&)>;

/// Finds g in `g` with h^g == k, searching over base images of g's chain.
///
/// Pruning: at depth i the image of the i-th base point must have the same
/// orbit length under the pointwise stabilizer of the earlier images in k as
/// the base point has under the matching stabilizer in h; when k <= g only
/// one candidate per orbit of that stabilizer is tried.  `prefix` fixes the
/// images of the first base points.
std::optional<Permutation> find_transporter(const Group& g, const Group& h, const Group& k,
                                            SearchBudget& budget,
                                            std::span<const Point> prefix = {});

/// The subgroup {x in g : property(x)}, which the caller guarantees is a
/// subgroup.  `seed` must lie in it.  Works level by level from the bottom
/// of g's chain, only testing one image per orbit of the part already
/// found.  `filter` prunes partial base images.
Group search_subgroup(const Group& g, const std::vector<Permutation>& seed,
                      const ElementProperty& property, const ImageFilter& filter,
                      SearchBudget& budget);

}  // namespace hallpi
