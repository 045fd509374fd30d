#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "subnorm/permutation.hpp"
#include "subnorm/stab_chain.hpp"

namespace subnorm {

/// Position of an element inside an ElementStore.
using Index = std::uint32_t;
inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();

/// Complete, lexicographically sorted element list of a group with O(base)
/// multiplication by index. Index 0 is always the identity.
///
/// Elements are located by their images of the chain's base points, which
/// determine a group element uniquely.
class ElementStore {
 public:
  explicit ElementStore(const StabChain& chain);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t degree() const noexcept { return degree_; }

  std::span<const Point> images(Index i) const {
    return {images_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation element(Index i) const;

  /// a then b
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  /// g^-1 x g
  Index conj(Index x, Index g) const { return mul(mul(inverse_[g], x), g); }
  Index pow(Index a, std::uint64_t e) const;
  std::uint64_t order_of(Index i) const { return order_[i]; }

  /// kNoIndex when p is not an element (or has the wrong degree).
  Index index_of(const Permutation& p) const;
  Index index_of(std::span<const Point> images) const;

 private:
  enum class KeyMode { dense, packed, generic };

  template <typename ImageOf>
  Index lookup(ImageOf&& image_of) const;

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Point> images_;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> order_;

  KeyMode mode_ = KeyMode::generic;
  unsigned bits_ = 0;
  std::vector<Index> dense_;
  std::unordered_map<std::uint64_t, Index> packed_;
  std::map<std::vector<Point>, Index> generic_;
};

}  // namespace subnorm
