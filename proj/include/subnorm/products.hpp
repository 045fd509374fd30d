#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subnorm/group.hpp"

namespace subnorm {

/// A x B acting on disjoint point sets: A on 0..deg(A)-1, B shifted after it.
Group direct_product(const Group& a, const Group& b);

/// L^k extended by `top` (a group of degree k permuting the blocks).
/// Block i occupies points i*deg(L) .. (i+1)*deg(L)-1.
Group power_wreath(const Group& l, std::size_t k, const Group& top);

/// Element (v_0, ..., v_{k-1}) of the base group.
Permutation wreath_base_element(const std::vector<Permutation>& components);

/// Pure block permutation: point (i, j) -> (sigma(i), j).
Permutation wreath_top_element(std::size_t block_degree, const Permutation& sigma);

/// v sigma with v in the base (apply v, then sigma).
struct WreathParts {
  std::vector<Permutation> base;
  Permutation top;
};

/// Splits a block-preserving permutation; nullopt if it does not preserve the blocks.
std::optional<WreathParts> split_wreath_element(std::size_t block_degree, std::size_t k,
                                                const Permutation& g);

}  // namespace subnorm
