#include "subnorm/products.hpp"

#include "subnorm/errors.hpp"

namespace subnorm {

namespace {

Permutation embed_block(const Permutation& p, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    images[offset + i] = static_cast<Point>(offset + p[i]);
  }
  return Permutation::from_images_unchecked(std::move(images));
}

}  // namespace

Group direct_product(const Group& a, const Group& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(embed_block(g, 0, degree));
  for (const auto& g : b.generators()) gens.push_back(embed_block(g, a.degree(), degree));
  return Group::from_generators(std::move(gens), a.caps());
}

Group power_wreath(const Group& l, std::size_t k, const Group& top) {
  if (k == 0) throw DomainError("power_wreath needs k >= 1");
  if (top.degree() != k) {
    throw DomainError("top group acts on " + std::to_string(top.degree()) +
                      " points, expected " + std::to_string(k));
  }
  const std::size_t d = l.degree();
  const std::size_t degree = d * k;
  std::vector<Permutation> gens;
  for (std::size_t block = 0; block < k; ++block) {
    for (const auto& g : l.generators()) gens.push_back(embed_block(g, block * d, degree));
  }
  for (const auto& t : top.generators()) gens.push_back(wreath_top_element(d, t));
  return Group::from_generators(std::move(gens), l.caps());
}

Permutation wreath_base_element(const std::vector<Permutation>& components) {
  if (components.empty()) throw DomainError("wreath base element needs components");
  const std::size_t d = components.front().degree();
  std::vector<Point> images(d * components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].degree() != d) throw DomainError("component degree mismatch");
    for (std::size_t j = 0; j < d; ++j) {
      images[i * d + j] = static_cast<Point>(i * d + components[i][j]);
    }
  }
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation wreath_top_element(std::size_t block_degree, const Permutation& sigma) {
  const std::size_t k = sigma.degree();
  std::vector<Point> images(block_degree * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < block_degree; ++j) {
      images[i * block_degree + j] = static_cast<Point>(sigma[i] * block_degree + j);
    }
  }
  return Permutation::from_images_unchecked(std::move(images));
}

std::optional<WreathParts> split_wreath_element(std::size_t block_degree, std::size_t k,
                                                const Permutation& g) {
  if (g.degree() != block_degree * k) return std::nullopt;
  std::vector<Point> sigma(k);
  std::vector<Permutation> base;
  for (std::size_t i = 0; i < k; ++i) {
    sigma[i] = static_cast<Point>(g[i * block_degree] / block_degree);
    std::vector<Point> component(block_degree);
    for (std::size_t j = 0; j < block_degree; ++j) {
      Point img = g[i * block_degree + j];
      if (img / block_degree != sigma[i]) return std::nullopt;
      component[j] = static_cast<Point>(img % block_degree);
    }
    base.push_back(Permutation(std::move(component)));
  }
  return WreathParts{std::move(base), Permutation(std::move(sigma))};
}

}  // namespace subnorm
