#include "subnorm/element_store.hpp"

#include <algorithm>

namespace subnorm {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

}  // namespace

ElementStore::ElementStore(const StabChain& chain)
    : degree_(chain.degree()), base_(chain.base()) {
  std::vector<Permutation> elems = chain.elements();
  std::sort(elems.begin(), elems.end());

  images_.reserve(elems.size() * degree_);
  order_.reserve(elems.size());
  for (const auto& e : elems) {
    images_.insert(images_.end(), e.images().begin(), e.images().end());
    order_.push_back(e.order());
  }

  std::uint64_t dense_size = 1;
  bool dense_ok = true;
  for (std::size_t i = 0; i < base_.size() && dense_ok; ++i) {
    dense_size *= degree_;
    if (dense_size > kDenseLimit) dense_ok = false;
  }
  while ((std::uint64_t{1} << bits_) < degree_) ++bits_;
  if (bits_ == 0) bits_ = 1;

  if (dense_ok) {
    mode_ = KeyMode::dense;
    dense_.assign(dense_size, kNoIndex);
  } else if (bits_ * base_.size() <= 64) {
    mode_ = KeyMode::packed;
    packed_.reserve(elems.size());
  } else {
    mode_ = KeyMode::generic;
  }

  for (Index i = 0; i < elems.size(); ++i) {
    auto img = images(i);
    switch (mode_) {
      case KeyMode::dense: {
        std::uint64_t key = 0;
        for (Point b : base_) key = key * degree_ + img[b];
        dense_[key] = i;
        break;
      }
      case KeyMode::packed: {
        std::uint64_t key = 0;
        for (Point b : base_) key = (key << bits_) | img[b];
        packed_.emplace(key, i);
        break;
      }
      case KeyMode::generic: {
        std::vector<Point> key;
        for (Point b : base_) key.push_back(img[b]);
        generic_.emplace(std::move(key), i);
        break;
      }
    }
  }

  inverse_.resize(elems.size());
  for (Index i = 0; i < elems.size(); ++i) {
    inverse_[i] = index_of(elems[i].inverse());
  }
}

template <typename ImageOf>
Index ElementStore::lookup(ImageOf&& image_of) const {
  switch (mode_) {
    case KeyMode::dense: {
      std::uint64_t key = 0;
      for (Point b : base_) key = key * degree_ + image_of(b);
      return dense_[key];
    }
    case KeyMode::packed: {
      std::uint64_t key = 0;
      for (Point b : base_) key = (key << bits_) | image_of(b);
      auto it = packed_.find(key);
      return it == packed_.end() ? kNoIndex : it->second;
    }
    case KeyMode::generic: {
      std::vector<Point> key;
      key.reserve(base_.size());
      for (Point b : base_) key.push_back(image_of(b));
      auto it = generic_.find(key);
      return it == generic_.end() ? kNoIndex : it->second;
    }
  }
  return kNoIndex;
}

Permutation ElementStore::element(Index i) const {
  auto img = images(i);
  return Permutation::from_images_unchecked(std::vector<Point>(img.begin(), img.end()));
}

Index ElementStore::mul(Index a, Index b) const {
  auto ia = images(a);
  auto ib = images(b);
  return lookup([&](Point p) { return ib[ia[p]]; });
}

Index ElementStore::pow(Index a, std::uint64_t e) const {
  e %= order_[a];
  Index result = 0;
  Index base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Index ElementStore::index_of(std::span<const Point> img) const {
  if (img.size() != degree_) return kNoIndex;
  for (Point p : img) {
    if (p >= degree_) return kNoIndex;
  }
  Index i = lookup([&](Point p) { return img[p]; });
  if (i == kNoIndex) return kNoIndex;
  auto stored = images(i);
  return std::equal(stored.begin(), stored.end(), img.begin()) ? i : kNoIndex;
}

Index ElementStore::index_of(const Permutation& p) const {
  return index_of(std::span<const Point>(p.images()));
}

}  // namespace subnorm
