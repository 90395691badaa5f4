#include "ebc/element_set.hpp"

#include <string>

#include "ebc/errors.hpp"

namespace ebc {

ElementSet::ElementSet(std::size_t owner_order)
    : order_(owner_order), words_((owner_order + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t owner_order, std::initializer_list<ElementId> ids)
    : ElementSet(owner_order) {
  for (ElementId id : ids) insert(id);
}

ElementSet ElementSet::full(std::size_t owner_order) {
  ElementSet s(owner_order);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (owner_order % 64 != 0) s.words_.back() = (std::uint64_t{1} << (owner_order % 64)) - 1;
  return s;
}

ElementSet ElementSet::from_ids(std::size_t owner_order, std::span<const ElementId> ids) {
  ElementSet s(owner_order);
  for (ElementId id : ids) s.insert(id);
  return s;
}

void ElementSet::insert(ElementId id) {
  if (id >= order_) {
    throw InputError("element id " + std::to_string(id) + " out of range for order " +
                     std::to_string(order_));
  }
  words_[id >> 6] |= std::uint64_t{1} << (id & 63);
}

void ElementSet::erase(ElementId id) {
  if (id < order_) words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void ElementSet::check_owner(const ElementSet& other) const {
  if (order_ != other.order_) {
    throw InputError("element sets over different orders (" + std::to_string(order_) + " vs " +
                     std::to_string(other.order_) + ")");
  }
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_owner(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_owner(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_owner(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_owner(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet out = full(order_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

std::vector<ElementId> ElementSet::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for_each([&](ElementId id) { out.push_back(id); });
  return out;
}

}  // namespace ebc
