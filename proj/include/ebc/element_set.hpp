#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace ebc {

using ElementId = std::uint32_t;

// Default cap on the order of any structure built by the library. Dense
// Cayley tables are quadratic in the order, so this is the binding limit.
inline constexpr std::size_t kStructureOrderCap = 4096;

/// Subset of a finite structure's elements as a fixed-width bit vector.
/// Bits at positions >= owner_order() are always zero.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t owner_order);
  ElementSet(std::size_t owner_order, std::initializer_list<ElementId> ids);

  static ElementSet full(std::size_t owner_order);
  static ElementSet from_ids(std::size_t owner_order, std::span<const ElementId> ids);

  std::size_t owner_order() const noexcept { return order_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool contains(ElementId id) const noexcept {
    return id < order_ && ((words_[id >> 6] >> (id & 63)) & 1U) != 0;
  }
  void insert(ElementId id);
  void erase(ElementId id);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool intersects(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet complement() const;

  std::vector<ElementId> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void check_owner(const ElementSet& other) const;

  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

inline ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
inline ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

}  // namespace ebc
