#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hermite {

/// Vector of non-negative integers: derivative orders or monomial exponents.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Zero multi-index of length n.
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);

  int total_degree() const;
  bool is_zero() const;
  const std::vector<int>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  std::string to_string() const;  // "(1,0,2)"

  /// Lexicographic, for use as an ordered container key only.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> e_;
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

/// Componentwise order: k <= l iff k_i <= l_i for all i.
bool leq_partial(const MultiIndex& k, const MultiIndex& l);

/// Degree reverse lexicographic order. Lower total degree ranks first; on a
/// tie the index with the larger entry at the last differing position ranks
/// first.
std::strong_ordering compare_grevlex(const MultiIndex& k, const MultiIndex& l);

struct GrevlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return compare_grevlex(a, b) < 0;
  }
};

/// The box [lo, hi] of multi-indices between two bounds.
struct IndexBox {
  MultiIndex lo;
  MultiIndex hi;

  IndexBox(MultiIndex lo_, MultiIndex hi_);
  std::size_t cardinality() const;
  bool contains(const MultiIndex& k) const;
};

/// All elements of the box, ascending in grevlex order.
std::vector<MultiIndex> enumerate_box(const IndexBox& box);

/// Grevlex numbering of [0, hi] with O(1) index -> position lookup.
class BoxEnumeration {
 public:
  explicit BoxEnumeration(const MultiIndex& hi);

  std::size_t size() const { return order_.size(); }
  const MultiIndex& at(std::size_t position) const { return order_[position]; }
  const std::vector<MultiIndex>& indices() const { return order_; }
  /// Position of k in grevlex order; throws DomainError if k is outside the box.
  std::size_t position(const MultiIndex& k) const;
  const MultiIndex& upper() const { return hi_; }

 private:
  MultiIndex hi_;
  std::vector<MultiIndex> order_;
  std::vector<std::size_t> dense_to_position_;  // row-major over the box
  std::vector<std::size_t> strides_;
};

/// Shared enumeration of [0, nu - 1], memoized per multiplicity signature.
std::shared_ptr<const BoxEnumeration> multiplicity_box(const MultiIndex& nu);

}  // namespace hermite
