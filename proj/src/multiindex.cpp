#include "hermite/multiindex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

void check_same_length(const MultiIndex& k, const MultiIndex& l) {
  if (k.size() != l.size()) {
    throw DimensionError("multi-index length mismatch: " + std::to_string(k.size()) +
                         " vs " + std::to_string(l.size()));
  }
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
  for (int v : e_) {
    if (v < 0) throw DomainError("multi-index entries must be non-negative");
  }
}

void MultiIndex::set(std::size_t i, int value) {
  if (value < 0) throw DomainError("multi-index entries must be non-negative");
  e_.at(i) = value;
}

int MultiIndex::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool MultiIndex::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out << ',';
    out << e_[i];
  }
  out << ')';
  return out.str();
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  check_same_length(a, b);
  std::vector<int> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return MultiIndex(std::move(sum));
}

bool leq_partial(const MultiIndex& k, const MultiIndex& l) {
  check_same_length(k, l);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > l[i]) return false;
  }
  return true;
}

std::strong_ordering compare_grevlex(const MultiIndex& k, const MultiIndex& l) {
  check_same_length(k, l);
  const int dk = k.total_degree();
  const int dl = l.total_degree();
  if (dk != dl) return dk <=> dl;
  for (std::size_t i = k.size(); i-- > 0;) {
    if (k[i] != l[i]) {
      // larger entry at the last differing position ranks first
      return k[i] > l[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

IndexBox::IndexBox(MultiIndex lo_, MultiIndex hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  check_same_length(lo, hi);
  if (!leq_partial(lo, hi)) throw DomainError("index box requires lo <= hi");
}

std::size_t IndexBox::cardinality() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  return n;
}

bool IndexBox::contains(const MultiIndex& k) const {
  return k.size() == lo.size() && leq_partial(lo, k) && leq_partial(k, hi);
}

std::vector<MultiIndex> enumerate_box(const IndexBox& box) {
  const std::size_t n = box.lo.size();
  std::vector<MultiIndex> out;
  out.reserve(box.cardinality());
  std::vector<int> cur(box.lo.entries());
  for (;;) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == box.hi[i - 1]) {
      cur[i - 1] = box.lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

BoxEnumeration::BoxEnumeration(const MultiIndex& hi)
    : hi_(hi), order_(enumerate_box(IndexBox(MultiIndex(hi.size()), hi))) {
  const std::size_t n = hi.size();
  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(hi[i] + 1);
  dense_to_position_.assign(order_.size(), 0);
  for (std::size_t p = 0; p < order_.size(); ++p) {
    std::size_t dense = 0;
    for (std::size_t i = 0; i < n; ++i) dense += strides_[i] * static_cast<std::size_t>(order_[p][i]);
    dense_to_position_[dense] = p;
  }
}

std::size_t BoxEnumeration::position(const MultiIndex& k) const {
  if (k.size() != hi_.size()) throw DimensionError("multi-index length mismatch");
  std::size_t dense = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > hi_[i]) throw DomainError("multi-index " + k.to_string() + " outside box");
    dense += strides_[i] * static_cast<std::size_t>(k[i]);
  }
  return dense_to_position_[dense];
}

std::shared_ptr<const BoxEnumeration> multiplicity_box(const MultiIndex& nu) {
  static std::mutex mutex;
  static std::map<MultiIndex, std::shared_ptr<const BoxEnumeration>> cache;
  std::vector<int> hi(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 1) throw DomainError("multiplicities must be >= 1");
    hi[i] = nu[i] - 1;
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[nu];
  if (!slot) slot = std::make_shared<const BoxEnumeration>(MultiIndex(std::move(hi)));
  return slot;
}

}  // namespace hermite
