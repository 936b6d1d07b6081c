#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "hermite/grid.hpp"
#include "hermite/interpolant.hpp"

namespace hermite {

/// Inclusive index range [lo, hi] into an axis.
struct WindowRange {
  int lo;
  int hi;
  friend bool operator==(const WindowRange&, const WindowRange&) = default;
};

/// Local support of width w around q. Consecutive-integer axes use the
/// closed floor/round formula (halves round away from zero); other axes count
/// nearest nodes, breaking ties toward the lower node. Windows that would
/// leave the axis are shifted inward.
/// Throws DomainError if q lies outside the axis, InputError for a bad w.
template <class T>
WindowRange select_window(const Axis<T>& axis, const T& q, int w);

/// Piecewise interpolant: each query uses the patch built on its window.
/// Patches are built on first use and cached by window corner.
template <class T>
class SplineInterpolant {
 public:
  using Patch = HermiteInterpolant<T>;

  SplineInterpolant(std::shared_ptr<const DataSource<T>> data, std::vector<int> window);

  const GridSpec<T>& grid() const { return data_->grid(); }
  const std::vector<int>& window() const { return window_; }

  T eval(const std::vector<T>& x) const;
  T eval(const std::vector<T>& x, const MultiIndex& k) const;
  /// Evaluates a batch, splitting it into fixed chunks over threads.
  std::vector<T> eval_many(const std::vector<std::vector<T>>& xs, const MultiIndex& k, unsigned threads) const;

  /// Lower corner of the window used at x.
  MultiIndex corner(const std::vector<T>& x) const;
  std::shared_ptr<const Patch> patch(const MultiIndex& lo) const;
  std::size_t cached_patches() const;

 private:
  std::shared_ptr<const DataSource<T>> data_;
  std::vector<int> window_;
  mutable std::shared_mutex mu_;
  mutable std::map<MultiIndex, std::shared_ptr<const Patch>> cache_;
};

enum class PatchPairing {
  /// The spline's own patches on the cells left and right of the node.
  SplineCells,
  /// Windows ending at the node and starting at it along the axis.
  SharedHyperplane,
};

struct ContinuityReport {
  /// mismatch[r]: max |d^k p- - d^k p+| over probes with k_axis = r.
  std::vector<double> mismatch;
  MultiIndex lower_corner;
  MultiIndex upper_corner;
  /// False when both sides of the node resolve to the same patch.
  bool distinct_patches = true;
};

struct ContinuityOptions {
  PatchPairing pairing = PatchPairing::SplineCells;
  /// Highest derivative order across the axis; negative means nu_axis(a).
  int max_order = -1;
  std::uint64_t seed = 42;
};

/// Compares the two patches meeting at node `node` of axis `axis` on m random
/// points of the hyperplane x_axis = a. Other axes take derivative orders up
/// to min nu - 1. Throws DomainError if no two patches meet there.
template <class T>
ContinuityReport continuity_report(const SplineInterpolant<T>& s, std::size_t axis, std::size_t node, int probes,
                                   const ContinuityOptions& opt = {});

}  // namespace hermite
