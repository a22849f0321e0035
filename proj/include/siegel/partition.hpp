#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel {

/// Weakly decreasing nonnegative integer tuple, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  /// i is 0-based; parts beyond the length read as 0.
  long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  long weight() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic; a linear extension of dominance order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<long> parts_;
};

/// a >= b in dominance order (equal weights and prefix sums of a never
/// fall below those of b).
bool dominates(const Partition& a, const Partition& b);

/// All partitions of w with at most max_len parts, lexicographically
/// decreasing.
std::vector<Partition> partitions_of(long w, std::size_t max_len);

/// Blattner parameter k_1 >= ... >= k_n; entries may be negative at the
/// type level, but only polynomial weights (k_n >= 0) reach branching.
class WeightVector {
 public:
  explicit WeightVector(std::vector<long> weights);

  const std::vector<long>& weights() const { return weights_; }
  std::size_t degree() const { return weights_.size(); }
  long lowest() const { return weights_.back(); }
  bool is_partition() const { return weights_.back() >= 0; }
  /// Theorem hypothesis k_n > n+1.
  bool in_proven_range() const {
    return weights_.back() > static_cast<long>(degree()) + 1;
  }
  Partition as_partition() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<long> weights_;
};

/// Dimension of the GL(n) irrep with highest weight w:
/// prod_{t<u}(w_t - w_u + u - t) / prod_{t<u}(u - t).
Int weyl_dim(const std::vector<long>& w);
Int weyl_dim(const WeightVector& k);
/// Partition b read as a GL(r) weight (padded with zeros to length r).
Int weyl_dim(const Partition& b, std::size_t r);

/// Gelfand-Tsetlin multiplicity of the GL(r) irrep b in the restriction
/// of the GL(n) irrep k, by iterated one-step interlacing branching.
Int branching_mult(const WeightVector& k, const Partition& b, int r);

/// All b with nonzero branching multiplicity and b_r >= floor, paired
/// with their multiplicities, lexicographically decreasing.
std::vector<std::pair<Partition, Int>> branching_support(const WeightVector& k,
                                                         int r, long floor);

}  // namespace siegel
