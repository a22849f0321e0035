#include "siegel/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "siegel/errors.hpp"

namespace siegel {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      throw OutOfRangeError("partition parts must be weakly decreasing and nonnegative");
  }
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::conjugate() const {
  std::vector<long> out;
  if (parts_.empty()) return Partition();
  out.reserve(static_cast<std::size_t>(parts_[0]));
  for (long j = 1; j <= parts_[0]; ++j) {
    long count = 0;
    for (long p : parts_)
      if (p >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return false;
  long sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

namespace {
void partitions_rec(long w, std::size_t max_len, long max_part,
                    std::vector<long>& acc, std::vector<Partition>& out) {
  if (w == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_len == 0) return;
  for (long first = std::min(w, max_part); first >= 1; --first) {
    acc.push_back(first);
    partitions_rec(w - first, max_len - 1, first, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(long w, std::size_t max_len) {
  std::vector<Partition> out;
  if (w < 0) return out;
  std::vector<long> acc;
  partitions_rec(w, max_len, w, acc, out);
  return out;
}

WeightVector::WeightVector(std::vector<long> weights) : weights_(std::move(weights)) {
  if (weights_.empty())
    throw OutOfRangeError("weight vector must have positive degree");
  for (std::size_t i = 0; i + 1 < weights_.size(); ++i)
    if (weights_[i] < weights_[i + 1])
      throw OutOfRangeError("weights must be weakly decreasing");
}

Partition WeightVector::as_partition() const {
  if (!is_partition())
    throw OutOfRangeError("weight vector has negative entries");
  return Partition(weights_);
}

Int weyl_dim(const std::vector<long>& w) {
  std::size_t n = w.size();
  Int num = 1, den = 1;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = t + 1; u < n; ++u) {
      num *= Int(w[t] - w[u]) + Int(u - t);
      den *= Int(u - t);
    }
  }
  return num / den;
}

Int weyl_dim(const WeightVector& k) { return weyl_dim(k.weights()); }

Int weyl_dim(const Partition& b, std::size_t r) {
  std::vector<long> w(r, 0);
  for (std::size_t i = 0; i < r; ++i) w[i] = b.part(i);
  return weyl_dim(w);
}

namespace {

// One-step GL(j) -> GL(j-1) restriction: mu interlaces lam, i.e.
// lam_i >= mu_i >= lam_{i+1}.  Multiplicity-free.
void one_step(const std::vector<long>& lam,
              const std::map<std::vector<long>, Int>::mapped_type& mult,
              std::map<std::vector<long>, Int>& next) {
  std::size_t j = lam.size();
  std::vector<long> mu(j - 1);
  // Iterate the product of ranges [lam_{i+1}, lam_i].
  std::size_t i = 0;
  if (j == 1) {
    next[{}] += mult;
    return;
  }
  for (std::size_t t = 0; t + 1 < j; ++t) mu[t] = lam[t + 1];
  while (true) {
    bool decreasing = true;
    for (std::size_t t = 0; t + 1 < mu.size(); ++t)
      if (mu[t] < mu[t + 1]) { decreasing = false; break; }
    if (decreasing) next[mu] += mult;
    // advance
    for (i = 0; i < mu.size(); ++i) {
      if (mu[i] < lam[i]) {
        ++mu[i];
        for (std::size_t t = 0; t < i; ++t) mu[t] = lam[t + 1];
        break;
      }
    }
    if (i == mu.size()) break;
  }
}

std::map<std::vector<long>, Int> branch_down(const WeightVector& k, int r) {
  int n = static_cast<int>(k.degree());
  if (r < 1 || r > n) throw InvalidRankError("branching rank must satisfy 1 <= r <= n");
  if (!k.is_partition())
    throw OutOfRangeError("branching requires a polynomial weight (k_n >= 0)");
  std::map<std::vector<long>, Int> cur;
  cur[k.weights()] = 1;
  for (int j = n; j > r; --j) {
    std::map<std::vector<long>, Int> next;
    for (const auto& [lam, mult] : cur) one_step(lam, mult, next);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Int branching_mult(const WeightVector& k, const Partition& b, int r) {
  auto table = branch_down(k, r);
  std::vector<long> key(static_cast<std::size_t>(r), 0);
  if (b.length() > static_cast<std::size_t>(r)) return 0;
  for (std::size_t i = 0; i < key.size(); ++i) key[i] = b.part(i);
  auto it = table.find(key);
  return it == table.end() ? Int(0) : it->second;
}

std::vector<std::pair<Partition, Int>> branching_support(const WeightVector& k,
                                                         int r, long floor) {
  auto table = branch_down(k, r);
  std::vector<std::pair<Partition, Int>> out;
  for (const auto& [lam, mult] : table) {
    if (lam.back() >= floor) out.emplace_back(Partition(lam), mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

}  // namespace siegel
