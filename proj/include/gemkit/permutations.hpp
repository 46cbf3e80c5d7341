#pragma once

// Cyclic orderings of the color set Delta_n, up to rotation and inverse.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

class CyclicPermutation {
 public:
  CyclicPermutation() = default;
  explicit CyclicPermutation(std::vector<Color> seq) : seq_(std::move(seq)) {
    std::vector<Color> sorted = seq_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<Color>(i))
        throw GemError(ErrorKind::Precondition, "not a permutation of Delta_n: " + to_string());
  }

  int dimension() const { return static_cast<int>(seq_.size()) - 1; }
  const std::vector<Color>& sequence() const { return seq_; }
  // Position arithmetic is modulo n+1.
  Color operator[](int i) const {
    const int len = static_cast<int>(seq_.size());
    return seq_[((i % len) + len) % len];
  }

  CyclicPermutation inverse() const {
    std::vector<Color> r(seq_.rbegin(), seq_.rend());
    return CyclicPermutation(std::move(r));
  }

  // Canonical representative of the class: rotated so that 0 comes first,
  // then the lexicographically smaller of the two directions.
  CyclicPermutation normalized() const {
    const int len = static_cast<int>(seq_.size());
    const int at = static_cast<int>(std::find(seq_.begin(), seq_.end(), 0) - seq_.begin());
    std::vector<Color> fwd(len), bwd(len);
    for (int i = 0; i < len; ++i) {
      fwd[i] = (*this)[at + i];
      bwd[i] = (*this)[at - i];
    }
    CyclicPermutation out;
    out.seq_ = std::min(fwd, bwd);
    return out;
  }

  // Representative ending with the color n (an element of P_n when n is the
  // singular color), choosing the smaller of the two directions.
  CyclicPermutation ending_with_top() const {
    const int len = static_cast<int>(seq_.size());
    const int n = len - 1;
    const int at = static_cast<int>(std::find(seq_.begin(), seq_.end(), n) - seq_.begin());
    std::vector<Color> fwd(len), bwd(len);
    for (int i = 0; i < len; ++i) {
      fwd[i] = (*this)[at + 1 + i];
      bwd[i] = (*this)[at - 1 - i];
    }
    CyclicPermutation out;
    out.seq_ = std::min(fwd, bwd);
    return out;
  }

  bool same_class(const CyclicPermutation& o) const {
    return normalized().seq_ == o.normalized().seq_;
  }

  // The cyclic order induced on Delta_n minus the color at position i,
  // as a sequence of the remaining original colors.
  std::vector<Color> induced(int i) const {
    std::vector<Color> out;
    const int len = static_cast<int>(seq_.size());
    const int skip = ((i % len) + len) % len;
    for (int j = 0; j < len; ++j)
      if (j != skip) out.push_back(seq_[j]);
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < seq_.size(); ++i) s += (i ? "," : "") + std::to_string(seq_[i]);
    return s + ")";
  }

  friend bool operator==(const CyclicPermutation& a, const CyclicPermutation& b) = default;
  friend auto operator<=>(const CyclicPermutation& a, const CyclicPermutation& b) = default;

 private:
  std::vector<Color> seq_;
};

// The n!/2 classes of cyclic permutations of Delta_n, one canonical
// representative each, in lexicographic order.
inline std::vector<CyclicPermutation> cyclic_permutation_classes(int n) {
  if (n < 2) throw GemError(ErrorKind::Precondition, "cyclic permutation classes need n >= 2");
  std::vector<Color> rest(n);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<CyclicPermutation> out;
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<Color> seq{0};
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// P_4: cyclic permutations of Delta_4 with eps_4 = 4, up to inverse. The
// inverse of (a,b,c,d,4) within P_4 is (d,c,b,a,4); the member with a < d is
// kept. All 12 are returned in lexicographic order.
inline std::vector<CyclicPermutation> p4_permutations() {
  std::vector<Color> rest{0, 1, 2, 3};
  std::vector<CyclicPermutation> out;
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<Color> seq = rest;
    seq.push_back(4);
    out.emplace_back(std::move(seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// The trisection partition {eps_0, eps_2} / {eps_1, eps_3} of Delta_3 that an
// element of P_4 induces. Three such partitions exist.
struct PairPartition {
  ColorSet red;    // {eps_0, eps_2}
  ColorSet green;  // {eps_1, eps_3}
  friend bool operator==(const PairPartition& a, const PairPartition& b) {
    return (a.red == b.red && a.green == b.green) || (a.red == b.green && a.green == b.red);
  }
};

inline PairPartition pair_partition(const CyclicPermutation& eps) {
  return {ColorSet{eps[0], eps[2]}, ColorSet{eps[1], eps[3]}};
}

inline std::vector<PairPartition> p4_pair_partitions() {
  std::vector<PairPartition> out;
  for (const auto& eps : p4_permutations()) {
    auto p = pair_partition(eps);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// eps' = (eps_0, eps_2, eps_4, eps_1, eps_3).
inline CyclicPermutation associated_permutation(const CyclicPermutation& eps) {
  if (eps.dimension() != 4)
    throw GemError(ErrorKind::Precondition, "associated permutation is defined for n = 4 only");
  return CyclicPermutation({eps[0], eps[2], eps[4], eps[1], eps[3]});
}

// For eps in P_4: eps' written as (eps_1, eps_3, eps_0, eps_2, 4), again in P_4.
inline CyclicPermutation associated_permutation_p4(const CyclicPermutation& eps) {
  if (eps.dimension() != 4 || eps[4] != 4)
    throw GemError(ErrorKind::Precondition, "expected an element of P_4");
  return CyclicPermutation({eps[1], eps[3], eps[0], eps[2], 4});
}

}  // namespace gemkit
