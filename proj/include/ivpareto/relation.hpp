/**
 * @file relation.hpp
 * @brief Binary relations over the alternatives of one problem.
 *
 * Alternatives are addressed by declaration index. A PairMatrix is the dense
 * boolean adjacency used for every relation in the engine; a
 * PreferenceRelation is a weak preference (x, y) = "x at least as good as y"
 * with reflexive pairs left implicit.
 */

#ifndef IVPARETO_RELATION_HPP
#define IVPARETO_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ivpareto {

using AltIndex = std::size_t;
using Pair = std::pair<AltIndex, AltIndex>;

/// Dense n×n boolean adjacency. The diagonal is never set.
class PairMatrix {
 public:
  PairMatrix() = default;
  explicit PairMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool contains(AltIndex from, AltIndex to) const noexcept {
    return from < n_ && to < n_ && bits_[from * n_ + to] != 0;
  }
  /// Ignores reflexive pairs.
  void insert(AltIndex from, AltIndex to);
  void erase(AltIndex from, AltIndex to);

  /// Pairs in (from, to) lexicographic order.
  [[nodiscard]] std::vector<Pair> pairs() const;
  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return count() == 0; }

  friend bool operator==(const PairMatrix&, const PairMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Pareto domination (dominator, dominated); irreflexive and asymmetric.
using DominationRelation = PairMatrix;

class PreferenceRelation {
 public:
  PreferenceRelation() = default;
  explicit PreferenceRelation(std::size_t n) : pairs_(n) {}

  [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }
  [[nodiscard]] bool prefers(AltIndex x, AltIndex y) const noexcept { return pairs_.contains(x, y); }
  [[nodiscard]] bool closed() const noexcept { return closed_; }
  [[nodiscard]] const PairMatrix& matrix() const noexcept { return pairs_; }

  /// Adding a pair clears the closed flag unless the pair was already present.
  void add(AltIndex preferred, AltIndex other);

  friend bool operator==(const PreferenceRelation&, const PreferenceRelation&) = default;

 private:
  friend PreferenceRelation transitive_closure(PreferenceRelation rel);
  PairMatrix pairs_;
  bool closed_ = true;
};

/// Smallest transitive superset (Warshall); sets the closed flag.
PreferenceRelation transitive_closure(PreferenceRelation rel);

/// Every unordered pair of distinct alternatives is related in some direction.
bool is_connected(const PreferenceRelation& rel);

/// The relation equals its own transitive closure.
bool is_transitive(const PreferenceRelation& rel);

}  // namespace ivpareto

#endif  // IVPARETO_RELATION_HPP
