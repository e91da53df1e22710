#include "ivpareto/relation.hpp"

#include <algorithm>
#include <cassert>

namespace ivpareto {

void PairMatrix::insert(AltIndex from, AltIndex to) {
  assert(from < n_ && to < n_);
  if (from != to) bits_[from * n_ + to] = 1;
}

void PairMatrix::erase(AltIndex from, AltIndex to) {
  assert(from < n_ && to < n_);
  bits_[from * n_ + to] = 0;
}

std::vector<Pair> PairMatrix::pairs() const {
  std::vector<Pair> out;
  for (AltIndex i = 0; i < n_; ++i) {
    for (AltIndex j = 0; j < n_; ++j) {
      if (bits_[i * n_ + j] != 0) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t PairMatrix::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

void PreferenceRelation::add(AltIndex preferred, AltIndex other) {
  if (preferred == other || pairs_.contains(preferred, other)) return;
  pairs_.insert(preferred, other);
  closed_ = false;
}

PreferenceRelation transitive_closure(PreferenceRelation rel) {
  const std::size_t n = rel.size();
  for (AltIndex k = 0; k < n; ++k) {
    for (AltIndex i = 0; i < n; ++i) {
      if (i == k || !rel.pairs_.contains(i, k)) continue;
      for (AltIndex j = 0; j < n; ++j) {
        if (j != i && rel.pairs_.contains(k, j)) rel.pairs_.insert(i, j);
      }
    }
  }
  rel.closed_ = true;
  return rel;
}

bool is_connected(const PreferenceRelation& rel) {
  const std::size_t n = rel.size();
  for (AltIndex i = 0; i < n; ++i) {
    for (AltIndex j = i + 1; j < n; ++j) {
      if (!rel.prefers(i, j) && !rel.prefers(j, i)) return false;
    }
  }
  return true;
}

bool is_transitive(const PreferenceRelation& rel) {
  const std::size_t n = rel.size();
  for (AltIndex i = 0; i < n; ++i) {
    for (AltIndex k = 0; k < n; ++k) {
      if (k == i || !rel.prefers(i, k)) continue;
      for (AltIndex j = 0; j < n; ++j) {
        if (j != i && rel.prefers(k, j) && !rel.prefers(i, j)) return false;
      }
    }
  }
  return true;
}

}  // namespace ivpareto
