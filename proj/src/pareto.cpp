#include "ivpareto/pareto.hpp"

#include <algorithm>
#include <string>

#include "ivpareto/error.hpp"

namespace ivpareto {

namespace {

// Builds the Pareto set and witnesses from a finished domination relation.
// The witness prefers a dominator that is itself in the Pareto set.
template <typename MarginFn>
ParetoResult finish(DominationRelation domination, std::size_t criteria, MarginFn margin) {
  const std::size_t n = domination.size();
  ParetoResult result;
  std::vector<bool> dominated(n, false);
  for (const auto& [y, x] : domination.pairs()) dominated[x] = true;
  for (AltIndex x = 0; x < n; ++x) {
    if (!dominated[x]) result.pareto_set.push_back(x);
  }
  for (AltIndex x = 0; x < n; ++x) {
    if (!dominated[x]) continue;
    AltIndex chosen = n;
    for (AltIndex y = 0; y < n; ++y) {
      if (!domination.contains(y, x)) continue;
      if (chosen == n) chosen = y;
      if (!dominated[y]) {
        chosen = y;
        break;
      }
    }
    Witness w{chosen, std::vector<double>(criteria)};
    for (std::size_t j = 0; j < criteria; ++j) w.margins[j] = margin(chosen, x, j);
    result.witnesses.emplace(x, std::move(w));
  }
  result.domination = std::move(domination);
  return result;
}

}  // namespace

bool ParetoResult::in_pareto(AltIndex x) const {
  return std::binary_search(pareto_set.begin(), pareto_set.end(), x);
}

ParetoResult point_pareto(const Problem& problem) {
  const auto& k = problem.points().values;
  const std::size_t n = problem.alternative_count();
  const std::size_t m = problem.criterion_count();
  DominationRelation dom(n);
  for (AltIndex y = 0; y < n; ++y) {
    for (AltIndex x = 0; x < n; ++x) {
      if (x == y) continue;
      bool weakly = true;
      bool strictly = false;
      for (std::size_t j = 0; j < m && weakly; ++j) {
        weakly = k(y, j) >= k(x, j);
        strictly = strictly || k(y, j) > k(x, j);
      }
      if (weakly && strictly) dom.insert(y, x);
    }
  }
  return finish(std::move(dom), m, [&](AltIndex y, AltIndex x, std::size_t j) { return k(y, j) - k(x, j); });
}

ParetoResult vpr_pareto(const Problem& problem) {
  const auto& relations = problem.relations().relations;
  const std::size_t n = problem.alternative_count();
  const std::size_t m = problem.criterion_count();
  PairMatrix meet(n);
  for (AltIndex y = 0; y < n; ++y) {
    for (AltIndex x = 0; x < n; ++x) {
      if (x != y && std::all_of(relations.begin(), relations.end(),
                                [&](const PreferenceRelation& r) { return r.prefers(y, x); })) {
        meet.insert(y, x);
      }
    }
  }
  DominationRelation dom(n);
  for (const auto& [y, x] : meet.pairs()) {
    if (!meet.contains(x, y)) dom.insert(y, x);
  }
  return finish(std::move(dom), m, [&](AltIndex y, AltIndex x, std::size_t j) {
    const auto& r = relations[j];
    return (r.prefers(y, x) && !r.prefers(x, y)) ? 1.0 : 0.0;
  });
}

ParetoResult interval_pareto(const IntervalStructure& structure) {
  const auto& d = structure.intervals;
  const std::size_t n = d.rows();
  const std::size_t m = d.cols();
  PairMatrix all_criteria(n);
  for (AltIndex y = 0; y < n; ++y) {
    for (AltIndex x = 0; x < n; ++x) {
      if (x == y) continue;
      bool all = true;
      for (std::size_t j = 0; j < m && all; ++j) all = interval_dominates(d(y, j), d(x, j), structure.mode);
      if (all) all_criteria.insert(y, x);
    }
  }
  // Weak mode relates identical degenerate rows both ways; such ties both survive.
  DominationRelation dom(n);
  for (const auto& [y, x] : all_criteria.pairs()) {
    if (!all_criteria.contains(x, y)) dom.insert(y, x);
  }
  return finish(std::move(dom), m,
                [&](AltIndex y, AltIndex x, std::size_t j) { return d(y, j).lower() - d(x, j).upper(); });
}

ParetoResult interval_pareto(const Problem& problem) { return interval_pareto(problem.intervals()); }

ParetoResult solve(const Problem& problem) {
  switch (problem.kind()) {
    case StructureKind::Point: return point_pareto(problem);
    case StructureKind::Interval: return interval_pareto(problem);
    case StructureKind::Relation: return vpr_pareto(problem);
  }
  throw Error(ErrorCode::WrongVariant, "unknown structure");
}

bool is_subset(const AltSet& inner, const AltSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool check_nesting(std::span<const AltSet> chain) {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!is_subset(chain[k], chain[k + 1])) return false;
  }
  return true;
}

const Witness& dominance_explanation(const ParetoResult& result, AltIndex x) {
  auto it = result.witnesses.find(x);
  if (it == result.witnesses.end()) {
    throw Error(ErrorCode::NotEliminated, "alternative " + std::to_string(x) + " is in the Pareto set");
  }
  return it->second;
}

}  // namespace ivpareto
