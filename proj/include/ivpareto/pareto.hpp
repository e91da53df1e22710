/**
 * @file pareto.hpp
 * @brief Pareto domination for the three information structures and
 * extraction of the non-dominated set.
 *
 * All three dominations are computed by a pairwise O(n²·m) scan:
 *
 *  - point:    y dominates x iff K_j(y) >= K_j(x) for all j, with > for some j;
 *  - relation: the strict part of the intersection of the per-criterion relations;
 *  - interval: y dominates x iff Δ_j(y) dominates Δ_j(x) in the interval order
 *              for every criterion j.
 */

#ifndef IVPARETO_PARETO_HPP
#define IVPARETO_PARETO_HPP

#include <map>
#include <span>
#include <vector>

#include "ivpareto/problem.hpp"
#include "ivpareto/relation.hpp"

namespace ivpareto {

using AltSet = std::vector<AltIndex>;  // ascending, duplicate-free

/// Why an alternative left the Pareto set. Margins are per criterion:
/// K(y) - K(x) for points, lower(y) - upper(x) for intervals and the
/// superiority sign of y over x (0 or +1) for relations.
struct Witness {
  AltIndex dominator = 0;
  std::vector<double> margins;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ParetoResult {
  AltSet pareto_set;
  DominationRelation domination;
  std::map<AltIndex, Witness> witnesses;  // keyed by eliminated alternative

  [[nodiscard]] bool in_pareto(AltIndex x) const;
  friend bool operator==(const ParetoResult&, const ParetoResult&) = default;
};

ParetoResult point_pareto(const Problem& problem);
ParetoResult vpr_pareto(const Problem& problem);
ParetoResult interval_pareto(const Problem& problem);
ParetoResult interval_pareto(const IntervalStructure& structure);

/// Dispatches on the problem's structure.
ParetoResult solve(const Problem& problem);

/// True iff chain[k] ⊆ chain[k+1] for every k. Sets must be sorted.
bool check_nesting(std::span<const AltSet> chain);
bool is_subset(const AltSet& inner, const AltSet& outer);

/// The recorded witness for an eliminated alternative; throws NotEliminated
/// when x is in the Pareto set.
const Witness& dominance_explanation(const ParetoResult& result, AltIndex x);

}  // namespace ivpareto

#endif  // IVPARETO_PARETO_HPP
