/**
 * @file utility.hpp
 * @brief Utility brackets for incomplete preference relations.
 *
 * For an unconnected relation R_j the unknown order-scale utility of x is
 * bracketed by a dominance-count interval:
 *
 *   lower(x) = |{y : x strictly preferred to y}|
 *   upper(x) = lower(x) + |N_j(x)|
 *
 * where N_j(x) are the alternatives incomparable with x. The lower bound
 * completes R_j pessimistically (every incomparable y beats x), the upper
 * bound optimistically (x beats every incomparable y). For a connected
 * relation both coincide. Turning every (x, j) into such an interval maps a
 * relation structure onto an interval structure.
 */

#ifndef IVPARETO_UTILITY_HPP
#define IVPARETO_UTILITY_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ivpareto/pareto.hpp"
#include "ivpareto/problem.hpp"

namespace ivpareto {

/// Multiset of incomparable alternatives: id -> number of criteria on which
/// it is incomparable. Zero counts are omitted.
using Multiset = std::map<AltIndex, std::size_t>;

struct IncomparabilityReport {
  std::vector<std::vector<AltSet>> per_criterion;  // [x][j] = N_j(x)
  std::vector<Multiset> aggregate;                 // [x]    = N_1(x) ⊕ ... ⊕ N_m(x)
};

/// {(x, y) : (x, y) in rel, (y, x) not in rel}
DominationRelation strict_part(const PreferenceRelation& rel);

/// Throws UnknownId when x is out of range.
AltSet incomparable_set(const PreferenceRelation& rel, AltIndex x);
Multiset incomparability_multiset(const Problem& problem, AltIndex x);
IncomparabilityReport incomparability_report(const Problem& problem);

/// +1 when x is strictly preferred, -1 when y is, 0 otherwise.
/// Throws SamePair when x == y.
int superiority_degree(const PreferenceRelation& rel, AltIndex x, AltIndex y);

std::size_t lower_utility(const PreferenceRelation& rel, AltIndex x);
std::size_t upper_utility(const PreferenceRelation& rel, AltIndex x);

/// [lower_utility, upper_utility] for every alternative (rows) and relation (columns).
Grid<Interval> utility_intervals(std::span<const PreferenceRelation> relations);

/// Relation structure -> interval structure in Strict mode. Throws WrongVariant.
Problem vpr_to_interval_structure(const Problem& problem);

}  // namespace ivpareto

#endif  // IVPARETO_UTILITY_HPP
