#include "ivpareto/utility.hpp"

#include <string>

#include "ivpareto/error.hpp"

namespace ivpareto {

namespace {

void check_alt(const PreferenceRelation& rel, AltIndex x) {
  if (x >= rel.size()) {
    throw Error(ErrorCode::UnknownId, "alternative index " + std::to_string(x) + " out of range");
  }
}

bool incomparable(const PreferenceRelation& rel, AltIndex x, AltIndex y) {
  return x != y && !rel.prefers(x, y) && !rel.prefers(y, x);
}

}  // namespace

DominationRelation strict_part(const PreferenceRelation& rel) {
  DominationRelation out(rel.size());
  for (const auto& [x, y] : rel.matrix().pairs()) {
    if (!rel.prefers(y, x)) out.insert(x, y);
  }
  return out;
}

AltSet incomparable_set(const PreferenceRelation& rel, AltIndex x) {
  check_alt(rel, x);
  AltSet out;
  for (AltIndex y = 0; y < rel.size(); ++y) {
    if (incomparable(rel, x, y)) out.push_back(y);
  }
  return out;
}

Multiset incomparability_multiset(const Problem& problem, AltIndex x) {
  Multiset out;
  for (const auto& rel : problem.relations().relations) {
    for (AltIndex y : incomparable_set(rel, x)) ++out[y];
  }
  return out;
}

IncomparabilityReport incomparability_report(const Problem& problem) {
  const auto& relations = problem.relations().relations;
  IncomparabilityReport report;
  for (AltIndex x = 0; x < problem.alternative_count(); ++x) {
    auto& row = report.per_criterion.emplace_back();
    auto& agg = report.aggregate.emplace_back();
    for (const auto& rel : relations) {
      row.push_back(incomparable_set(rel, x));
      for (AltIndex y : row.back()) ++agg[y];
    }
  }
  return report;
}

int superiority_degree(const PreferenceRelation& rel, AltIndex x, AltIndex y) {
  check_alt(rel, x);
  check_alt(rel, y);
  if (x == y) throw Error(ErrorCode::SamePair, "superiority degree needs two distinct alternatives");
  const bool xy = rel.prefers(x, y);
  const bool yx = rel.prefers(y, x);
  if (xy && !yx) return 1;
  if (yx && !xy) return -1;
  return 0;
}

std::size_t lower_utility(const PreferenceRelation& rel, AltIndex x) {
  check_alt(rel, x);
  std::size_t count = 0;
  for (AltIndex y = 0; y < rel.size(); ++y) {
    if (y != x && rel.prefers(x, y) && !rel.prefers(y, x)) ++count;
  }
  return count;
}

std::size_t upper_utility(const PreferenceRelation& rel, AltIndex x) {
  return lower_utility(rel, x) + incomparable_set(rel, x).size();
}

Grid<Interval> utility_intervals(std::span<const PreferenceRelation> relations) {
  const std::size_t n = relations.empty() ? 0 : relations.front().size();
  Grid<Interval> out(n, relations.size());
  for (std::size_t j = 0; j < relations.size(); ++j) {
    for (AltIndex x = 0; x < n; ++x) {
      out(x, j) = Interval(static_cast<double>(lower_utility(relations[j], x)),
                           static_cast<double>(upper_utility(relations[j], x)));
    }
  }
  return out;
}

Problem vpr_to_interval_structure(const Problem& problem) {
  IntervalStructure s{utility_intervals(problem.relations().relations), DominanceMode::Strict};
  return Problem(problem.alternatives(), problem.criteria(), std::move(s));
}

}  // namespace ivpareto
