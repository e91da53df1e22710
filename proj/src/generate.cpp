#include "ivpareto/generate.hpp"

#include "ivpareto/error.hpp"

namespace ivpareto {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Keeps each unordered pair of `truth` with probability `keep`, both
// directions together, then closes.
PreferenceRelation thin(Rng& rng, const PreferenceRelation& truth, double keep) {
  const std::size_t n = truth.size();
  std::bernoulli_distribution coin(keep);
  PreferenceRelation out(n);
  for (AltIndex a = 0; a < n; ++a) {
    for (AltIndex b = a + 1; b < n; ++b) {
      if (!coin(rng)) continue;
      if (truth.prefers(a, b)) out.add(a, b);
      if (truth.prefers(b, a)) out.add(b, a);
    }
  }
  return transitive_closure(std::move(out));
}

}  // namespace

std::vector<std::string> alternative_labels(std::size_t n) { return numbered("x", n); }
std::vector<std::string> criterion_labels(std::size_t m) { return numbered("K", m); }

Problem random_point_problem(Rng& rng, std::size_t n, std::size_t m, int levels) {
  Grid<double> values(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) values(i, j) = uniform_int(rng, 0, levels - 1);
  }
  return Problem(alternative_labels(n), criterion_labels(m), PointStructure{std::move(values)});
}

GeneratedInstance random_interval_instance(Rng& rng, std::size_t n, std::size_t m, DominanceMode mode) {
  Problem truth = random_point_problem(rng, n, m);
  const auto& k = truth.points().values;
  Grid<Interval> cells(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cells(i, j) = Interval(k(i, j) - uniform_int(rng, 0, 3), k(i, j) + uniform_int(rng, 0, 3));
    }
  }
  Problem observed(alternative_labels(n), criterion_labels(m), IntervalStructure{std::move(cells), mode});
  return {std::move(observed), std::move(truth)};
}

PreferenceRelation random_total_preorder(Rng& rng, std::size_t n) {
  const int top = n == 0 ? 0 : static_cast<int>(n) - 1;
  std::vector<int> level(n);
  for (auto& l : level) l = uniform_int(rng, 0, top);
  PreferenceRelation rel(n);
  for (AltIndex a = 0; a < n; ++a) {
    for (AltIndex b = 0; b < n; ++b) {
      if (a != b && level[a] >= level[b]) rel.add(a, b);
    }
  }
  return transitive_closure(std::move(rel));
}

PreferenceRelation random_transitive_relation(Rng& rng, std::size_t n) {
  const double keep = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return thin(rng, random_total_preorder(rng, n), keep);
}

GeneratedInstance random_relation_instance(Rng& rng, std::size_t n, std::size_t m) {
  const double keep = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  RelationStructure truth;
  RelationStructure observed;
  for (std::size_t j = 0; j < m; ++j) {
    truth.relations.push_back(random_total_preorder(rng, n));
    observed.relations.push_back(thin(rng, truth.relations.back(), keep));
  }
  return {Problem(alternative_labels(n), criterion_labels(m), std::move(observed)),
          Problem(alternative_labels(n), criterion_labels(m), std::move(truth))};
}

GeneratedInstance generate_instance(std::size_t n, std::size_t m, StructureKind variant, std::uint64_t seed) {
  if (n == 0 || m == 0) throw Error(ErrorCode::DimensionError, "need at least one alternative and one criterion");
  Rng rng(seed);
  switch (variant) {
    case StructureKind::Point: {
      Problem p = random_point_problem(rng, n, m);
      return {p, p};
    }
    case StructureKind::Interval: return random_interval_instance(rng, n, m);
    case StructureKind::Relation: return random_relation_instance(rng, n, m);
  }
  throw Error(ErrorCode::WrongVariant, "unknown variant");
}

}  // namespace ivpareto
