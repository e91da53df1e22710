#include "ivpareto/problem.hpp"

#include <algorithm>
#include <unordered_set>

#include "ivpareto/error.hpp"

namespace ivpareto {

namespace {

void check_ids(const std::vector<std::string>& ids, const char* what) {
  if (ids.empty()) {
    throw Error(ErrorCode::DimensionError, std::string("at least one ") + what + " is required", what);
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (id.empty()) throw Error(ErrorCode::SchemaError, std::string(what) + " labels must be non-empty", what);
    if (!seen.insert(id).second) throw Error(ErrorCode::DuplicateId, "duplicate label \"" + id + "\"", id);
  }
}

template <typename T>
void check_grid(const Grid<T>& grid, std::size_t n, std::size_t m) {
  if (grid.rows() != n || grid.cols() != m) {
    throw Error(ErrorCode::DimensionError, "matrix must be " + std::to_string(n) + "x" + std::to_string(m),
                "structure.matrix");
  }
}

// Closing a relation may only add pairs; a pair given as strict must not
// acquire its reverse.
PreferenceRelation close_checked(const PreferenceRelation& given, const std::string& criterion) {
  PreferenceRelation closed = transitive_closure(given);
  for (const auto& [a, b] : given.matrix().pairs()) {
    if (!given.prefers(b, a) && closed.prefers(b, a)) {
      throw Error(ErrorCode::InconsistentRelation,
                  "closure of the relation for \"" + criterion + "\" reverses a strict preference", criterion);
    }
  }
  return closed;
}

}  // namespace

std::string_view to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::Point: return "point";
    case StructureKind::Interval: return "interval";
    case StructureKind::Relation: return "relation";
  }
  return "unknown";
}

Problem::Problem(std::vector<std::string> alternatives, std::vector<std::string> criteria, Structure structure)
    : alternatives_(std::move(alternatives)), criteria_(std::move(criteria)), structure_(std::move(structure)) {
  check_ids(alternatives_, "alternatives");
  check_ids(criteria_, "criteria");
  const std::size_t n = alternatives_.size();
  const std::size_t m = criteria_.size();
  if (auto* point = std::get_if<PointStructure>(&structure_)) {
    check_grid(point->values, n, m);
  } else if (auto* interval = std::get_if<IntervalStructure>(&structure_)) {
    check_grid(interval->intervals, n, m);
  } else {
    auto& rel = std::get<RelationStructure>(structure_);
    if (rel.relations.size() != m) {
      throw Error(ErrorCode::DimensionError, "one relation per criterion is required", "structure.relations");
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (rel.relations[j].size() != n) {
        throw Error(ErrorCode::DimensionError, "relation size does not match the alternative count", criteria_[j]);
      }
      if (!rel.relations[j].closed()) rel.relations[j] = close_checked(rel.relations[j], criteria_[j]);
    }
  }
}

StructureKind Problem::kind() const noexcept { return static_cast<StructureKind>(structure_.index()); }

AltIndex Problem::alternative_index(std::string_view label) const {
  auto it = std::find(alternatives_.begin(), alternatives_.end(), label);
  if (it == alternatives_.end()) {
    throw Error(ErrorCode::UnknownId, "unknown alternative \"" + std::string(label) + "\"", std::string(label));
  }
  return static_cast<AltIndex>(it - alternatives_.begin());
}

std::size_t Problem::criterion_index(std::string_view label) const {
  auto it = std::find(criteria_.begin(), criteria_.end(), label);
  if (it == criteria_.end()) {
    throw Error(ErrorCode::UnknownId, "unknown criterion \"" + std::string(label) + "\"", std::string(label));
  }
  return static_cast<std::size_t>(it - criteria_.begin());
}

const PointStructure& Problem::points() const {
  if (const auto* p = std::get_if<PointStructure>(&structure_)) return *p;
  throw Error(ErrorCode::WrongVariant, "expected a point structure, found " + std::string(to_string(kind())));
}

const IntervalStructure& Problem::intervals() const {
  if (const auto* p = std::get_if<IntervalStructure>(&structure_)) return *p;
  throw Error(ErrorCode::WrongVariant, "expected an interval structure, found " + std::string(to_string(kind())));
}

const RelationStructure& Problem::relations() const {
  if (const auto* p = std::get_if<RelationStructure>(&structure_)) return *p;
  throw Error(ErrorCode::WrongVariant, "expected a relation structure, found " + std::string(to_string(kind())));
}

PreferenceRelation criterion_to_relation(const Problem& problem, std::size_t criterion) {
  const auto& values = problem.points().values;
  const std::size_t n = problem.alternative_count();
  if (criterion >= problem.criterion_count()) {
    throw Error(ErrorCode::UnknownId, "criterion index out of range");
  }
  PreferenceRelation rel(n);
  for (AltIndex i = 0; i < n; ++i) {
    for (AltIndex q = 0; q < n; ++q) {
      if (i != q && values(i, criterion) >= values(q, criterion)) rel.add(i, q);
    }
  }
  // A >= comparison of reals is already a total preorder.
  return transitive_closure(std::move(rel));
}

PreferenceRelation criterion_to_relation(const Problem& problem, std::string_view criterion) {
  return criterion_to_relation(problem, problem.criterion_index(criterion));
}

Problem point_to_relation_problem(const Problem& problem) {
  RelationStructure rel;
  for (std::size_t j = 0; j < problem.criterion_count(); ++j) {
    rel.relations.push_back(criterion_to_relation(problem, j));
  }
  return Problem(problem.alternatives(), problem.criteria(), std::move(rel));
}

}  // namespace ivpareto
