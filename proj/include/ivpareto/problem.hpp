/**
 * @file problem.hpp
 * @brief A multicriteria choice problem: alternatives, criteria and one of
 * three information structures.
 *
 *  - PointStructure:    K[i][j], a real estimate of alternative i on criterion j.
 *  - IntervalStructure: Δ[i][j], an interval bracketing the unknown estimate.
 *  - RelationStructure: one weak preference relation per criterion.
 *
 * Problems are validated on construction and immutable afterwards. Relation
 * structures are stored transitively closed.
 */

#ifndef IVPARETO_PROBLEM_HPP
#define IVPARETO_PROBLEM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivpareto/grid.hpp"
#include "ivpareto/interval.hpp"
#include "ivpareto/relation.hpp"

namespace ivpareto {

struct PointStructure {
  Grid<double> values;
  friend bool operator==(const PointStructure&, const PointStructure&) = default;
};

struct IntervalStructure {
  Grid<Interval> intervals;
  DominanceMode mode = DominanceMode::Strict;
  friend bool operator==(const IntervalStructure&, const IntervalStructure&) = default;
};

struct RelationStructure {
  std::vector<PreferenceRelation> relations;  // one per criterion
  friend bool operator==(const RelationStructure&, const RelationStructure&) = default;
};

using Structure = std::variant<PointStructure, IntervalStructure, RelationStructure>;

enum class StructureKind { Point, Interval, Relation };

std::string_view to_string(StructureKind kind) noexcept;

class Problem {
 public:
  /// Validates ids and dimensions; closes relation structures.
  /// Throws DuplicateId, DimensionError, SchemaError or InconsistentRelation.
  Problem(std::vector<std::string> alternatives, std::vector<std::string> criteria, Structure structure);

  [[nodiscard]] std::size_t alternative_count() const noexcept { return alternatives_.size(); }
  [[nodiscard]] std::size_t criterion_count() const noexcept { return criteria_.size(); }
  [[nodiscard]] const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  [[nodiscard]] const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  [[nodiscard]] const Structure& structure() const noexcept { return structure_; }
  [[nodiscard]] StructureKind kind() const noexcept;

  /// Throws UnknownId.
  [[nodiscard]] AltIndex alternative_index(std::string_view label) const;
  [[nodiscard]] std::size_t criterion_index(std::string_view label) const;

  /// Variant accessors; throw WrongVariant on mismatch.
  [[nodiscard]] const PointStructure& points() const;
  [[nodiscard]] const IntervalStructure& intervals() const;
  [[nodiscard]] const RelationStructure& relations() const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  Structure structure_;
};

/// Parses the JSON problem schema (see README). Throws SchemaError,
/// DimensionError, InvalidBounds, UnknownId, DuplicateId, InconsistentRelation.
Problem parse_problem(std::string_view text);

/// Canonical JSON text; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const Problem& problem, int indent = 2);

/// {(x_i, x_q) : i != q, K_j(x_i) >= K_j(x_q)}. Throws WrongVariant.
PreferenceRelation criterion_to_relation(const Problem& problem, std::size_t criterion);
PreferenceRelation criterion_to_relation(const Problem& problem, std::string_view criterion);

/// Relation structure built columnwise from a point structure.
Problem point_to_relation_problem(const Problem& problem);

}  // namespace ivpareto

#endif  // IVPARETO_PROBLEM_HPP
