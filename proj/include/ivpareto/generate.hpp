/**
 * @file generate.hpp
 * @brief Seeded random problem instances with hidden complete information.
 *
 * Interval instances hide one true point per cell inside its interval.
 * Relation instances hide a connected total preorder per criterion; the
 * observed relation keeps a random subset of unordered pairs (both
 * directions of an indifference together) and is then closed, so every
 * observed strict preference is a true strict preference.
 */

#ifndef IVPARETO_GENERATE_HPP
#define IVPARETO_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ivpareto/problem.hpp"

namespace ivpareto {

using Rng = std::mt19937_64;

/// "x1".."xn" and "K1".."Km".
std::vector<std::string> alternative_labels(std::size_t n);
std::vector<std::string> criterion_labels(std::size_t m);

struct GeneratedInstance {
  Problem problem;
  /// Complete-information problem the observed one was derived from: the
  /// true point matrix (point/interval variants) or the connected relations.
  Problem hidden_truth;
};

/// Integer-valued point matrix with values in [0, levels).
Problem random_point_problem(Rng& rng, std::size_t n, std::size_t m, int levels = 10);
GeneratedInstance random_interval_instance(Rng& rng, std::size_t n, std::size_t m,
                                           DominanceMode mode = DominanceMode::Strict);
GeneratedInstance random_relation_instance(Rng& rng, std::size_t n, std::size_t m);

/// Random connected total preorder on n alternatives.
PreferenceRelation random_total_preorder(Rng& rng, std::size_t n);
/// Random transitive relation: a total preorder with random unordered pairs removed, then closed.
PreferenceRelation random_transitive_relation(Rng& rng, std::size_t n);

/// Deterministic for a fixed seed. Throws DimensionError when n or m is zero.
GeneratedInstance generate_instance(std::size_t n, std::size_t m, StructureKind variant, std::uint64_t seed);

}  // namespace ivpareto

#endif  // IVPARETO_GENERATE_HPP
