/**
 * @file verify.hpp
 * @brief Randomized property suites that re-certify the engine on demand.
 *
 *  - oracle:     every Pareto operation against a brute-force definitional check;
 *  - eq6:        relation route over criterion_to_relation equals point Pareto;
 *  - eq14:       utility brackets are ordered, tight exactly without incomparables;
 *  - nesting:    hidden truth ⊆ refined Pareto set ⊆ initial Pareto set, every step;
 *  - refinement: intervals never widen, Pareto sets never grow, rejected events
 *                leave the session untouched.
 */

#ifndef IVPARETO_VERIFY_HPP
#define IVPARETO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ivpareto {

enum class Suite { Nesting, Refinement, Oracle, Eq14, Eq6 };

std::string_view to_string(Suite suite) noexcept;
/// Throws SchemaError for an unknown name.
Suite parse_suite(std::string_view name);

struct Violation {
  std::size_t instance = 0;
  std::string detail;
};

struct VerifyReport {
  Suite suite = Suite::Oracle;
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;
};

/// Instance i draws from a generator seeded with (seed, i), so reports are
/// reproducible and independent of evaluation order.
VerifyReport run_suite(Suite suite, std::size_t instances, std::uint64_t seed);

/// {"suite", "instances", "seed", "violations": [{"instance", "detail"}]}
nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace ivpareto

#endif  // IVPARETO_VERIFY_HPP
