/**
 * @file json_io.hpp
 * @brief JSON encodings of engine values. Alternatives and criteria are
 * always written by label; intervals are two-element arrays [lower, upper].
 */

#ifndef IVPARETO_JSON_IO_HPP
#define IVPARETO_JSON_IO_HPP

#include <json.hpp>

#include "ivpareto/pareto.hpp"
#include "ivpareto/problem.hpp"
#include "ivpareto/session.hpp"

namespace ivpareto {

using Json = nlohmann::json;

Json interval_to_json(const Interval& d);
/// Throws SchemaError or InvalidBounds.
Interval interval_from_json(const Json& j, const std::string& field);

Json problem_to_json(const Problem& problem);
Problem problem_from_json(const Json& j);

Json alt_set_to_json(const Problem& problem, const AltSet& set);
/// Throws SchemaError or UnknownId.
AltSet alt_set_from_json(const Problem& problem, const Json& j, const std::string& field);

/// {"pareto": [...], "dominations": [["y","x"],...], "witnesses": {"x": {"by":"y","margins":{...}}}}
Json result_to_json(const Problem& problem, const ParetoResult& result);

Json event_to_json(const Problem& base, const RefinementEvent& event);
RefinementEvent event_from_json(const Problem& base, const Json& j);

Json delta_to_json(const Problem& base, const SessionDelta& delta);
Json suggestions_to_json(const Problem& base, const std::vector<Suggestion>& suggestions);
Json history_to_json(const Problem& base, const HistoryReport& history);

/// {"id", "base", "log", "baseline"?}
Json session_to_json(const Session& session);
/// Replays the log; throws SchemaError or ReplayError.
Session session_from_json(const Json& j);

}  // namespace ivpareto

#endif  // IVPARETO_JSON_IO_HPP
