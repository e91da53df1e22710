#include "ivpareto/json_io.hpp"

#include <algorithm>
#include <string>

#include "ivpareto/error.hpp"

namespace ivpareto {

namespace {

[[noreturn]] void schema(const std::string& message, const std::string& field) {
  throw Error(ErrorCode::SchemaError, message + (field.empty() ? "" : " at " + field), field);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema("expected an object", path);
  auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing field \"") + key + "\"", path);
  return *it;
}

const Json& array_member(const Json& obj, const char* key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_array()) schema(std::string("\"") + key + "\" must be an array", path + "." + key);
  return v;
}

std::string string_value(const Json& v, const std::string& field) {
  if (!v.is_string()) schema("expected a string", field);
  return v.get<std::string>();
}

double number_value(const Json& v, const std::string& field) {
  if (!v.is_number()) schema("expected a number", field);
  return v.get<double>();
}

std::vector<std::string> labels(const Json& arr, const std::string& field) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string_value(arr[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

template <typename T, typename Cell>
Grid<T> read_matrix(const Json& rows, std::size_t n, std::size_t m, Cell cell) {
  if (rows.size() != n) {
    throw Error(ErrorCode::DimensionError, "matrix needs one row per alternative", "structure.matrix");
  }
  Grid<T> grid(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_field = "structure.matrix[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) schema("matrix rows must be arrays", row_field);
    if (rows[i].size() != m) {
      throw Error(ErrorCode::DimensionError, "matrix row needs one entry per criterion", row_field);
    }
    for (std::size_t j = 0; j < m; ++j) {
      grid(i, j) = cell(rows[i][j], row_field + "[" + std::to_string(j) + "]");
    }
  }
  return grid;
}

std::uint64_t sequence_value(const Json& j) {
  const Json& v = member(j, "sequence", "event");
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) schema("sequence must be a positive integer", "sequence");
  return v.get<std::uint64_t>();
}

}  // namespace

Json interval_to_json(const Interval& d) { return Json::array({d.lower(), d.upper()}); }

Interval interval_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) schema("interval must be a two-element array", field);
  try {
    return Interval(number_value(j[0], field), number_value(j[1], field));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidBounds) throw Error(ErrorCode::InvalidBounds, e.what(), field);
    throw;
  }
}

Json problem_to_json(const Problem& problem) {
  Json out;
  out["alternatives"] = problem.alternatives();
  out["criteria"] = problem.criteria();
  const std::size_t n = problem.alternative_count();
  const std::size_t m = problem.criterion_count();
  Json s;
  s["kind"] = std::string(to_string(problem.kind()));
  if (problem.kind() == StructureKind::Point) {
    const auto& k = problem.points().values;
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m; ++j) row.push_back(k(i, j));
      rows.push_back(std::move(row));
    }
    s["matrix"] = std::move(rows);
  } else if (problem.kind() == StructureKind::Interval) {
    const auto& st = problem.intervals();
    s["mode"] = std::string(to_string(st.mode));
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m; ++j) row.push_back(interval_to_json(st.intervals(i, j)));
      rows.push_back(std::move(row));
    }
    s["matrix"] = std::move(rows);
  } else {
    const auto& rels = problem.relations().relations;
    Json arr = Json::array();
    for (std::size_t j = 0; j < m; ++j) {
      Json pairs = Json::array();
      for (const auto& [a, b] : rels[j].matrix().pairs()) {
        pairs.push_back(Json::array({problem.alternatives()[a], problem.alternatives()[b]}));
      }
      arr.push_back({{"criterion", problem.criteria()[j]}, {"pairs", std::move(pairs)}});
    }
    s["relations"] = std::move(arr);
  }
  out["structure"] = std::move(s);
  return out;
}

Problem problem_from_json(const Json& j) {
  if (!j.is_object()) schema("problem must be a JSON object", "");
  auto alternatives = labels(array_member(j, "alternatives", "problem"), "alternatives");
  auto criteria = labels(array_member(j, "criteria", "problem"), "criteria");
  const Json& s = member(j, "structure", "problem");
  const std::string kind = string_value(member(s, "kind", "structure"), "structure.kind");
  const std::size_t n = alternatives.size();
  const std::size_t m = criteria.size();

  if (kind == "point") {
    auto grid = read_matrix<double>(array_member(s, "matrix", "structure"), n, m,
                                    [](const Json& v, const std::string& f) { return number_value(v, f); });
    return Problem(std::move(alternatives), std::move(criteria), PointStructure{std::move(grid)});
  }
  if (kind == "interval") {
    DominanceMode mode = DominanceMode::Strict;
    if (auto it = s.find("mode"); it != s.end()) mode = parse_dominance_mode(string_value(*it, "structure.mode"));
    auto grid = read_matrix<Interval>(array_member(s, "matrix", "structure"), n, m, interval_from_json);
    return Problem(std::move(alternatives), std::move(criteria), IntervalStructure{std::move(grid), mode});
  }
  if (kind == "relation") {
    // Label lookup needs the ids validated first; a throwaway problem does that.
    Problem ids(alternatives, criteria, RelationStructure{std::vector<PreferenceRelation>(m, PreferenceRelation(n))});
    std::vector<PreferenceRelation> rels(m, PreferenceRelation(n));
    std::vector<bool> seen(m, false);
    const Json& arr = array_member(s, "relations", "structure");
    for (std::size_t r = 0; r < arr.size(); ++r) {
      const std::string field = "structure.relations[" + std::to_string(r) + "]";
      const std::size_t c = ids.criterion_index(string_value(member(arr[r], "criterion", field), field + ".criterion"));
      if (seen[c]) throw Error(ErrorCode::DuplicateId, "two relations for criterion \"" + criteria[c] + "\"", criteria[c]);
      seen[c] = true;
      const Json& pairs = array_member(arr[r], "pairs", field);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const std::string pf = field + ".pairs[" + std::to_string(p) + "]";
        if (!pairs[p].is_array() || pairs[p].size() != 2) schema("pair must be a two-element array", pf);
        rels[c].add(ids.alternative_index(string_value(pairs[p][0], pf)),
                    ids.alternative_index(string_value(pairs[p][1], pf)));
      }
    }
    return Problem(std::move(alternatives), std::move(criteria), RelationStructure{std::move(rels)});
  }
  schema("unknown structure kind \"" + kind + "\"", "structure.kind");
}

Problem parse_problem(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

std::string serialize_problem(const Problem& problem, int indent) { return problem_to_json(problem).dump(indent); }

Json alt_set_to_json(const Problem& problem, const AltSet& set) {
  Json out = Json::array();
  for (AltIndex x : set) out.push_back(problem.alternatives()[x]);
  return out;
}

AltSet alt_set_from_json(const Problem& problem, const Json& j, const std::string& field) {
  if (!j.is_array()) schema("expected an array of alternative labels", field);
  AltSet out;
  for (const auto& v : j) out.push_back(problem.alternative_index(string_value(v, field)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json result_to_json(const Problem& problem, const ParetoResult& result) {
  const auto& alts = problem.alternatives();
  Json out;
  out["pareto"] = alt_set_to_json(problem, result.pareto_set);
  Json doms = Json::array();
  for (const auto& [y, x] : result.domination.pairs()) doms.push_back(Json::array({alts[y], alts[x]}));
  out["dominations"] = std::move(doms);
  Json witnesses = Json::object();
  for (const auto& [x, w] : result.witnesses) {
    Json margins = Json::object();
    for (std::size_t j = 0; j < w.margins.size(); ++j) margins[problem.criteria()[j]] = w.margins[j];
    witnesses[alts[x]] = {{"by", alts[w.dominator]}, {"margins", std::move(margins)}};
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json event_to_json(const Problem& base, const RefinementEvent& event) {
  Json out;
  out["sequence"] = event.sequence;
  if (const auto* t = std::get_if<TightenInterval>(&event.payload)) {
    out["kind"] = "tighten";
    out["alternative"] = base.alternatives()[t->alternative];
    out["criterion"] = base.criteria()[t->criterion];
    out["interval"] = interval_to_json(t->bounds);
  } else {
    const auto& c = std::get<AddComparison>(event.payload);
    out["kind"] = "compare";
    out["criterion"] = base.criteria()[c.criterion];
    out["preferred"] = base.alternatives()[c.preferred];
    out["other"] = base.alternatives()[c.other];
  }
  if (!event.timestamp.empty()) out["timestamp"] = event.timestamp;
  return out;
}

RefinementEvent event_from_json(const Problem& base, const Json& j) {
  if (!j.is_object()) schema("event must be a JSON object", "event");
  RefinementEvent event;
  event.sequence = sequence_value(j);
  if (auto it = j.find("timestamp"); it != j.end()) event.timestamp = string_value(*it, "timestamp");
  const std::string kind = string_value(member(j, "kind", "event"), "kind");
  if (kind == "tighten") {
    TightenInterval t;
    t.alternative = base.alternative_index(string_value(member(j, "alternative", "event"), "alternative"));
    t.criterion = base.criterion_index(string_value(member(j, "criterion", "event"), "criterion"));
    t.bounds = interval_from_json(member(j, "interval", "event"), "interval");
    event.payload = t;
  } else if (kind == "compare") {
    AddComparison c;
    c.criterion = base.criterion_index(string_value(member(j, "criterion", "event"), "criterion"));
    c.preferred = base.alternative_index(string_value(member(j, "preferred", "event"), "preferred"));
    c.other = base.alternative_index(string_value(member(j, "other", "event"), "other"));
    event.payload = c;
  } else {
    schema("event kind must be \"tighten\" or \"compare\"", "kind");
  }
  return event;
}

Json delta_to_json(const Problem& base, const SessionDelta& delta) {
  Json changed = Json::array();
  for (const auto& c : delta.changed_intervals) {
    changed.push_back({{"alternative", base.alternatives()[c.alternative]},
                       {"criterion", base.criteria()[c.criterion]},
                       {"old", interval_to_json(c.before)},
                       {"new", interval_to_json(c.after)}});
  }
  return {{"sequence", delta.sequence},
          {"new_pareto", alt_set_to_json(base, delta.new_pareto)},
          {"removed", alt_set_to_json(base, delta.removed)},
          {"changed_intervals", std::move(changed)},
          {"nesting_ok", delta.nesting_ok}};
}

Json suggestions_to_json(const Problem& base, const std::vector<Suggestion>& suggestions) {
  Json out = Json::array();
  for (const auto& s : suggestions) {
    if (const auto* p = std::get_if<ComparePair>(&s.kind)) {
      Json crits = Json::array();
      for (std::size_t j : p->criteria) crits.push_back(base.criteria()[j]);
      out.push_back({{"kind", "compare"},
                     {"first", base.alternatives()[p->first]},
                     {"second", base.alternatives()[p->second]},
                     {"criteria", std::move(crits)},
                     {"multiplicity", p->multiplicity},
                     {"score", s.score}});
    } else {
      const auto& t = std::get<TightenCell>(s.kind);
      out.push_back({{"kind", "tighten"},
                     {"alternative", base.alternatives()[t.alternative]},
                     {"criterion", base.criteria()[t.criterion]},
                     {"width", t.width},
                     {"score", s.score}});
    }
  }
  return out;
}

Json history_to_json(const Problem& base, const HistoryReport& history) {
  Json chain = Json::array();
  for (const auto& set : history.chain) chain.push_back(alt_set_to_json(base, set));
  Json out{{"chain", std::move(chain)}, {"nesting_ok", history.nesting_ok}};
  if (history.baseline_ok) out["baseline_ok"] = *history.baseline_ok;
  return out;
}

Json session_to_json(const Session& session) {
  Json log = Json::array();
  for (const auto& e : session.log()) log.push_back(event_to_json(session.base(), e));
  Json out{{"id", session.id()}, {"base", problem_to_json(session.base())}, {"log", std::move(log)}};
  if (session.baseline()) out["baseline"] = alt_set_to_json(session.base(), *session.baseline());
  return out;
}

Session session_from_json(const Json& j) {
  if (!j.is_object()) schema("session must be a JSON object", "");
  std::string id = string_value(member(j, "id", "session"), "id");
  Problem base = problem_from_json(member(j, "base", "session"));
  std::vector<RefinementEvent> log;
  const Json& arr = array_member(j, "log", "session");
  for (const auto& e : arr) {
    try {
      log.push_back(event_from_json(base, e));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::SchemaError) throw;
      throw Error(ErrorCode::ReplayError, std::string("logged event does not fit the base problem (") + err.what() + ")");
    }
  }
  std::optional<AltSet> baseline;
  if (auto it = j.find("baseline"); it != j.end() && !it->is_null()) {
    baseline = alt_set_from_json(base, *it, "baseline");
  }
  return Session::replay(std::move(id), std::move(base), log, std::move(baseline));
}

}  // namespace ivpareto
