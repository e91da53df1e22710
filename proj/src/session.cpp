#include "ivpareto/session.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <stdexcept>

#include "ivpareto/error.hpp"
#include "ivpareto/io.hpp"
#include "ivpareto/json_io.hpp"
#include "ivpareto/utility.hpp"

namespace ivpareto {

namespace {

AltSet set_difference(const AltSet& a, const AltSet& b) {
  AltSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_index(std::size_t index, std::size_t bound, const char* what) {
  if (index >= bound) {
    throw Error(ErrorCode::UnknownId, std::string(what) + " index " + std::to_string(index) + " out of range");
  }
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Session::Session(std::string id, Problem base, std::optional<AltSet> baseline)
    : id_(std::move(id)), base_(std::move(base)), baseline_(std::move(baseline)) {}

Session Session::create(std::string id, Problem base, std::optional<AltSet> baseline) {
  if (base.kind() == StructureKind::Point) {
    throw Error(ErrorCode::WrongVariant, "point problems carry complete information; wrap them in intervals first");
  }
  if (baseline) {
    std::sort(baseline->begin(), baseline->end());
    baseline->erase(std::unique(baseline->begin(), baseline->end()), baseline->end());
    for (AltIndex x : *baseline) check_index(x, base.alternative_count(), "baseline alternative");
  }
  Session s(std::move(id), std::move(base), std::move(baseline));
  if (s.relation_based()) {
    s.relations_ = s.base_.relations().relations;
    s.working_ = IntervalStructure{utility_intervals(s.relations_), DominanceMode::Strict};
  } else {
    s.working_ = s.base_.intervals();
  }
  s.current_ = interval_pareto(s.working_);
  s.history_.push_back(s.current_.pareto_set);
  return s;
}

Session Session::replay(std::string id, Problem base, std::span<const RefinementEvent> log,
                        std::optional<AltSet> baseline) {
  Session s = create(std::move(id), std::move(base), std::move(baseline));
  for (const auto& event : log) {
    try {
      s.apply(event);
    } catch (const Error& e) {
      throw Error(ErrorCode::ReplayError,
                  "event " + std::to_string(event.sequence) + " cannot be replayed (" + e.what() + ")");
    }
  }
  return s;
}

SessionDelta Session::apply(RefinementEvent event) {
  if (event.sequence != next_sequence()) {
    throw Error(ErrorCode::StaleSequence, "expected sequence " + std::to_string(next_sequence()) + ", got " +
                                              std::to_string(event.sequence));
  }
  const std::size_t n = base_.alternative_count();
  const std::size_t m = base_.criterion_count();
  IntervalStructure next = working_;
  std::vector<PreferenceRelation> next_relations;

  if (const auto* tighten = std::get_if<TightenInterval>(&event.payload)) {
    if (relation_based()) {
      throw Error(ErrorCode::WrongVariant, "relation-based sessions accept comparisons, not interval edits");
    }
    check_index(tighten->alternative, n, "alternative");
    check_index(tighten->criterion, m, "criterion");
    auto& cell = next.intervals(tighten->alternative, tighten->criterion);
    cell = contract(cell, tighten->bounds);
  } else {
    const auto& cmp = std::get<AddComparison>(event.payload);
    if (!relation_based()) {
      throw Error(ErrorCode::WrongVariant, "interval-based sessions accept interval edits, not comparisons");
    }
    check_index(cmp.criterion, m, "criterion");
    check_index(cmp.preferred, n, "alternative");
    check_index(cmp.other, n, "alternative");
    if (cmp.preferred == cmp.other) throw Error(ErrorCode::SamePair, "an alternative cannot be compared with itself");
    const PreferenceRelation& old = relations_[cmp.criterion];
    PreferenceRelation grown = old;
    grown.add(cmp.preferred, cmp.other);
    grown = transitive_closure(std::move(grown));
    for (const auto& [a, b] : old.matrix().pairs()) {
      if (!old.prefers(b, a) && grown.prefers(b, a)) {
        throw Error(ErrorCode::ContradictoryInformation,
                    "the comparison turns the strict preference " + base_.alternatives()[a] + " > " +
                        base_.alternatives()[b] + " on " + base_.criteria()[cmp.criterion] +
                        " into indifference or reversal");
      }
    }
    next_relations = relations_;
    next_relations[cmp.criterion] = std::move(grown);
    next.intervals = utility_intervals(next_relations);
  }

  SessionDelta delta;
  delta.sequence = event.sequence;
  for (AltIndex i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Interval& before = working_.intervals(i, j);
      const Interval& after = next.intervals(i, j);
      if (before == after) continue;
      if (!after.within(before)) throw std::logic_error("refinement widened a working interval");
      delta.changed_intervals.push_back({i, j, before, after});
    }
  }
  ParetoResult result = interval_pareto(next);
  delta.nesting_ok = is_subset(result.pareto_set, current_.pareto_set);
  if (!delta.nesting_ok) throw std::logic_error("refinement enlarged the Pareto set");
  delta.new_pareto = result.pareto_set;
  delta.removed = set_difference(current_.pareto_set, result.pareto_set);

  // Commit; nothing below throws except allocation.
  if (event.timestamp.empty()) event.timestamp = utc_timestamp();
  working_ = std::move(next);
  if (relation_based()) relations_ = std::move(next_relations);
  history_.push_back(result.pareto_set);
  current_ = std::move(result);
  log_.push_back(std::move(event));
  return delta;
}

void Session::undo() {
  if (log_.empty()) throw Error(ErrorCode::EmptyLog, "nothing to undo");
  std::vector<RefinementEvent> kept(log_.begin(), log_.end() - 1);
  *this = replay(id_, base_, kept, baseline_);
}

std::vector<Suggestion> Session::suggestions(std::size_t k) const {
  std::vector<Suggestion> out;
  if (k == 0) return out;
  const AltSet& members = current_.pareto_set;
  if (relation_based()) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        ComparePair pair{members[a], members[b], {}, 0};
        for (std::size_t j = 0; j < relations_.size(); ++j) {
          const auto& r = relations_[j];
          if (!r.prefers(pair.first, pair.second) && !r.prefers(pair.second, pair.first)) pair.criteria.push_back(j);
        }
        pair.multiplicity = pair.criteria.size();
        if (pair.multiplicity == 0) continue;
        const double score = static_cast<double>(pair.multiplicity);
        out.push_back({std::move(pair), score});
      }
    }
    // Stable: equal multiplicities keep declaration order.
    std::stable_sort(out.begin(), out.end(), [](const Suggestion& l, const Suggestion& r) {
      return std::get<ComparePair>(l.kind).multiplicity > std::get<ComparePair>(r.kind).multiplicity;
    });
  } else {
    for (AltIndex x : members) {
      for (std::size_t j = 0; j < working_.intervals.cols(); ++j) {
        const double w = working_.intervals(x, j).width();
        if (w > 0.0) out.push_back({TightenCell{x, j, w}, w});
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Suggestion& l, const Suggestion& r) { return l.score > r.score; });
  }
  if (out.size() > k) out.resize(k);
  return out;
}

HistoryReport Session::pareto_history() const {
  HistoryReport report;
  report.chain = history_;
  std::vector<AltSet> newest_first(history_.rbegin(), history_.rend());
  report.nesting_ok = check_nesting(newest_first);
  if (baseline_) report.baseline_ok = is_subset(*baseline_, history_.back());
  return report;
}

Problem Session::working_problem() const { return Problem(base_.alternatives(), base_.criteria(), working_); }

void save_session(const Session& session, const std::filesystem::path& path) {
  write_file_atomic(path, session_to_json(session).dump(2) + "\n");
}

Session load_session(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, "session file is not valid JSON: " + std::string(e.what()), path.string());
  }
  return session_from_json(doc);
}

}  // namespace ivpareto
