/**
 * @file session.hpp
 * @brief The refinement dialogue: a base problem plus an ordered log of
 * additional information.
 *
 * The working interval structure is a pure fold of the base problem and the
 * event log. Interval bases accept TightenInterval events; relation bases are
 * first mapped to utility intervals and accept AddComparison events, after
 * which the closed relations and their utility intervals are rebuilt.
 * Accepted events only contract intervals, so the recorded Pareto sets form
 * a chain newest ⊆ ... ⊆ initial.
 */

#ifndef IVPARETO_SESSION_HPP
#define IVPARETO_SESSION_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ivpareto/pareto.hpp"
#include "ivpareto/problem.hpp"

namespace ivpareto {

struct TightenInterval {
  AltIndex alternative = 0;
  std::size_t criterion = 0;
  Interval bounds;
  friend bool operator==(const TightenInterval&, const TightenInterval&) = default;
};

struct AddComparison {
  std::size_t criterion = 0;
  AltIndex preferred = 0;
  AltIndex other = 0;
  friend bool operator==(const AddComparison&, const AddComparison&) = default;
};

struct RefinementEvent {
  std::uint64_t sequence = 0;
  std::string timestamp;  // ISO-8601 UTC; filled in by Session::apply when empty
  std::variant<TightenInterval, AddComparison> payload;
  friend bool operator==(const RefinementEvent&, const RefinementEvent&) = default;
};

struct IntervalChange {
  AltIndex alternative = 0;
  std::size_t criterion = 0;
  Interval before;
  Interval after;
  friend bool operator==(const IntervalChange&, const IntervalChange&) = default;
};

struct SessionDelta {
  std::uint64_t sequence = 0;
  AltSet new_pareto;
  AltSet removed;
  std::vector<IntervalChange> changed_intervals;
  bool nesting_ok = true;
};

struct ComparePair {
  AltIndex first = 0;
  AltIndex second = 0;
  std::vector<std::size_t> criteria;  // criteria on which the pair is incomparable
  std::size_t multiplicity = 0;
};

struct TightenCell {
  AltIndex alternative = 0;
  std::size_t criterion = 0;
  double width = 0.0;
};

struct Suggestion {
  std::variant<ComparePair, TightenCell> kind;
  double score = 0.0;
};

struct HistoryReport {
  std::vector<AltSet> chain;  // oldest first
  bool nesting_ok = true;
  std::optional<bool> baseline_ok;
};

class Session {
 public:
  /// Throws WrongVariant for point problems.
  static Session create(std::string id, Problem base, std::optional<AltSet> baseline = std::nullopt);

  /// create() followed by apply() of every logged event; any rejected event
  /// is reported as ReplayError.
  static Session replay(std::string id, Problem base, std::span<const RefinementEvent> log,
                        std::optional<AltSet> baseline = std::nullopt);

  /// Applies one event. On any error the session is left unchanged.
  /// Throws StaleSequence, WrongVariant, UnknownId, SamePair,
  /// NotAContraction or ContradictoryInformation.
  SessionDelta apply(RefinementEvent event);

  /// Drops the newest event and replays. Throws EmptyLog.
  void undo();

  /// At most k suggestions for the next piece of information to supply.
  [[nodiscard]] std::vector<Suggestion> suggestions(std::size_t k) const;

  [[nodiscard]] HistoryReport pareto_history() const;

  [[nodiscard]] const std::string& id() const noexcept { return id_; }
  [[nodiscard]] const Problem& base() const noexcept { return base_; }
  [[nodiscard]] const IntervalStructure& working() const noexcept { return working_; }
  /// Current closed relations; empty for interval bases.
  [[nodiscard]] const std::vector<PreferenceRelation>& relations() const noexcept { return relations_; }
  [[nodiscard]] const std::vector<RefinementEvent>& log() const noexcept { return log_; }
  [[nodiscard]] const std::vector<AltSet>& history() const noexcept { return history_; }
  [[nodiscard]] const ParetoResult& current() const noexcept { return current_; }
  [[nodiscard]] const std::optional<AltSet>& baseline() const noexcept { return baseline_; }
  [[nodiscard]] std::uint64_t next_sequence() const noexcept { return log_.size() + 1; }
  [[nodiscard]] bool relation_based() const noexcept { return base_.kind() == StructureKind::Relation; }

  /// The base labels combined with the working intervals.
  [[nodiscard]] Problem working_problem() const;

  friend bool operator==(const Session&, const Session&) = default;

 private:
  Session(std::string id, Problem base, std::optional<AltSet> baseline);

  std::string id_;
  Problem base_;
  std::optional<AltSet> baseline_;
  IntervalStructure working_;
  std::vector<PreferenceRelation> relations_;
  std::vector<RefinementEvent> log_;
  std::vector<AltSet> history_;
  ParetoResult current_;
};

/// Atomic write (temporary file + rename). Throws IoError.
void save_session(const Session& session, const std::filesystem::path& path);
/// Throws IoError, SchemaError or ReplayError.
Session load_session(const std::filesystem::path& path);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace ivpareto

#endif  // IVPARETO_SESSION_HPP
