#include "ivpareto/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ivpareto/error.hpp"
#include "ivpareto/generate.hpp"
#include "ivpareto/pareto.hpp"
#include "ivpareto/session.hpp"
#include "ivpareto/utility.hpp"

namespace ivpareto {

namespace {

using Report = std::function<void(std::string)>;

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string show(const AltSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << 'x' << s[i] + 1;
  out << '}';
  return out.str();
}

// Brute-force Pareto sets straight from the definitions. Deliberately shares
// nothing with the engine's domination matrices.
AltSet brute_point(const Grid<double>& k) {
  AltSet out;
  for (AltIndex x = 0; x < k.rows(); ++x) {
    bool beaten = false;
    for (AltIndex y = 0; y < k.rows() && !beaten; ++y) {
      int ge = 0;
      int gt = 0;
      for (std::size_t j = 0; j < k.cols(); ++j) {
        ge += k(y, j) >= k(x, j);
        gt += k(y, j) > k(x, j);
      }
      beaten = y != x && ge == static_cast<int>(k.cols()) && gt > 0;
    }
    if (!beaten) out.push_back(x);
  }
  return out;
}

AltSet brute_relation(const std::vector<PreferenceRelation>& r, std::size_t n) {
  auto all = [&](AltIndex a, AltIndex b) {
    for (const auto& rel : r) {
      if (!rel.prefers(a, b)) return false;
    }
    return true;
  };
  AltSet out;
  for (AltIndex x = 0; x < n; ++x) {
    bool beaten = false;
    for (AltIndex y = 0; y < n && !beaten; ++y) beaten = y != x && all(y, x) && !all(x, y);
    if (!beaten) out.push_back(x);
  }
  return out;
}

AltSet brute_interval(const IntervalStructure& s) {
  const auto& d = s.intervals;
  AltSet out;
  for (AltIndex x = 0; x < d.rows(); ++x) {
    auto clears_all = [&](AltIndex a, AltIndex b) {
      bool every = true;
      for (std::size_t j = 0; j < d.cols(); ++j) {
        const bool clears = s.mode == DominanceMode::Strict ? d(a, j).lower() > d(b, j).upper()
                                                             : d(a, j).lower() >= d(b, j).upper();
        every = every && clears;
      }
      return every;
    };
    bool beaten = false;
    for (AltIndex y = 0; y < d.rows() && !beaten; ++y) {
      if (y != x) beaten = clears_all(y, x) && !clears_all(x, y);
    }
    if (!beaten) out.push_back(x);
  }
  return out;
}

void oracle_instance(Rng& rng, const Report& report) {
  const std::size_t n = draw(rng, 1, 7);
  const std::size_t m = draw(rng, 1, 3);
  Problem point = random_point_problem(rng, n, m);
  if (auto got = point_pareto(point).pareto_set; got != brute_point(point.points().values)) {
    report("point_pareto " + show(got) + " differs from brute force");
  }
  const auto mode = std::bernoulli_distribution(0.5)(rng) ? DominanceMode::Strict : DominanceMode::Weak;
  Problem interval = random_interval_instance(rng, n, m, mode).problem;
  if (auto got = interval_pareto(interval).pareto_set; got != brute_interval(interval.intervals())) {
    report("interval_pareto " + show(got) + " differs from brute force");
  }
  Problem relation = random_relation_instance(rng, n, m).problem;
  if (auto got = vpr_pareto(relation).pareto_set; got != brute_relation(relation.relations().relations, n)) {
    report("vpr_pareto " + show(got) + " differs from brute force");
  }
}

void eq6_instance(Rng& rng, const Report& report) {
  Problem point = random_point_problem(rng, draw(rng, 1, 8), draw(rng, 1, 4));
  const AltSet direct = point_pareto(point).pareto_set;
  const AltSet via = vpr_pareto(point_to_relation_problem(point)).pareto_set;
  if (direct != via) report("point Pareto " + show(direct) + " != relation Pareto " + show(via));
}

void eq14_instance(Rng& rng, const Report& report) {
  const std::size_t n = draw(rng, 1, 8);
  const PreferenceRelation rel = random_transitive_relation(rng, n);
  for (AltIndex x = 0; x < n; ++x) {
    const auto lo = lower_utility(rel, x);
    const auto hi = upper_utility(rel, x);
    const bool tight = incomparable_set(rel, x).empty();
    if (hi < lo) report("upper utility below lower utility");
    if ((hi == lo) != tight) report("utility bracket tightness disagrees with incomparability");
  }
  const PreferenceRelation full = random_total_preorder(rng, n);
  const Grid<Interval> column = utility_intervals(std::span(&full, 1));
  for (AltIndex x = 0; x < n; ++x) {
    if (!column(x, 0).is_degenerate()) report("connected relation produced a non-degenerate interval");
  }
}

struct DialogChecks {
  bool nesting = false;
  bool refinement = false;
};

// Shared per-step checks for both dialogue harnesses.
void check_step(const Session& before, const Session& after, const AltSet& baseline, const AltSet& initial,
                const DialogChecks& checks, const Report& report) {
  const AltSet& now = after.current().pareto_set;
  if (now.empty()) report("empty Pareto set");
  if (checks.nesting && (!is_subset(baseline, now) || !is_subset(now, initial))) {
    report("nesting broken: baseline " + show(baseline) + ", current " + show(now) + ", initial " + show(initial));
  }
  if (checks.refinement) {
    if (!is_subset(now, before.current().pareto_set)) report("Pareto set gained a member");
    const auto& a = before.working().intervals;
    const auto& b = after.working().intervals;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!b(i, j).within(a(i, j))) report("working interval widened");
      }
    }
  }
}

void expect_rejection(Session& session, RefinementEvent event, ErrorCode expected, const DialogChecks& checks,
                      const Report& report) {
  const Session snapshot = session;
  try {
    session.apply(std::move(event));
    report("invalid event was accepted");
  } catch (const Error& e) {
    if (e.code() != expected) report(std::string("unexpected rejection code ") + std::string(to_string(e.code())));
  }
  if (checks.refinement && !(session == snapshot)) report("rejected event changed session state");
}

void interval_dialog(Rng& rng, const DialogChecks& checks, const Report& report) {
  const std::size_t n = draw(rng, 1, 8);
  const std::size_t m = draw(rng, 1, 3);
  auto inst = random_interval_instance(rng, n, m);
  const Grid<double>& truth = inst.hidden_truth.points().values;
  const AltSet baseline = point_pareto(inst.hidden_truth).pareto_set;
  Session session = Session::create("harness", inst.problem, baseline);
  const AltSet initial = session.current().pareto_set;
  check_step(session, session, baseline, initial, checks, report);
  const std::size_t steps = draw(rng, 5, 20);
  const double fractions[] = {0.0, 0.5, 1.0};
  for (std::size_t s = 0; s < steps; ++s) {
    const AltIndex i = draw(rng, 0, n - 1);
    const std::size_t j = draw(rng, 0, m - 1);
    const Interval cur = session.working().intervals(i, j);
    if (std::bernoulli_distribution(0.15)(rng)) {
      RefinementEvent bad{session.next_sequence(), "", TightenInterval{i, j, Interval(cur.lower() - 1, cur.upper())}};
      expect_rejection(session, bad, ErrorCode::NotAContraction, checks, report);
      continue;
    }
    if (std::bernoulli_distribution(0.05)(rng)) {
      RefinementEvent stale{session.next_sequence() + 1, "", TightenInterval{i, j, cur}};
      expect_rejection(session, stale, ErrorCode::StaleSequence, checks, report);
      continue;
    }
    const double p = truth(i, j);
    const double lo = cur.lower() + (p - cur.lower()) * fractions[draw(rng, 0, 2)];
    const double hi = cur.upper() - (cur.upper() - p) * fractions[draw(rng, 0, 2)];
    const Session before = session;
    try {
      session.apply({session.next_sequence(), "", TightenInterval{i, j, Interval(lo, hi)}});
    } catch (const std::exception& e) {
      report(std::string("true contraction rejected: ") + e.what());
      continue;
    }
    check_step(before, session, baseline, initial, checks, report);
  }
}

void relation_dialog(Rng& rng, const DialogChecks& checks, const Report& report) {
  const std::size_t n = draw(rng, 1, 8);
  const std::size_t m = draw(rng, 1, 3);
  auto inst = random_relation_instance(rng, n, m);
  const auto& hidden = inst.hidden_truth.relations().relations;
  const AltSet baseline = vpr_pareto(inst.hidden_truth).pareto_set;
  Session session = Session::create("harness", inst.problem, baseline);
  const AltSet initial = session.current().pareto_set;
  check_step(session, session, baseline, initial, checks, report);
  const std::size_t steps = draw(rng, 5, 20);
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<std::tuple<std::size_t, AltIndex, AltIndex>> unrevealed;
    std::vector<std::tuple<std::size_t, AltIndex, AltIndex>> reversals;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& cur = session.relations()[j];
      for (const auto& [a, b] : hidden[j].matrix().pairs()) {
        if (!hidden[j].prefers(b, a) && !cur.prefers(a, b)) unrevealed.emplace_back(j, a, b);
        if (cur.prefers(a, b) && !cur.prefers(b, a)) reversals.emplace_back(j, b, a);
      }
    }
    if (!reversals.empty() && std::bernoulli_distribution(0.15)(rng)) {
      const auto [j, a, b] = reversals[draw(rng, 0, reversals.size() - 1)];
      expect_rejection(session, {session.next_sequence(), "", AddComparison{j, a, b}},
                       ErrorCode::ContradictoryInformation, checks, report);
      continue;
    }
    if (unrevealed.empty()) break;
    const auto [j, a, b] = unrevealed[draw(rng, 0, unrevealed.size() - 1)];
    const Session before = session;
    try {
      session.apply({session.next_sequence(), "", AddComparison{j, a, b}});
    } catch (const std::exception& e) {
      report(std::string("true comparison rejected: ") + e.what());
      continue;
    }
    check_step(before, session, baseline, initial, checks, report);
  }
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Nesting: return "nesting";
    case Suite::Refinement: return "refinement";
    case Suite::Oracle: return "oracle";
    case Suite::Eq14: return "eq14";
    case Suite::Eq6: return "eq6";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::Nesting, Suite::Refinement, Suite::Oracle, Suite::Eq14, Suite::Eq6}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::SchemaError, "unknown suite \"" + std::string(name) + "\"", "suite");
}

VerifyReport run_suite(Suite suite, std::size_t instances, std::uint64_t seed) {
  VerifyReport out{suite, instances, seed, {}};
  for (std::size_t i = 0; i < instances; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(suite)};
    Rng rng(seq);
    Report report = [&out, i](std::string detail) { out.violations.push_back({i, std::move(detail)}); };
    try {
      switch (suite) {
        case Suite::Oracle: oracle_instance(rng, report); break;
        case Suite::Eq6: eq6_instance(rng, report); break;
        case Suite::Eq14: eq14_instance(rng, report); break;
        case Suite::Nesting:
          interval_dialog(rng, {true, false}, report);
          relation_dialog(rng, {true, false}, report);
          break;
        case Suite::Refinement:
          interval_dialog(rng, {false, true}, report);
          relation_dialog(rng, {false, true}, report);
          break;
      }
    } catch (const std::exception& e) {
      report(std::string("unexpected failure: ") + e.what());
    }
  }
  return out;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back({{"instance", v.instance}, {"detail", v.detail}});
  return {{"suite", std::string(to_string(report.suite))},
          {"instances", report.instances},
          {"seed", report.seed},
          {"violations", std::move(violations)}};
}

}  // namespace ivpareto
