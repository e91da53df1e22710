// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Instances are drawn here, independently of the
// library's own generators, and checked against tests/oracle.hpp.

#include <arpa/inet.h>
#include <netinet/in.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "ivpareto/error.hpp"
#include "ivpareto/generate.hpp"
#include "ivpareto/json_io.hpp"
#include "ivpareto/pareto.hpp"
#include "ivpareto/problem.hpp"
#include "ivpareto/session.hpp"
#include "ivpareto/utility.hpp"
#include "oracle.hpp"

using namespace ivpareto;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (violations++ == 0) first = what;
  }
};

Tally c1, c2, c3, c4, c5, c6, c7, c8, c9;

void note_pareto(const AltSet& set, const char* where) { c8.expect(!set.empty(), std::string("empty Pareto set in ") + where); }

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

oracle::Set to_set(const AltSet& s) { return {s.begin(), s.end()}; }

oracle::Pairs pairs_of(const PairMatrix& m) {
  oracle::Pairs out;
  for (const auto& p : m.pairs()) out.insert(p);
  return out;
}

bool subset(const AltSet& inner, const AltSet& outer) {
  for (auto x : inner) {
    if (std::find(outer.begin(), outer.end(), x) == outer.end()) return false;
  }
  return true;
}

// Builders ------------------------------------------------------------------

std::vector<std::vector<double>> draw_points(std::mt19937_64& rng, std::size_t n, std::size_t m, int top) {
  std::vector<std::vector<double>> k(n, std::vector<double>(m));
  for (auto& row : k) {
    for (auto& v : row) v = uniform_int(rng, 0, top);
  }
  return k;
}

Problem make_point_problem(const std::vector<std::vector<double>>& k) {
  Grid<double> g(k.size(), k.front().size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = 0; j < k[i].size(); ++j) g(i, j) = k[i][j];
  }
  return {alternative_labels(k.size()), criterion_labels(k.front().size()), PointStructure{g}};
}

Problem make_interval_problem(const std::vector<std::vector<oracle::Box>>& d, DominanceMode mode) {
  Grid<Interval> g(d.size(), d.front().size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d[i].size(); ++j) g(i, j) = Interval(d[i][j].lo, d[i][j].hi);
  }
  return {alternative_labels(d.size()), criterion_labels(d.front().size()), IntervalStructure{g, mode}};
}

Problem make_relation_problem(std::size_t n, const std::vector<oracle::Pairs>& rel) {
  RelationStructure s;
  for (const auto& pairs : rel) {
    PreferenceRelation r(n);
    for (const auto& [a, b] : pairs) r.add(a, b);
    s.relations.push_back(std::move(r));
  }
  return {alternative_labels(n), criterion_labels(rel.size()), std::move(s)};
}

std::vector<std::vector<oracle::Box>> boxes_of(const IntervalStructure& s) {
  const auto& g = s.intervals;
  std::vector<std::vector<oracle::Box>> out(g.rows(), std::vector<oracle::Box>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = {g(i, j).lower(), g(i, j).upper()};
  }
  return out;
}

// Random transitive relation: random ordered pairs, then closure.
oracle::Pairs draw_transitive(std::mt19937_64& rng, std::size_t n) {
  const double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  oracle::Pairs r;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && coin(rng, density)) r.emplace(a, b);
    }
  }
  return oracle::closure(r);
}

std::vector<int> draw_levels(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> lv(n);
  for (auto& v : lv) v = uniform_int(rng, 0, static_cast<int>(n) - 1);
  return lv;
}

oracle::Pairs preorder_from(const std::vector<int>& lv) {
  oracle::Pairs r;
  for (std::size_t a = 0; a < lv.size(); ++a) {
    for (std::size_t b = 0; b < lv.size(); ++b) {
      if (a != b && lv[a] >= lv[b]) r.emplace(a, b);
    }
  }
  return r;
}

// Utility bounds counted straight from the relation.
std::pair<std::size_t, std::size_t> counted_bounds(const oracle::Pairs& r, std::size_t n, std::size_t x) {
  std::size_t beaten = 0;
  std::size_t open = 0;
  for (std::size_t y = 0; y < n; ++y) {
    if (y == x) continue;
    const bool xy = r.count({x, y}) > 0;
    const bool yx = r.count({y, x}) > 0;
    if (xy && !yx) ++beaten;
    if (!xy && !yx) ++open;
  }
  return {beaten, beaten + open};
}

// 1 -------------------------------------------------------------------------

void check_result(Tally& t, const ParetoResult& got, const oracle::Pairs& dom, std::size_t n, const std::string& tag) {
  t.expect(to_set(got.pareto_set) == oracle::undominated(dom, n), tag + ": Pareto set differs from oracle");
  t.expect(pairs_of(got.domination) == dom, tag + ": domination relation differs from oracle");
  for (const auto& [x, w] : got.witnesses) {
    t.expect(dom.count({w.dominator, x}) > 0, tag + ": witness does not dominate");
  }
  t.expect(got.witnesses.size() + got.pareto_set.size() == n, tag + ": eliminated alternatives lack witnesses");
  note_pareto(got.pareto_set, tag.c_str());
}

void criterion_oracle() {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = uniform(rng, 1, 7);
    const std::size_t m = uniform(rng, 1, 3);
    const auto k = draw_points(rng, n, m, 4);
    check_result(c1, point_pareto(make_point_problem(k)), oracle::point_dominations(k), n, "point");
  }
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = uniform(rng, 1, 7);
    const std::size_t m = uniform(rng, 1, 3);
    const bool strict = coin(rng, 0.5);
    std::vector<std::vector<oracle::Box>> d(n, std::vector<oracle::Box>(m));
    for (auto& row : d) {
      for (auto& b : row) {
        b.lo = uniform_int(rng, 0, 8);
        b.hi = b.lo + uniform_int(rng, 0, 4);
      }
    }
    const auto p = make_interval_problem(d, strict ? DominanceMode::Strict : DominanceMode::Weak);
    check_result(c1, interval_pareto(p), oracle::interval_dominations(d, strict), n, "interval");
  }
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = uniform(rng, 1, 7);
    const std::size_t m = uniform(rng, 1, 3);
    std::vector<oracle::Pairs> rel;
    for (std::size_t j = 0; j < m; ++j) rel.push_back(draw_transitive(rng, n));
    check_result(c1, vpr_pareto(make_relation_problem(n, rel)), oracle::relation_dominations(rel, n), n, "relation");
  }
}

// 2 -------------------------------------------------------------------------

void criterion_axioms() {
  std::mt19937_64 rng(202);
  auto draw = [&] {
    const int lo = uniform_int(rng, 0, 6);
    return Interval(lo, lo + uniform_int(rng, 0, 3));
  };
  const auto S = DominanceMode::Strict;
  const auto W = DominanceMode::Weak;
  for (int i = 0; i < 10000; ++i) {
    const Interval a = draw();
    const Interval b = draw();
    const Interval c = draw();
    c2.expect(!interval_dominates(a, a, S), "strict order is reflexive somewhere");
    c2.expect(!(interval_dominates(a, b, S) && interval_dominates(b, a, S)), "strict order is not asymmetric");
    if (interval_dominates(a, b, S) && interval_dominates(b, c, S)) {
      c2.expect(interval_dominates(a, c, S), "strict order is not transitive");
    }
    if (interval_dominates(a, b, W) && interval_dominates(b, c, W)) {
      c2.expect(interval_dominates(a, c, W), "weak order is not transitive");
    }
    c2.expect(interval_dominates(a, b, S) == (a.lower() > b.upper()), "strict order disagrees with its definition");
    c2.expect(interval_dominates(a, b, W) == (a.lower() >= b.upper()), "weak order disagrees with its definition");
  }
}

// 3 -------------------------------------------------------------------------

void criterion_point_vs_relation() {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = uniform(rng, 1, 8);
    const std::size_t m = uniform(rng, 1, 4);
    const auto p = make_point_problem(draw_points(rng, n, m, 5));
    RelationStructure s;
    for (std::size_t j = 0; j < m; ++j) s.relations.push_back(criterion_to_relation(p, j));
    const Problem rp(p.alternatives(), p.criteria(), std::move(s));
    const auto by_points = point_pareto(p);
    const auto by_relations = vpr_pareto(rp);
    c3.expect(by_points.pareto_set == by_relations.pareto_set, "Pareto sets differ");
    c3.expect(by_points.domination == by_relations.domination, "domination relations differ");
    note_pareto(by_relations.pareto_set, "relation route");
  }
}

// 4 -------------------------------------------------------------------------

void criterion_utility_bounds() {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = uniform(rng, 1, 8);
    const bool connected = coin(rng, 0.25);
    const oracle::Pairs r = connected ? preorder_from(draw_levels(rng, n)) : draw_transitive(rng, n);
    PreferenceRelation rel(n);
    for (const auto& [a, b] : r) rel.add(a, b);
    rel = transitive_closure(rel);
    const std::vector<PreferenceRelation> one{rel};
    const auto column = utility_intervals(one);
    for (std::size_t x = 0; x < n; ++x) {
      const auto lo = lower_utility(rel, x);
      const auto up = upper_utility(rel, x);
      const auto [want_lo, want_up] = counted_bounds(r, n, x);
      c4.expect(up >= lo, "upper utility below lower utility");
      c4.expect((up == lo) == incomparable_set(rel, x).empty(), "degenerate bracket does not match incomparability");
      c4.expect(lo == want_lo && up == want_up, "bracket differs from direct count");
      c4.expect(column(x, 0) == Interval(lo, up), "utility interval differs from bracket");
      if (connected) c4.expect(column(x, 0).is_degenerate(), "connected relation gave a wide interval");
    }
  }
}

// 5, 6, 7 -------------------------------------------------------------------

// Every rejected event must raise `want` and leave the session unchanged.
void expect_rejected(Session& s, RefinementEvent ev, ErrorCode want, const char* what) {
  const Session before = s;
  const std::string bytes = session_to_json(s).dump();
  try {
    s.apply(std::move(ev));
    c7.expect(false, std::string(what) + " was accepted");
    s = before;
  } catch (const Error& e) {
    c7.expect(e.code() == want, std::string(what) + " rejected with the wrong code");
  }
  c7.expect(s == before && session_to_json(s).dump() == bytes, std::string(what) + " changed the session");
}

// Checks shared by both harnesses after an accepted event.
void after_step(Tally& nest, const Session& s, const IntervalStructure& prev_working, const AltSet& prev_pareto,
                const AltSet& baseline, const AltSet& initial) {
  const auto& now = s.working().intervals;
  for (std::size_t i = 0; i < now.rows(); ++i) {
    for (std::size_t j = 0; j < now.cols(); ++j) {
      c7.expect(now(i, j).within(prev_working.intervals(i, j)), "a working interval widened");
    }
  }
  const auto& cur = s.current().pareto_set;
  c7.expect(subset(cur, prev_pareto), "the Pareto set gained a member");
  nest.expect(subset(baseline, cur), "complete-information Pareto set escaped the current set");
  nest.expect(subset(cur, initial), "current Pareto set escaped the initial set");
  const auto d = boxes_of(s.working());
  nest.expect(to_set(cur) == oracle::undominated(oracle::interval_dominations(d, true), d.size()),
              "current Pareto set differs from oracle on the working intervals");
  nest.expect(s.pareto_history().nesting_ok, "history chain does not nest");
  note_pareto(cur, "dialog");
}

void criterion_interval_dialog() {
  std::mt19937_64 rng(505);
  for (int run = 0; run < 1000; ++run) {
    const std::size_t n = uniform(rng, 2, 8);
    const std::size_t m = uniform(rng, 1, 4);
    const auto hidden = draw_points(rng, n, m, 9);
    std::vector<std::vector<oracle::Box>> d(n, std::vector<oracle::Box>(m));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        d[i][j] = {hidden[i][j] - uniform_int(rng, 0, 3), hidden[i][j] + uniform_int(rng, 0, 3)};
      }
    }
    const AltSet baseline = oracle::undominated(oracle::point_dominations(hidden), n);
    note_pareto(baseline, "hidden points");
    Session s = Session::create("run", make_interval_problem(d, DominanceMode::Strict), baseline);
    const AltSet initial = s.current().pareto_set;
    c5.expect(subset(baseline, initial), "complete-information Pareto set escaped the initial set");
    note_pareto(initial, "initial intervals");

    const std::size_t steps = uniform(rng, 5, 20);
    for (std::size_t k = 0; k < steps; ++k) {
      const std::size_t i = uniform(rng, 0, n - 1);
      const std::size_t j = uniform(rng, 0, m - 1);
      const Interval cell = s.working().intervals(i, j);
      const double p = hidden[i][j];

      if (coin(rng, 0.3)) {
        const std::uint64_t seq = s.next_sequence();
        switch (uniform(rng, 0, 2)) {
          case 0:
            expect_rejected(s, {seq, "", TightenInterval{i, j, Interval(cell.lower() - 1, cell.upper())}},
                            ErrorCode::NotAContraction, "escaping interval");
            break;
          case 1:
            expect_rejected(s, {seq + 1, "", TightenInterval{i, j, cell}}, ErrorCode::StaleSequence,
                            "skipped sequence");
            break;
          default:
            expect_rejected(s, {seq, "", AddComparison{j, 0, 1}}, ErrorCode::WrongVariant, "comparison on intervals");
        }
      }

      const double lo = std::uniform_real_distribution<double>(cell.lower(), p)(rng);
      const double hi = std::uniform_real_distribution<double>(p, cell.upper())(rng);
      const auto prev_working = s.working();
      const auto prev_pareto = s.current().pareto_set;
      try {
        s.apply({s.next_sequence(), "", TightenInterval{i, j, Interval(std::min(lo, p), std::max(hi, p))}});
      } catch (const std::exception& e) {
        c5.expect(false, std::string("valid contraction rejected: ") + e.what());
        continue;
      }
      after_step(c5, s, prev_working, prev_pareto, baseline, initial);
    }
  }
}

void criterion_relation_dialog() {
  std::mt19937_64 rng(606);
  for (int run = 0; run < 1000; ++run) {
    const std::size_t n = uniform(rng, 2, 7);
    const std::size_t m = uniform(rng, 1, 3);
    std::vector<std::vector<int>> levels;
    std::vector<oracle::Pairs> hidden;
    std::vector<oracle::Pairs> observed;
    const double keep = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    for (std::size_t j = 0; j < m; ++j) {
      levels.push_back(draw_levels(rng, n));
      hidden.push_back(preorder_from(levels.back()));
      oracle::Pairs kept;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (!coin(rng, keep)) continue;
          if (hidden[j].count({a, b})) kept.emplace(a, b);
          if (hidden[j].count({b, a})) kept.emplace(b, a);
        }
      }
      observed.push_back(oracle::closure(kept));
    }
    const AltSet baseline = oracle::undominated(oracle::relation_dominations(hidden, n), n);
    note_pareto(baseline, "hidden relations");
    Session s = Session::create("run", make_relation_problem(n, observed), baseline);
    const AltSet initial = s.current().pareto_set;
    c6.expect(subset(baseline, initial), "complete-information Pareto set escaped the initial set");
    note_pareto(initial, "initial brackets");

    const std::size_t steps = uniform(rng, 5, 20);
    for (std::size_t k = 0; k < steps; ++k) {
      std::vector<std::pair<std::size_t, Pair>> reveals;
      std::vector<std::pair<std::size_t, Pair>> strict_known;
      for (std::size_t j = 0; j < m; ++j) {
        const auto& rel = s.relations()[j];
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            if (levels[j][a] > levels[j][b] && !rel.prefers(a, b)) reveals.push_back({j, {a, b}});
            if (rel.prefers(a, b) && !rel.prefers(b, a)) strict_known.push_back({j, {a, b}});
          }
        }
      }
      if (reveals.empty()) break;

      if (coin(rng, 0.3)) {
        const std::uint64_t seq = s.next_sequence();
        const std::size_t kind = strict_known.empty() ? 1 : uniform(rng, 0, 2);
        if (kind == 0) {
          const auto& [j, p] = strict_known[uniform(rng, 0, strict_known.size() - 1)];
          expect_rejected(s, {seq, "", AddComparison{j, p.second, p.first}}, ErrorCode::ContradictoryInformation,
                          "reversed comparison");
        } else if (kind == 1) {
          expect_rejected(s, {seq, "", AddComparison{0, 0, 0}}, ErrorCode::SamePair, "self comparison");
        } else {
          expect_rejected(s, {seq - 1, "", AddComparison{0, 0, 1}}, ErrorCode::StaleSequence, "repeated sequence");
        }
      }

      const auto& [j, p] = reveals[uniform(rng, 0, reveals.size() - 1)];
      const auto prev_working = s.working();
      const auto prev_pareto = s.current().pareto_set;
      try {
        s.apply({s.next_sequence(), "", AddComparison{j, p.first, p.second}});
      } catch (const std::exception& e) {
        c6.expect(false, std::string("consistent comparison rejected: ") + e.what());
        continue;
      }
      after_step(c6, s, prev_working, prev_pareto, baseline, initial);
      for (std::size_t c = 0; c < m; ++c) {
        const auto r = pairs_of(s.relations()[c].matrix());
        for (std::size_t x = 0; x < n; ++x) {
          const auto [lo, up] = counted_bounds(r, n, x);
          c6.expect(s.working().intervals(x, c) == Interval(lo, up), "working interval differs from counted bracket");
        }
      }
    }
  }
}

// 9 -------------------------------------------------------------------------

int free_port() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  socklen_t len = sizeof(addr);
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr));
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return ntohs(addr.sin_port);
}

struct Server {
  pid_t pid = -1;
  int port = 0;
};

Server launch(const fs::path& state) {
  Server s;
  s.port = free_port();
  s.pid = ::fork();
  if (s.pid == 0) {
    if (!std::freopen("/dev/null", "w", stdout) || !std::freopen("/dev/null", "w", stderr)) ::_exit(127);
    const std::string port = std::to_string(s.port);
    ::execl(IVPARETO_CLI_PATH, "ivpareto", "serve", "--host", "127.0.0.1", "--port", port.c_str(), "--state-dir",
            state.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  httplib::Client c("127.0.0.1", s.port);
  const auto deadline = Clock::now() + std::chrono::seconds(10);
  while (Clock::now() < deadline) {
    if (auto r = c.Get("/healthz"); r && r->status == 200) return s;
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  ::kill(s.pid, SIGKILL);
  ::waitpid(s.pid, nullptr, 0);
  s.pid = -1;
  return s;
}

void hard_kill(Server& s) {
  if (s.pid <= 0) return;
  ::kill(s.pid, SIGKILL);
  ::waitpid(s.pid, nullptr, 0);
  s.pid = -1;
}

void criterion_crash_restart() {
  const fs::path state = fs::temp_directory_path() / ("ivpareto_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(state);

  std::vector<std::vector<oracle::Box>> d = {{{0, 20}, {0, 20}}, {{2, 18}, {1, 19}}, {{4, 16}, {3, 17}}};
  const Problem problem = make_interval_problem(d, DominanceMode::Strict);
  Session local = Session::create("local", problem);

  Server server = launch(state);
  c9.expect(server.pid > 0, "service did not start");
  if (server.pid <= 0) return;

  std::string id;
  {
    httplib::Client c("127.0.0.1", server.port);
    auto r = c.Post("/api/v1/sessions", problem_to_json(problem).dump(), "application/json");
    c9.expect(r && r->status == 201, "session was not created");
    if (!r || r->status != 201) {
      hard_kill(server);
      return;
    }
    id = Json::parse(r->body)["session_id"];
  }
  const std::string base = "/api/v1/sessions/" + id;

  std::mt19937_64 rng(909);
  for (std::uint64_t seq = 1; seq <= 10; ++seq) {
    const std::size_t i = uniform(rng, 0, 2);
    const std::size_t j = uniform(rng, 0, 1);
    const Interval cell = local.working().intervals(i, j);
    const Interval next(cell.lower() + (cell.width() > 1 ? 0.5 : 0), cell.upper() - (cell.width() > 1 ? 0.5 : 0));
    RefinementEvent ev{seq, "", TightenInterval{i, j, next}};
    const Json body = event_to_json(problem, ev);
    local.apply(ev);

    {
      httplib::Client c("127.0.0.1", server.port);
      auto r = c.Post(base + "/events", body.dump(), "application/json");
      c9.expect(r && r->status == 200, "event " + std::to_string(seq) + " was not acknowledged");
    }
    hard_kill(server);
    server = launch(state);
    c9.expect(server.pid > 0, "service did not restart");
    if (server.pid <= 0) return;

    httplib::Client c("127.0.0.1", server.port);
    auto snap = c.Get(base);
    auto hist = c.Get(base + "/history");
    if (!snap || snap->status != 200 || !hist || hist->status != 200) {
      c9.expect(false, "session lost after restart at event " + std::to_string(seq));
      continue;
    }
    const Json s = Json::parse(snap->body);
    const Json h = Json::parse(hist->body);
    c9.expect(s["log"].size() == seq, "log lost events after restart");
    c9.expect(s["next_sequence"] == seq + 1, "wrong next sequence after restart");
    c9.expect(s["working"] == problem_to_json(local.working_problem()), "working intervals differ after restart");
    c9.expect(h["chain"] == history_to_json(problem, local.pareto_history())["chain"],
              "history chain differs after restart");
    c9.expect(h["nesting_ok"] == true, "restarted history does not nest");
  }

  {
    httplib::Client c("127.0.0.1", server.port);
    const Json dup = event_to_json(problem, local.log().back());
    auto r = c.Post(base + "/events", dup.dump(), "application/json");
    c9.expect(r && r->status == 409 && Json::parse(r->body)["code"] == "STALE_SEQUENCE",
              "duplicated sequence not reported as STALE_SEQUENCE");
  }
  hard_kill(server);
  fs::remove_all(state);
}

bool report(int number, const char* name, const Tally& t, double seconds) {
  const bool ok = t.violations == 0 && t.checks > 0;
  std::printf("%s %d %s: %zu checks, %zu violations, %.2f s%s%s\n", ok ? "PASS" : "FAIL", number, name, t.checks,
              t.violations, seconds, t.first.empty() ? "" : "; first: ", t.first.c_str());
  return ok;
}

}  // namespace

int main() {
  struct Step {
    int number;
    const char* name;
    Tally* tally;
    std::function<void()> body;
  };
  const std::vector<Step> steps = {
      {1, "oracle equivalence", &c1, criterion_oracle},
      {2, "interval order axioms", &c2, criterion_axioms},
      {3, "point and relation Pareto sets agree", &c3, criterion_point_vs_relation},
      {4, "utility brackets", &c4, criterion_utility_bounds},
      {5, "interval refinement nesting", &c5, criterion_interval_dialog},
      {6, "relation refinement nesting", &c6, criterion_relation_dialog},
      {9, "service crash-restart", &c9, criterion_crash_restart},
  };

  std::vector<std::pair<int, double>> timings;
  for (const auto& step : steps) {
    const auto t0 = Clock::now();
    try {
      step.body();
    } catch (const std::exception& e) {
      step.tally->expect(false, std::string("unexpected exception: ") + e.what());
    }
    timings.emplace_back(step.number, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  auto seconds = [&](int number) {
    for (const auto& [n, s] : timings) {
      if (n == number) return s;
    }
    return 0.0;
  };

  bool ok = true;
  ok &= report(1, "oracle equivalence", c1, seconds(1));
  ok &= report(2, "interval order axioms", c2, seconds(2));
  ok &= report(3, "point and relation Pareto sets agree", c3, seconds(3));
  ok &= report(4, "utility brackets", c4, seconds(4));
  ok &= report(5, "interval refinement nesting", c5, seconds(5));
  ok &= report(6, "relation refinement nesting", c6, seconds(6));
  ok &= report(7, "monotone refinement and clean rejection", c7, seconds(5) + seconds(6));
  ok &= report(8, "non-empty Pareto sets", c8, seconds(1) + seconds(3) + seconds(5) + seconds(6));
  ok &= report(9, "service crash-restart", c9, seconds(9));
  return ok ? 0 : 1;
}
