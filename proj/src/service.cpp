#include "ivpareto/service.hpp"

#include <signal.h>
#include <unistd.h>

#include <atomic>
#include <csignal>
#include <iostream>
#include <random>
#include <thread>

#include <httplib.h>

#include "ivpareto/error.hpp"
#include "ivpareto/json_io.hpp"

namespace ivpareto {

namespace {

constexpr const char* kJson = "application/json";

struct ApiStatus {
  int http;
  const char* code;
};

ApiStatus status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownId: return {422, "UNKNOWN_ID"};
    case ErrorCode::WrongVariant: return {422, "WRONG_VARIANT"};
    case ErrorCode::NotAContraction: return {422, "NOT_A_CONTRACTION"};
    case ErrorCode::ContradictoryInformation: return {409, "CONTRADICTORY"};
    case ErrorCode::StaleSequence: return {409, "STALE_SEQUENCE"};
    case ErrorCode::EmptyLog: return {409, "EMPTY_LOG"};
    case ErrorCode::IoError: return {500, "IO_ERROR"};
    default: return {400, "SCHEMA"};
  }
}

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void reply_error(httplib::Response& res, int status, const std::string& code, const std::string& message,
                 const std::string& field = {}) {
  Json body{{"code", code}, {"message", message}};
  if (!field.empty()) body["field"] = field;
  reply(res, status, body);
}

void reply_error(httplib::Response& res, const Error& e) {
  const auto s = status_for(e.code());
  reply_error(res, s.http, s.code, e.what(), e.field());
}

Json parse_body(const httplib::Request& req) {
  try {
    return Json::parse(req.body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("request body is not valid JSON: ") + e.what());
  }
}

std::string new_session_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id(16, '0');
  for (auto& c : id) c = kHex[rng() & 0xF];
  return id;
}

Json snapshot(const Session& s) {
  Json out = session_to_json(s);
  out["working"] = problem_to_json(s.working_problem());
  out["pareto"] = alt_set_to_json(s.base(), s.current().pareto_set);
  out["next_sequence"] = s.next_sequence();
  return out;
}

constexpr std::size_t kDefaultSuggestions = 5;

}  // namespace

SessionService::SessionService(std::filesystem::path state_dir) : dir_(std::move(state_dir)) {
  std::filesystem::create_directories(dir_);
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    try {
      Session s = load_session(entry.path());
      std::string id = s.id();
      sessions_.emplace(std::move(id), std::make_shared<Entry>(std::move(s)));
    } catch (const std::exception& e) {
      std::cerr << "skipping " << entry.path() << ": " << e.what() << '\n';
    }
  }
}

std::size_t SessionService::session_count() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionService::Entry> SessionService::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::filesystem::path SessionService::path_for(const std::string& id) const { return dir_ / (id + ".json"); }

void SessionService::mount(httplib::Server& server) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) { reply(res, 200, {{"status", "ok"}}); });

  server.Post("/api/v1/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    try {
      Json body = parse_body(req);
      if (!body.is_object()) throw Error(ErrorCode::SchemaError, "request body must be a JSON object");
      const Json& problem_json = body.contains("problem") ? body["problem"] : body;
      Problem problem = problem_from_json(problem_json);
      std::optional<AltSet> baseline;
      if (auto it = body.find("baseline"); it != body.end() && !it->is_null()) {
        baseline = alt_set_from_json(problem, *it, "baseline");
      }
      Session session = Session::create(new_session_id(), std::move(problem), std::move(baseline));
      save_session(session, path_for(session.id()));
      Json out{{"session_id", session.id()},
               {"pareto", alt_set_to_json(session.base(), session.current().pareto_set)},
               {"suggestions", suggestions_to_json(session.base(), session.suggestions(kDefaultSuggestions))}};
      std::string id = session.id();
      {
        std::unique_lock lock(map_mutex_);
        sessions_.emplace(std::move(id), std::make_shared<Entry>(std::move(session)));
      }
      reply(res, 201, out);
    } catch (const Error& e) {
      reply_error(res, e);
    }
  });

  // Runs `fn` with the session locked; 404 when it does not exist.
  auto with_session = [this](const httplib::Request& req, httplib::Response& res, auto fn) {
    auto entry = find(req.matches[1]);
    if (!entry) {
      reply_error(res, 404, "NOT_FOUND", "no session \"" + std::string(req.matches[1]) + "\"");
      return;
    }
    std::lock_guard lock(entry->mutex);
    try {
      fn(entry->session);
    } catch (const Error& e) {
      reply_error(res, e);
    }
  };

  const std::string base = R"(/api/v1/sessions/([A-Za-z0-9_-]+))";

  server.Get(base, [=](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) { reply(res, 200, snapshot(s)); });
  });

  server.Get(base + "/pareto", [=](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) { reply(res, 200, result_to_json(s.base(), s.current())); });
  });

  server.Get(base + "/suggestions", [=](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      std::size_t limit = kDefaultSuggestions;
      if (req.has_param("limit")) {
        try {
          const long long v = std::stoll(req.get_param_value("limit"));
          if (v < 0) throw std::invalid_argument("negative");
          limit = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
          throw Error(ErrorCode::SchemaError, "limit must be a non-negative integer", "limit");
        }
      }
      reply(res, 200, {{"suggestions", suggestions_to_json(s.base(), s.suggestions(limit))}});
    });
  });

  server.Get(base + "/history", [=](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) { reply(res, 200, history_to_json(s.base(), s.pareto_history())); });
  });

  server.Post(base + "/events", [=, this](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      RefinementEvent event = event_from_json(s.base(), parse_body(req));
      Session next = s;
      SessionDelta delta = next.apply(std::move(event));
      save_session(next, path_for(next.id()));
      s = std::move(next);
      reply(res, 200, delta_to_json(s.base(), delta));
    });
  });

  server.Post(base + "/undo", [=, this](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      Session next = s;
      next.undo();
      save_session(next, path_for(next.id()));
      s = std::move(next);
      reply(res, 200, {{"pareto", alt_set_to_json(s.base(), s.current().pareto_set)}});
    });
  });
}

int run_service(const std::string& host, int port, const std::filesystem::path& state_dir) {
  std::unique_ptr<SessionService> service;
  try {
    service = std::make_unique<SessionService>(state_dir);
  } catch (const std::exception& e) {
    std::cerr << "cannot use state directory " << state_dir << ": " << e.what() << '\n';
    return 2;
  }
  httplib::Server server;
  // The library default adds SO_REUSEPORT, which would let a second instance share the port.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  service->mount(server);
  if (!server.bind_to_port(host, port)) {
    std::cerr << "cannot bind " << host << ':' << port << '\n';
    return 2;
  }

  // Block the stop signals here so the waiter thread is their only receiver.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);
  std::atomic<bool> stopped{false};
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    stopped = true;
    server.stop();
  });

  std::cerr << "serving " << service->session_count() << " session(s) on " << host << ':' << port << '\n';
  const bool clean = server.listen_after_bind();
  if (!stopped) ::kill(::getpid(), SIGTERM);  // release the waiter
  waiter.join();
  return clean || stopped ? 0 : 2;
}

}  // namespace ivpareto
