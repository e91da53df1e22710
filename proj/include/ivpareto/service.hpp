/**
 * @file service.hpp
 * @brief HTTP/JSON front end for refinement sessions.
 *
 * Every session lives in `<state-dir>/<id>.json` and is rewritten atomically
 * before an event is acknowledged. Requests on one session are serialized;
 * distinct sessions proceed in parallel.
 *
 *   GET  /healthz
 *   POST /api/v1/sessions                      problem JSON (+ optional "baseline")
 *   GET  /api/v1/sessions/{id}
 *   GET  /api/v1/sessions/{id}/pareto
 *   GET  /api/v1/sessions/{id}/suggestions?limit=k
 *   GET  /api/v1/sessions/{id}/history
 *   POST /api/v1/sessions/{id}/events          event JSON
 *   POST /api/v1/sessions/{id}/undo
 */

#ifndef IVPARETO_SERVICE_HPP
#define IVPARETO_SERVICE_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "ivpareto/session.hpp"

namespace httplib {
class Server;
}

namespace ivpareto {

class SessionService {
 public:
  /// Creates the directory if needed and reloads every session file in it.
  /// Unreadable files are reported on stderr and skipped.
  explicit SessionService(std::filesystem::path state_dir);

  void mount(httplib::Server& server);

  [[nodiscard]] std::size_t session_count() const;

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  std::filesystem::path path_for(const std::string& id) const;

  std::filesystem::path dir_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

/// Binds host:port and serves until SIGINT/SIGTERM. Returns 0 on clean
/// shutdown and 2 when the port cannot be bound or the directory is unusable.
int run_service(const std::string& host, int port, const std::filesystem::path& state_dir);

}  // namespace ivpareto

#endif  // IVPARETO_SERVICE_HPP
