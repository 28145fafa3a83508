#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>

#include "motmalin/session/config.hpp"

namespace motmalin::session {

struct ServerOptions {
  std::string address = "0.0.0.0";
  unsigned short port = 8080;  // 0 picks a free port
  std::chrono::milliseconds idle_tick{2000};
  std::string log_dir;  // used when a config has no log_path
};

// WebSocket host for one or more named sessions. All session work runs on a
// single I/O thread.
class Server {
 public:
  explicit Server(ServerOptions options);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Loads the files, opens the log and starts the game. Returns the session id.
  std::string host(const SessionConfig& config);

  // Binds and starts the I/O thread; returns the bound port.
  unsigned short start();
  void stop();
  // Blocks until stop() is called from elsewhere (or a signal handler).
  void wait();

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace motmalin::session
