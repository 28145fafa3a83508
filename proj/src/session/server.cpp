#include "motmalin/session/server.hpp"

#include <array>
#include <deque>
#include <future>
#include <map>
#include <random>
#include <thread>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>
#include <json.hpp>

#include "motmalin/session/errors.hpp"
#include "motmalin/session/log.hpp"
#include "motmalin/session/session.hpp"

namespace motmalin::session {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;
using nlohmann::json;

namespace {

json error_message(std::string_view code, const std::string& message) {
  return json{{"kind", "error"}, {"body", {{"code", code}, {"message", message}}}};
}

std::string new_token() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  static constexpr char kHex[] = "0123456789abcdef";
  std::string token;
  for (int i = 0; i < 32; ++i) token += kHex[rng() % 16];
  return token;
}

}  // namespace

class Connection;

struct Hosted : MessageSink {
  explicit Hosted(asio::io_context& ioc) : idle(ioc) {}

  void deliver(int seat, const json& message) override;

  SteadyClock clock;
  std::unique_ptr<LogSink> log;
  std::unique_ptr<Session> session;
  asio::steady_timer idle;
  std::array<std::string, game::kSeatCount> tokens;
  std::array<std::weak_ptr<Connection>, game::kSeatCount> connections;
};

class Connection : public std::enable_shared_from_this<Connection> {
 public:
  Connection(tcp::socket socket, std::map<std::string, std::unique_ptr<Hosted>>& sessions)
      : ws_(std::move(socket)), sessions_(sessions) {}

  void run() {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
      if (!ec) self->read();
    });
  }

  void send(const json& message) {
    outbox_.push_back(message.dump());
    if (outbox_.size() == 1) write();
  }

  void close() {
    beast::error_code ec;
    beast::get_lowest_layer(ws_).socket().close(ec);
  }

 private:
  void read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->leave();
        return;
      }
      const std::string text = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      self->on_message(text);
      self->read();
    });
  }

  void write() {
    ws_.text(true);
    ws_.async_write(asio::buffer(outbox_.front()), [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->outbox_.clear();
        return;
      }
      self->outbox_.pop_front();
      if (!self->outbox_.empty()) self->write();
    });
  }

  void leave() {
    if (hosted_ && seat_ >= 0 && hosted_->connections[seat_].lock().get() == this) {
      hosted_->connections[seat_].reset();
    }
    hosted_ = nullptr;
  }

  void on_message(const std::string& text) {
    json message;
    try {
      message = json::parse(text);
    } catch (const json::exception& e) {
      send(error_message("Malformed", e.what()));
      return;
    }
    if (!message.is_object() || !message.contains("kind") || !message.at("kind").is_string()) {
      send(error_message("Malformed", "message needs a kind"));
      return;
    }
    const std::string kind = message.at("kind").get<std::string>();
    if (kind == "hello" || kind == "join") {
      hello(message.value("body", json::object()));
    } else if (!hosted_) {
      send(error_message("NotJoined", "send hello first"));
    } else if (kind == "command") {
      hosted_->session->handle_message(seat_, message);
    } else if (kind == "state_snapshot") {
      send(hosted_->session->snapshot(seat_));
    } else {
      send(error_message("Malformed", "unexpected kind '" + kind + "'"));
    }
  }

  void hello(const json& body) {
    if (hosted_) {
      send(error_message("Malformed", "already joined"));
      return;
    }
    if (!body.is_object()) {
      send(error_message("Malformed", "hello body must be an object"));
      return;
    }
    std::string id = body.value("session", std::string());
    if (id.empty() && sessions_.size() == 1) id = sessions_.begin()->first;
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) {
      send(error_message("UnknownSession", "no session '" + id + "'"));
      return;
    }
    Hosted& hosted = *it->second;

    int seat = -1;
    if (body.contains("token") && body.at("token").is_string()) {
      const std::string token = body.at("token").get<std::string>();
      for (int s = 0; s < game::kSeatCount; ++s) {
        if (!token.empty() && hosted.tokens[s] == token) seat = s;
      }
      if (seat < 0) {
        send(error_message("SeatUnavailable", "unknown seat token"));
        return;
      }
    } else if (body.contains("seat")) {
      if (!body.at("seat").is_number_integer()) {
        send(error_message("Malformed", "seat must be an integer"));
        return;
      }
      seat = body.at("seat").get<int>();
      if (seat < 0 || seat >= game::kSeatCount || hosted.session->is_agent_seat(seat) ||
          !hosted.tokens[seat].empty()) {
        send(error_message("SeatUnavailable", "seat " + std::to_string(seat) + " is not free"));
        return;
      }
    } else {
      for (int s = 0; s < game::kSeatCount && seat < 0; ++s) {
        if (!hosted.session->is_agent_seat(s) && hosted.tokens[s].empty()) seat = s;
      }
      if (seat < 0) {
        send(error_message("SeatUnavailable", "no free human seat"));
        return;
      }
    }

    if (auto previous = hosted.connections[seat].lock()) {
      previous->hosted_ = nullptr;
      previous->close();
    }
    if (hosted.tokens[seat].empty()) hosted.tokens[seat] = new_token();
    hosted_ = &hosted;
    seat_ = seat;
    hosted.connections[seat] = weak_from_this();
    send(json{{"kind", "join"},
              {"body", {{"session", hosted.session->id()}, {"seat", seat}, {"token", hosted.tokens[seat]}}}});
    send(hosted.session->snapshot(seat));
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::string> outbox_;
  std::map<std::string, std::unique_ptr<Hosted>>& sessions_;
  Hosted* hosted_ = nullptr;
  int seat_ = -1;
};

void Hosted::deliver(int seat, const json& message) {
  if (auto connection = connections[seat].lock()) connection->send(message);
}

class Server::Impl {
 public:
  explicit Impl(ServerOptions options) : options_(std::move(options)), acceptor_(ioc_), signals_(ioc_) {}

  std::string host(const SessionConfig& config) {
    if (!running_) return host_now(config);
    std::packaged_task<std::string()> task([&] { return host_now(config); });
    auto result = task.get_future();
    asio::post(ioc_, [&task] { task(); });
    return result.get();
  }

  unsigned short start() {
    const tcp::endpoint endpoint(asio::ip::make_address(options_.address), options_.port);
    acceptor_.open(endpoint.protocol());
    acceptor_.set_option(asio::socket_base::reuse_address(true));
    acceptor_.bind(endpoint);
    acceptor_.listen();
    accept();
    signals_.add(SIGINT);
    signals_.add(SIGTERM);
    signals_.async_wait([this](beast::error_code ec, int) {
      if (!ec) ioc_.stop();
    });
    for (auto& [id, hosted] : sessions_) arm(*hosted);
    running_ = true;
    thread_ = std::thread([this] { ioc_.run(); });
    return acceptor_.local_endpoint().port();
  }

  void stop() {
    ioc_.stop();
    wait();
  }

  void wait() {
    if (thread_.joinable()) thread_.join();
  }

 private:
  std::string host_now(const SessionConfig& config) {
    if (sessions_.contains(config.session_id)) {
      throw SessionError(SessionCode::BadConfig, "session '" + config.session_id + "' already hosted");
    }
    const SessionResources resources = load_resources(config);
    auto hosted = std::make_unique<Hosted>(ioc_);
    std::string log_path = config.log_path;
    if (log_path.empty() && !options_.log_dir.empty()) {
      log_path = (std::filesystem::path(options_.log_dir) / (config.session_id + ".jsonl")).string();
    }
    if (log_path.empty()) {
      hosted->log = std::make_unique<NullLog>();
    } else {
      const auto parent = std::filesystem::path(log_path).parent_path();
      if (!parent.empty()) std::filesystem::create_directories(parent);
      hosted->log = std::make_unique<FileLog>(log_path);
    }
    hosted->session = std::make_unique<Session>(make_setup(config, resources), hosted->clock, *hosted->log, *hosted);
    hosted->session->start();
    Hosted& ref = *hosted;
    sessions_.emplace(config.session_id, std::move(hosted));
    if (running_) arm(ref);
    return config.session_id;
  }

  void arm(Hosted& hosted) {
    hosted.idle.expires_after(options_.idle_tick);
    hosted.idle.async_wait([this, &hosted](beast::error_code ec) {
      if (ec) return;
      hosted.session->idle_tick();
      arm(hosted);
    });
  }

  void accept() {
    acceptor_.async_accept([this](beast::error_code ec, tcp::socket socket) {
      if (!ec) std::make_shared<Connection>(std::move(socket), sessions_)->run();
      if (acceptor_.is_open()) accept();
    });
  }

  ServerOptions options_;
  asio::io_context ioc_{1};
  tcp::acceptor acceptor_;
  asio::signal_set signals_;
  std::map<std::string, std::unique_ptr<Hosted>> sessions_;
  std::thread thread_;
  bool running_ = false;
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}
Server::~Server() { impl_->stop(); }

std::string Server::host(const SessionConfig& config) { return impl_->host(config); }
unsigned short Server::start() { return impl_->start(); }
void Server::stop() { impl_->stop(); }
void Server::wait() { impl_->wait(); }

}  // namespace motmalin::session
