#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "httplib.h"
#include "outrank/basketball.hpp"
#include "outrank/json_io.hpp"
#include "outrank/pipeline.hpp"

namespace outrank {

struct Reply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Request handling over an immutable dataset. Each call only reads shared
/// state, so concurrent requests need no locking.
class RankService {
 public:
  explicit RankService(std::vector<basketball::BoxScoreLine> dataset)
      : dataset_(std::make_shared<const std::vector<basketball::BoxScoreLine>>(
            std::move(dataset))) {}

  Reply handle(const std::string& method, const std::string& path,
               const std::string& body = {}) const {
    if (method == "GET" && path == "/healthz") return {200, "text/plain", "ok"};
    if (method == "GET" && path == "/api/players") return json_reply(200, players_json(*dataset_));
    if (method == "GET" && path == "/api/criteria") return json_reply(200, criteria_json());
    if (method == "POST" && path == "/api/rank") return rank(body);
    return json_reply(404, error_json("not_found", method + " " + path));
  }

  Reply rank(const std::string& body) const {
    Json request;
    try {
      request = Json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      return json_reply(400, error_json("malformed_json", e.what()));
    }
    try {
      const auto req = rank_request_from_json(request);
      return json_reply(200, to_json(run_rank(*dataset_, req)));
    } catch (const RequestError& e) {
      return json_reply(422, error_json(e.code(), e.what()));
    } catch (const Error& e) {
      return json_reply(500, error_json(std::string(to_string(e.kind())), e.what()));
    }
  }

  void mount(httplib::Server& server) const {
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      const Reply r = handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    };
    server.Get("/healthz", forward);
    server.Get("/api/players", forward);
    server.Get("/api/criteria", forward);
    server.Post("/api/rank", forward);
  }

  const std::vector<basketball::BoxScoreLine>& dataset() const noexcept { return *dataset_; }

 private:
  static Reply json_reply(int status, const Json& j) {
    return {status, "application/json", j.dump()};
  }

  std::shared_ptr<const std::vector<basketball::BoxScoreLine>> dataset_;
};

struct BindAddress {
  std::string host = "127.0.0.1";
  int port = 8080;
};

/// Accepts "host:port", ":port" or "port".
inline BindAddress parse_bind_address(const std::string& s) {
  BindAddress b;
  const auto colon = s.rfind(':');
  std::string port = s;
  if (colon != std::string::npos) {
    if (colon > 0) b.host = s.substr(0, colon);
    port = s.substr(colon + 1);
  }
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(port, &used);
  } catch (const std::exception&) {
  }
  if (used != port.size() || value < 0 || value > 65535) {
    throw Error(ErrorKind::InvalidInput, "bad bind address '" + s + "'");
  }
  b.port = value;
  return b;
}

}  // namespace outrank
