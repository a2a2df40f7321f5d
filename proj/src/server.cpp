#include "qrtree/server.hpp"

#include "httplib.h"

#include "qrtree/error.hpp"

namespace qrtree {
namespace {

void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
    try {
        handler();
    } catch (const ApiError& e) {
        send_json(res, e.status(), {{"error", e.what()}});
    } catch (const nlohmann::json::exception& e) {
        send_json(res, 400, {{"error", e.what()}});
    } catch (const std::exception& e) {
        send_json(res, 500, {{"error", e.what()}});
    }
}

nlohmann::json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return nlohmann::json::object();
    try {
        return nlohmann::json::parse(req.body);
    } catch (const nlohmann::json::parse_error& e) {
        throw ApiError(400, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

SessionServer::SessionServer(SessionStore& store, std::optional<std::filesystem::path> static_dir)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
    auto& s = *server_;
    s.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send_json(res, 201, store_.create(parse_body(req))); });
    });
    s.Get(R"(/sessions/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send_json(res, 200, store_.state(req.matches[1])); });
    });
    s.Post(R"(/sessions/([0-9a-f]+)/answer)",
           [this](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] { send_json(res, 200, store_.answer(req.matches[1], parse_body(req))); });
           });
    if (static_dir) {
        if (!s.set_mount_point("/", static_dir->string())) {
            throw Error(ErrorKind::Io, "static directory " + static_dir->string() + " not found");
        }
    }
}

SessionServer::~SessionServer() { stop(); }

int SessionServer::bind(const std::string& host, int port) {
    const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (bound < 0) {
        throw Error(ErrorKind::Io, "cannot bind " + host + ":" + std::to_string(port));
    }
    return bound;
}

void SessionServer::serve() { server_->listen_after_bind(); }

void SessionServer::stop() {
    if (server_) server_->stop();
}

void SessionServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace qrtree
