#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "qrtree/session.hpp"

namespace httplib {
class Server;
}

namespace qrtree {

// JSON-over-HTTP front of a SessionStore, plus optional static files at "/".
//   POST /sessions               -> 201 {id, state}
//   GET  /sessions/{id}          -> state
//   POST /sessions/{id}/answer   -> state
class SessionServer {
public:
    SessionServer(SessionStore& store, std::optional<std::filesystem::path> static_dir = {});
    ~SessionServer();

    // Returns the bound port; 0 picks a free one. Throws Io on failure.
    int bind(const std::string& host, int port);
    // Blocks until stop().
    void serve();
    void stop();
    void wait_until_ready() const;

private:
    SessionStore& store_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace qrtree
