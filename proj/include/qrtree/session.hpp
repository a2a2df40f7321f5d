#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "qrtree/dictionary.hpp"
#include "qrtree/program.hpp"
#include "qrtree/vm.hpp"

namespace qrtree {

// Failure that maps onto an HTTP status.
class ApiError : public std::runtime_error {
public:
    ApiError(int status, const std::string& message) : std::runtime_error(message), status_(status) {}
    int status() const noexcept { return status_; }

private:
    int status_;
};

// {status: question|finished, caption, mode: direct|indirect, choices: [label...],
//  outputs: [{text} | {reference}]}
nlohmann::json state_json(const Machine& machine);
nlohmann::json output_json(const Output& output);
nlohmann::json transcript_json(const Transcript& transcript);

// In-memory VM sessions. Each session is stepped under its own lock.
class SessionStore {
public:
    explicit SessionStore(DictionaryStore dictionaries,
                          std::optional<std::filesystem::path> persist_dir = std::nullopt);

    // Body: {bytecode_base64 | ir_text, language?}. Returns {id, state}.
    nlohmann::json create(const nlohmann::json& body);
    std::string create(Program program, const std::string& language = {});

    nlohmann::json state(const std::string& id) const;
    // Body: {text} or {choice_index}. 404 unknown id, 409 finished, 400 bad answer.
    nlohmann::json answer(const std::string& id, const nlohmann::json& body);

    std::size_t size() const;

private:
    struct Session {
        std::mutex mutex;
        Machine machine;
        std::chrono::system_clock::time_point created_at;
        std::vector<std::uint8_t> bytecode;

        Session(Program program, DictConfig dicts)
            : machine(std::move(program), std::move(dicts)),
              created_at(std::chrono::system_clock::now()) {}
    };

    std::shared_ptr<Session> find(const std::string& id) const;
    std::string new_id();
    void persist(const std::string& id, const Session& session) const;

    DictionaryStore dictionaries_;
    std::optional<std::filesystem::path> persist_dir_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t counter_ = 0;
};

}  // namespace qrtree
