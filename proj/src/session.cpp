#include "qrtree/session.hpp"

#include <fstream>
#include <random>

#include "qrtree/base64.hpp"
#include "qrtree/codec.hpp"
#include "qrtree/error.hpp"
#include "qrtree/header.hpp"
#include "qrtree/ir.hpp"

namespace qrtree {

using nlohmann::json;

json output_json(const Output& output) {
    if (const auto* ref = std::get_if<Reference>(&output)) return {{"reference", ref->id}};
    return {{"text", std::get<std::string>(output)}};
}

json state_json(const Machine& machine) {
    json state;
    json outputs = json::array();
    for (const auto& o : machine.outputs()) outputs.push_back(output_json(o));
    state["outputs"] = std::move(outputs);
    state["choices"] = json::array();
    if (machine.halted() || !machine.prompt()) {
        state["status"] = "finished";
        state["caption"] = nullptr;
        state["mode"] = nullptr;
        return state;
    }
    const Prompt& prompt = *machine.prompt();
    state["status"] = "question";
    state["caption"] = render(prompt.caption);
    if (const auto* ref = std::get_if<Reference>(&prompt.caption)) {
        state["caption_reference"] = ref->id;
    }
    state["mode"] = prompt.mode == PromptMode::Indirect ? "indirect" : "direct";
    for (const auto& c : prompt.choices) state["choices"].push_back(c.label);
    return state;
}

json transcript_json(const Transcript& transcript) {
    json out = json::array();
    for (const auto& entry : transcript) {
        if (const auto* o = std::get_if<Output>(&entry)) {
            json e = output_json(*o);
            e["event"] = "output";
            out.push_back(std::move(e));
        } else if (const auto* p = std::get_if<Prompt>(&entry)) {
            json e = {{"event", "prompt"},
                      {"caption", render(p->caption)},
                      {"mode", p->mode == PromptMode::Indirect ? "indirect" : "direct"},
                      {"choices", json::array()}};
            for (const auto& c : p->choices) e["choices"].push_back(c.label);
            out.push_back(std::move(e));
        } else {
            const auto& a = std::get<Answer>(entry);
            json e = {{"event", "answer"}, {"text", a.text}};
            if (a.choice) e["choice_index"] = *a.choice;
            out.push_back(std::move(e));
        }
    }
    return out;
}

SessionStore::SessionStore(DictionaryStore dictionaries,
                           std::optional<std::filesystem::path> persist_dir)
    : dictionaries_(std::move(dictionaries)), persist_dir_(std::move(persist_dir)) {
    if (persist_dir_) std::filesystem::create_directories(*persist_dir_);
}

std::string SessionStore::new_id() {
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%016llx%04llx", static_cast<unsigned long long>(rng()),
                  static_cast<unsigned long long>(++counter_ & 0xFFFF));
    return buf;
}

std::string SessionStore::create(Program program, const std::string& language) {
    DictionaryStore store = dictionaries_;
    if (!language.empty()) store.active_language = language;
    DictConfig dicts;
    try {
        dicts = make_dict_config(store, program.headers.tree);
    } catch (const Error& e) {
        throw ApiError(400, e.what());
    }
    std::vector<std::uint8_t> bytecode;
    try {
        bytecode = encode_program(program, dictionaries_);
    } catch (const Error&) {
        // Persisted snapshots then carry no bytecode.
    }
    auto session = std::make_shared<Session>(std::move(program), std::move(dicts));
    session->bytecode = std::move(bytecode);
    {
        std::lock_guard lock(session->mutex);
        try {
            session->machine.advance();
        } catch (const Error& e) {
            throw ApiError(422, e.what());
        }
    }
    std::string id;
    {
        std::lock_guard lock(mutex_);
        do {
            id = new_id();
        } while (sessions_.contains(id));
        sessions_.emplace(id, session);
    }
    std::lock_guard lock(session->mutex);
    persist(id, *session);
    return id;
}

json SessionStore::create(const json& body) {
    if (!body.is_object()) throw ApiError(400, "request body must be a JSON object");
    Program program;
    try {
        if (auto it = body.find("bytecode_base64"); it != body.end() && it->is_string()) {
            const auto bytes = base64_decode(it->get<std::string>());
            program = decode_program(bytes, dictionaries_);
        } else if (auto ir = body.find("ir_text"); ir != body.end() && ir->is_string()) {
            program = assemble(ir->get<std::string>());
        } else {
            throw ApiError(400, "expected bytecode_base64 or ir_text");
        }
    } catch (const Error& e) {
        throw ApiError(400, e.what());
    }
    std::string language;
    if (auto it = body.find("language"); it != body.end() && it->is_string()) {
        language = it->get<std::string>();
    }
    const std::string id = create(std::move(program), language);
    return {{"id", id}, {"state", state(id)}};
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ApiError(404, "unknown session " + id);
    return it->second;
}

json SessionStore::state(const std::string& id) const {
    auto session = find(id);
    std::lock_guard lock(session->mutex);
    return state_json(session->machine);
}

json SessionStore::answer(const std::string& id, const json& body) {
    auto session = find(id);
    std::lock_guard lock(session->mutex);
    Machine& m = session->machine;
    if (m.halted() || !m.prompt()) throw ApiError(409, "session has finished");
    if (!body.is_object()) throw ApiError(400, "request body must be a JSON object");
    try {
        if (auto it = body.find("choice_index"); it != body.end()) {
            if (!it->is_number_integer() || it->get<long long>() < 0) {
                throw ApiError(400, "choice_index must be a non-negative integer");
            }
            m.answer_choice(it->get<std::size_t>());
        } else if (auto text = body.find("text"); text != body.end() && text->is_string()) {
            m.answer_text(text->get<std::string>());
        } else {
            throw ApiError(400, "expected text or choice_index");
        }
    } catch (const Error& e) {
        throw ApiError(400, e.what());
    }
    try {
        m.advance();
    } catch (const Error& e) {
        throw ApiError(422, e.what());
    }
    persist(id, *session);
    return state_json(m);
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

void SessionStore::persist(const std::string& id, const Session& session) const {
    if (!persist_dir_) return;
    const auto created = std::chrono::duration_cast<std::chrono::seconds>(
                             session.created_at.time_since_epoch())
                             .count();
    const json snapshot = {{"id", id},
                           {"created_at", created},
                           {"bytecode_base64", base64_encode(session.bytecode)},
                           {"state", state_json(session.machine)},
                           {"transcript", transcript_json(session.machine.transcript())}};
    const auto path = *persist_dir_ / (id + ".json");
    const auto tmp = *persist_dir_ / (id + ".json.tmp");
    {
        std::ofstream out(tmp);
        out << snapshot.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace qrtree
