#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "oracles.hpp"
#include "qrtree/base64.hpp"
#include "qrtree/codec.hpp"
#include "qrtree/error.hpp"
#include "qrtree/ir.hpp"
#include "qrtree/server.hpp"
#include "qrtree/session.hpp"

using namespace qrtree;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string appendix_text() { return oracle::read_file(fixture("appendix_b.qrt")); }

std::string appendix_base64() {
    return base64_encode(encode_program(assemble(appendix_text()), {}));
}

int status_of(const std::function<void()>& call) {
    try {
        call();
    } catch (const ApiError& e) {
        return e.status();
    }
    return 200;
}

}  // namespace

TEST(Base64, KnownVectors) {
    auto enc = [](std::string_view s) {
        return base64_encode(std::vector<std::uint8_t>(s.begin(), s.end()));
    };
    EXPECT_EQ(enc(""), "");
    EXPECT_EQ(enc("f"), "Zg==");
    EXPECT_EQ(enc("fo"), "Zm8=");
    EXPECT_EQ(enc("foo"), "Zm9v");
    EXPECT_EQ(enc("foobar"), "Zm9vYmFy");
    const auto dec = base64_decode("Zm9v\nYmE=");
    EXPECT_EQ(std::string(dec.begin(), dec.end()), "fooba");
    EXPECT_THROW(base64_decode("Zm9v!"), Error);
    // Missing padding is tolerated; a lone trailing symbol is not.
    const auto unpadded = base64_decode("Zm9");
    EXPECT_EQ(std::string(unpadded.begin(), unpadded.end()), "fo");
    EXPECT_THROW(base64_decode("Zm9vY"), Error);
}

TEST(Base64, RandomRoundTrip) {
    std::mt19937 rng(1);
    for (int i = 0; i < 500; ++i) {
        std::vector<std::uint8_t> b(rng() % 70);
        for (auto& x : b) x = static_cast<std::uint8_t>(rng());
        ASSERT_EQ(base64_decode(base64_encode(b)), b);
    }
}

TEST(SessionStore, AppendixWalkthrough) {
    SessionStore store({});
    const json created = store.create(json{{"bytecode_base64", appendix_base64()}});
    const std::string id = created["id"];
    EXPECT_EQ(created["state"]["status"], "question");
    EXPECT_EQ(created["state"]["mode"], "direct");
    EXPECT_EQ(created["state"]["caption"], "How many heart beats can you count in 10 seconds?");

    json state = store.answer(id, {{"text", "4"}});
    EXPECT_EQ(state["mode"], "indirect");
    EXPECT_EQ(state["choices"], json::array({"Yes", "No", "Other"}));
    ASSERT_EQ(state["outputs"].size(), 4u);
    EXPECT_EQ(state["outputs"][2], json({{"reference", 1}}));
    EXPECT_EQ(state["outputs"][3], json({{"reference", 2}}));

    EXPECT_EQ(status_of([&] { store.answer(id, {{"choice_index", 3}}); }), 400);
    EXPECT_EQ(status_of([&] { store.answer(id, {{"choice_index", -1}}); }), 400);
    EXPECT_EQ(status_of([&] { store.answer(id, {{"nothing", 1}}); }), 400);

    state = store.answer(id, {{"choice_index", 0}});
    EXPECT_EQ(state["status"], "finished");
    EXPECT_EQ(state["outputs"].back()["text"], "Great! Wait for the ambulance and keep the patient awake.");
    EXPECT_EQ(store.state(id), state);
    EXPECT_EQ(status_of([&] { store.answer(id, {{"text", "x"}}); }), 409);
}

TEST(SessionStore, IrTextAndErrors) {
    SessionStore store({});
    const json created = store.create(json{{"ir_text", appendix_text()}});
    const std::string id = created["id"];
    EXPECT_EQ(store.answer(id, {{"text", "12"}})["outputs"], json::array({{{"text", "The heart beat is normal."}}}));
    EXPECT_EQ(status_of([&] { store.state("ffff"); }), 404);
    EXPECT_EQ(status_of([&] { store.create(json{{"ir_text", "goto (0)"}}); }), 400);
    EXPECT_EQ(status_of([&] { store.create(json{{"bytecode_base64", "!!"}}); }), 400);
    EXPECT_EQ(status_of([&] { store.create(json{{"bytecode_base64", ""}}); }), 400);
    EXPECT_EQ(status_of([&] { store.create(json::array()); }), 400);
    EXPECT_EQ(store.size(), 1u);
    const json other = store.create(json{{"ir_text", appendix_text()}});
    EXPECT_NE(other["id"], created["id"]);
}

TEST(SessionStore, PersistsSnapshots) {
    const fs::path dir = fs::temp_directory_path() / ("qrtree_persist_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    {
        SessionStore store({}, dir);
        const std::string id = store.create(json{{"ir_text", appendix_text()}})["id"];
        store.answer(id, {{"text", "35"}});
        const json snapshot = json::parse(oracle::read_file(dir / (id + ".json")));
        EXPECT_EQ(snapshot["state"]["status"], "finished");
        EXPECT_EQ(snapshot["bytecode_base64"], appendix_base64());
        EXPECT_EQ(snapshot["transcript"][0]["event"], "prompt");
    }
    fs::remove_all(dir);
}

TEST(SessionStore, ConcurrentSessions) {
    SessionStore store({});
    std::vector<std::thread> threads;
    std::atomic<int> finished{0};
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&] {
            for (int i = 0; i < 20; ++i) {
                const std::string id = store.create(json{{"ir_text", appendix_text()}})["id"];
                store.answer(id, {{"text", "4"}});
                if (store.answer(id, {{"text", "No"}})["status"] == "finished") ++finished;
            }
        });
    }
    for (auto& t : threads) t.join();
    EXPECT_EQ(finished.load(), 160);
    EXPECT_EQ(store.size(), 160u);
}

TEST(SessionServer, HttpRoundTrip) {
    SessionStore store({});
    SessionServer server(store);
    const int port = server.bind("127.0.0.1", 0);
    ASSERT_GT(port, 0);
    std::thread worker([&] { server.serve(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto res = client.Post("/sessions", json{{"bytecode_base64", appendix_base64()}}.dump(), "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 201);
    const json created = json::parse(res->body);
    const std::string id = created["id"];
    EXPECT_EQ(created["state"]["caption"], "How many heart beats can you count in 10 seconds?");

    res = client.Post("/sessions/" + id + "/answer", R"({"text": "4"})", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(json::parse(res->body)["choices"], json::array({"Yes", "No", "Other"}));

    res = client.Post("/sessions/" + id + "/answer", R"({"choice_index": 7})", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
    EXPECT_TRUE(json::parse(res->body).contains("error"));

    res = client.Post("/sessions/" + id + "/answer", "{not json", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);

    res = client.Post("/sessions/" + id + "/answer", R"({"choice_index": 1})", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(json::parse(res->body)["status"], "finished");

    res = client.Get("/sessions/" + id);
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(json::parse(res->body)["status"], "finished");

    res = client.Post("/sessions/" + id + "/answer", R"({"text": "x"})", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 409);

    res = client.Get("/sessions/0123abcd");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 404);

    server.stop();
    worker.join();
}

TEST(SessionServer, ServesStaticFiles) {
    const fs::path dir = fs::temp_directory_path() / ("qrtree_static_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    {
        std::ofstream(dir / "index.html") << "<html>player</html>";
    }
    SessionStore store({});
    SessionServer server(store, dir);
    const int port = server.bind("127.0.0.1", 0);
    std::thread worker([&] { server.serve(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);
    auto res = client.Get("/index.html");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(res->body, "<html>player</html>");
    server.stop();
    worker.join();
    fs::remove_all(dir);
}
