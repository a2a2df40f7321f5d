#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "json.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("qrtree_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path path(const std::string& name) const { return dir_ / name; }

    Result run(const std::string& args) const {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = std::string("\"") + QRTREE_CLI + "\" " + args + " >\"" + out.string() +
                                "\" 2>\"" + err.string() + "\" </dev/null";
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, oracle::read_file(out), oracle::read_file(err)};
    }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name, std::ios::binary) << text;
    }

    std::string fixture_arg(const std::string& name) const { return "\"" + fixture(name).string() + "\""; }

    std::string assemble_appendix() const {
        const Result r = run("asm " + fixture_arg("appendix_b.qrt") + " -o \"" + path("b.bin").string() + "\"");
        EXPECT_EQ(r.code, 0) << r.err;
        return path("b.bin").string();
    }

    fs::path dir_;
};

std::string last_line(const std::string& text) {
    std::string t = text;
    while (!t.empty() && t.back() == '\n') t.pop_back();
    const auto nl = t.rfind('\n');
    return nl == std::string::npos ? t : t.substr(nl + 1);
}

}  // namespace

TEST_F(Cli, AsmReportsSizeAndCapacity) {
    const Result r = run("asm " + fixture_arg("appendix_b.qrt") + " -o \"" + path("b.bin").string() + "\"");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("5704 bits (713 bytes)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("24.1% of the maximum available capacity"), std::string::npos) << r.out;
    EXPECT_EQ(fs::file_size(path("b.bin")), 713u);
}

TEST_F(Cli, AsmRejectsBackwardJump) {
    write("back.qrt", "(1) print \"a\"\n(2) goto (1)\n");
    const Result r = run("asm \"" + path("back.qrt").string() + "\"");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("only forward jumps are allowed"), std::string::npos) << r.err;
    write("syntax.qrt", "(1) jump (2)\n");
    EXPECT_EQ(run("asm \"" + path("syntax.qrt").string() + "\"").code, 2);
}

TEST_F(Cli, IntTypeShrinksIntegerHeavyPrograms) {
    std::string text = "(0) inputs \"n\"\n";
    for (int i = 1; i <= 12; ++i) text += "(" + std::to_string(i) + ") ifc == " + std::to_string(i) + " (13)\n";
    text += "(13) print \"done\"\n";
    write("ints.qrt", text);
    ASSERT_EQ(run("asm \"" + path("ints.qrt").string() + "\" -o \"" + path("a.bin").string() + "\"").code, 0);
    ASSERT_EQ(run("asm \"" + path("ints.qrt").string() + "\" --int-type 16 -o \"" + path("b.bin").string() + "\"").code, 0);
    EXPECT_LT(fs::file_size(path("b.bin")), fs::file_size(path("a.bin")));
}

TEST_F(Cli, AsmDisasmRoundTrip) {
    const std::string bin = assemble_appendix();
    const Result d = run("disasm \"" + bin + "\" -o \"" + path("b.qrt").string() + "\"");
    ASSERT_EQ(d.code, 0) << d.err;
    ASSERT_EQ(run("asm \"" + path("b.qrt").string() + "\" -o \"" + path("c.bin").string() + "\"").code, 0);
    EXPECT_EQ(oracle::read_file(bin), oracle::read_file(path("c.bin")));
    const Result again = run("disasm \"" + path("c.bin").string() + "\"");
    EXPECT_EQ(again.out, oracle::read_file(path("b.qrt")));
}

TEST_F(Cli, DisasmErrors) {
    // 1 0 0000 0 0001 0001 0 + padding: dialect 1.
    write("dialect.bin", std::string("\x80\x22", 2));
    const Result r = run("disasm \"" + path("dialect.bin").string() + "\"");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("dialect"), std::string::npos);
    write("empty.qrt", "");
    ASSERT_EQ(run("asm \"" + path("empty.qrt").string() + "\" -o \"" + path("e.bin").string() + "\"").code, 0);
    const Result e = run("disasm \"" + path("e.bin").string() + "\"");
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(e.out, "");
}

TEST_F(Cli, QrEncodeDecode) {
    const std::string bin = assemble_appendix();
    ASSERT_EQ(run("qr encode \"" + bin + "\" -o \"" + path("b.png").string() + "\"").code, 0);
    const Result d = run("qr decode \"" + path("b.png").string() + "\" -o \"" + path("d.bin").string() + "\"");
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(oracle::read_file(bin), oracle::read_file(path("d.bin")));
}

TEST_F(Cli, QrSplitAndShuffledDecode) {
    const std::string bin = assemble_appendix();
    const Result over = run("qr encode \"" + bin + "\" --version 5 -o \"" + path("s.png").string() + "\"");
    EXPECT_EQ(over.code, 4);
    EXPECT_NE(over.err.find("7 codes"), std::string::npos) << over.err;

    const Result split = run("qr encode \"" + bin + "\" --version 5 --split -o \"" + path("s.png").string() + "\"");
    ASSERT_EQ(split.code, 0) << split.err;
    std::string images, chunks;
    for (int i = 6; i >= 0; --i) {
        ASSERT_TRUE(fs::exists(path("s-" + std::to_string(i) + ".png")));
        images += " \"" + path("s-" + std::to_string(i) + ".png").string() + "\"";
        chunks += " \"" + path("s-" + std::to_string(i) + ".eqrc").string() + "\"";
    }
    ASSERT_EQ(run("qr decode" + images + " -o \"" + path("j.bin").string() + "\"").code, 0);
    EXPECT_EQ(oracle::read_file(bin), oracle::read_file(path("j.bin")));

    const Result run_chunks = run("run" + chunks + " -a 12");
    EXPECT_EQ(run_chunks.code, 0) << run_chunks.err;
    EXPECT_EQ(last_line(run_chunks.out), "The heart beat is normal.");

    const Result missing = run("qr decode \"" + path("s-0.png").string() + "\" \"" + path("s-3.png").string() +
                               "\" -o \"" + path("m.bin").string() + "\"");
    EXPECT_EQ(missing.code, 3);
    EXPECT_NE(missing.err.find("1, 2, 4, 5, 6"), std::string::npos) << missing.err;
}

TEST_F(Cli, QrDecodeOfNonQrFails) {
    write("junk.png", "not an image at all");
    EXPECT_NE(run("qr decode \"" + path("junk.png").string() + "\" -o \"" + path("x.bin").string() + "\"").code, 0);
}

TEST_F(Cli, RunScriptedAnswers) {
    const std::string bin = assemble_appendix();
    write("yes.json", R"(["4", "Yes"])");
    const Result yes = run("run \"" + bin + "\" --answers \"" + path("yes.json").string() + "\" --transcript \"" +
                           path("t.json").string() + "\"");
    ASSERT_EQ(yes.code, 0) << yes.err;
    EXPECT_EQ(last_line(yes.out), "Great! Wait for the ambulance and keep the patient awake.");
    EXPECT_NE(yes.out.find("[reference 1]\n[reference 2]\n"), std::string::npos);
    const json transcript = json::parse(oracle::read_file(path("t.json")));
    EXPECT_EQ(transcript[0]["event"], "prompt");
    EXPECT_EQ(transcript[1], json({{"event", "answer"}, {"text", "4"}}));

    const Result normal = run("run " + fixture_arg("appendix_b.qrt") + " -a 12");
    EXPECT_EQ(normal.code, 0);
    EXPECT_EQ(normal.out, "The heart beat is normal.\n");

    write("empty.qrt", "");
    const Result empty = run("run \"" + path("empty.qrt").string() + "\" --transcript \"" + path("e.json").string() + "\"");
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.out, "");
    EXPECT_EQ(json::parse(oracle::read_file(path("e.json"))), json::array());

    const Result exhausted = run("run \"" + bin + "\" -a 4");
    EXPECT_EQ(exhausted.code, 5);
}

TEST_F(Cli, RunInteractive) {
    const std::string bin = assemble_appendix();
    write("stdin.txt", "4\n1\n");
    const fs::path out = path("io.txt");
    const std::string cmd = std::string("\"") + QRTREE_CLI + "\" run \"" + bin + "\" <\"" +
                            path("stdin.txt").string() + "\" >\"" + out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 0);
    const std::string text = oracle::read_file(out);
    EXPECT_NE(text.find("  1) Yes\n  2) No\n  3) Other\n"), std::string::npos) << text;
    EXPECT_NE(text.find("Great! Wait for the ambulance"), std::string::npos) << text;
}

TEST_F(Cli, DictionaryCommands) {
    const Result ok = run("dict validate " + fixture_arg("appendix_a.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("OK"), std::string::npos);
    const Result bad = run("dict validate " + fixture_arg("bad_language.json"));
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("language"), std::string::npos);
    const Result suggest = run("dict suggest-local " + fixture_arg("appendix_b.qrt"));
    ASSERT_EQ(suggest.code, 0) << suggest.err;
    const json report = json::parse(suggest.out);
    EXPECT_TRUE(report["words"].is_array());
    EXPECT_TRUE(report["saved_bits"].is_number());
}

TEST_F(Cli, LocalDictFlagShrinksOutput) {
    ASSERT_EQ(run("asm " + fixture_arg("appendix_b.qrt") + " -o \"" + path("a.bin").string() + "\"").code, 0);
    ASSERT_EQ(run("asm " + fixture_arg("appendix_b.qrt") + " --local-dict 4 -o \"" + path("l.bin").string() + "\"").code, 0);
    EXPECT_LT(fs::file_size(path("l.bin")), fs::file_size(path("a.bin")));
    const Result r = run("run \"" + path("l.bin").string() + "\" -a 7");
    EXPECT_EQ(last_line(r.out), "If they don't feel better after a couple of minutes it's better to call an ambulance.");
}

TEST_F(Cli, InspectHeaderAndCapacity) {
    const std::string bin = assemble_appendix();
    const Result r = run("inspect \"" + bin + "\"");
    ASSERT_EQ(r.code, 0) << r.err;
    const json h = json::parse(r.out);
    EXPECT_EQ(h["padding_bits"], 2);
    EXPECT_EQ(h["dialect"], "QRtree");
    EXPECT_EQ(h["version"], 1);
    EXPECT_TRUE(h["qrtree_header"].is_null());
    EXPECT_EQ(h["bits"], 5704);
    EXPECT_EQ(h["instructions"], 23);

    const Result c = run("inspect --capacity");
    ASSERT_EQ(c.code, 0);
    const json table = json::parse(c.out);
    ASSERT_EQ(table.size(), 40u);
    EXPECT_EQ(table[0]["L"], 17);
    EXPECT_EQ(table[39]["L"], 2953);
    EXPECT_EQ(table[39]["H"], 1273);
}

TEST_F(Cli, DictConfigDrivesDictionaryWords) {
    write("dict.qrt",
          ".dict_spec 0\n(1) input \"Ready?\"\n(2) if dict:global:0 (4)\n(3) goto (5)\n"
          "(4) print dict:specific:1\n(5) print \"end\"\n");
    const std::string cfg = fixture_arg("toolchain.json");
    ASSERT_EQ(run("--dict-config " + cfg + " asm \"" + path("dict.qrt").string() + "\" -o \"" +
                  path("d.bin").string() + "\"").code, 0);
    const Result en = run("--dict-config " + cfg + " run \"" + path("d.bin").string() + "\" -a Yes");
    EXPECT_EQ(en.code, 0) << en.err;
    const Result it = run("--dict-config " + cfg + " run \"" + path("d.bin").string() + "\" --language it -a Si");
    EXPECT_EQ(it.code, 0) << it.err;
    EXPECT_EQ(en.out, "Start the cardiac massage.\nend\n");
    EXPECT_EQ(it.out, "Inizia il massaggio cardiaco.\nend\n");
}
