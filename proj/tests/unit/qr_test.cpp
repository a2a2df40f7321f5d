#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <random>

#include "oracles.hpp"
#include "qrtree/codec.hpp"
#include "qrtree/error.hpp"
#include "qrtree/ir.hpp"
#include "qrtree/qrio.hpp"

using namespace qrtree;
namespace fs = std::filesystem;

namespace {

// Byte-mode capacities per version for L, M, Q, H.
constexpr int kCapacity[40][4] = {
    {17, 14, 11, 7},         {32, 26, 20, 14},        {53, 42, 32, 24},        {78, 62, 46, 34},
    {106, 84, 60, 44},       {134, 106, 74, 58},      {154, 122, 86, 64},      {192, 152, 108, 84},
    {230, 180, 130, 98},     {271, 213, 151, 119},    {321, 251, 177, 137},    {367, 287, 203, 155},
    {425, 331, 241, 177},    {458, 362, 258, 194},    {520, 412, 292, 220},    {586, 450, 322, 250},
    {644, 504, 364, 280},    {718, 560, 394, 310},    {792, 624, 442, 338},    {858, 666, 482, 382},
    {929, 711, 509, 403},    {1003, 779, 565, 439},   {1091, 857, 611, 461},   {1171, 911, 661, 511},
    {1273, 997, 715, 535},   {1367, 1059, 751, 593},  {1465, 1125, 805, 625},  {1528, 1190, 868, 658},
    {1628, 1264, 908, 698},  {1732, 1370, 982, 742},  {1840, 1452, 1030, 790}, {1952, 1538, 1112, 842},
    {2068, 1628, 1168, 898}, {2188, 1722, 1228, 958}, {2303, 1809, 1283, 983}, {2431, 1911, 1351, 1051},
    {2563, 1989, 1423, 1093}, {2699, 2099, 1499, 1139}, {2809, 2213, 1579, 1219}, {2953, 2331, 1663, 1273},
};

constexpr EcLevel kLevels[] = {EcLevel::Low, EcLevel::Medium, EcLevel::Quartile, EcLevel::High};

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("qrtree_qr_" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

Bytes random_bytes(std::mt19937& rng, std::size_t n) {
    Bytes b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    return b;
}

Bytes png_round_trip(const Bytes& data, const QrOptions& options, const TempDir& dir) {
    const QrSymbol symbol = qr_encode(data, options);
    const fs::path file = dir / "code.png";
    write_png(symbol, file, options);
    return read_qr_image(file);
}

// GF(256) arithmetic with the 0x11D polynomial, written out independently.
std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    unsigned r = 0, x = a;
    for (int i = 0; i < 8; ++i) {
        if (b & (1 << i)) r ^= x;
        x <<= 1;
        if (x & 0x100) x ^= 0x11D;
    }
    return static_cast<std::uint8_t>(r);
}

std::uint8_t poly_eval(const std::vector<std::uint8_t>& coeffs, std::uint8_t x) {
    std::uint8_t acc = 0;
    for (std::uint8_t c : coeffs) acc = static_cast<std::uint8_t>(gf_mul(acc, x) ^ c);
    return acc;
}

}  // namespace

TEST(QrCapacity, MatchesStandardTable) {
    for (int v = 1; v <= 40; ++v) {
        for (int l = 0; l < 4; ++l) {
            EXPECT_EQ(byte_capacity(v, kLevels[l]), static_cast<std::size_t>(kCapacity[v - 1][l]))
                << "version " << v << " level " << to_string(kLevels[l]);
        }
    }
    EXPECT_EQ(byte_capacity(40, EcLevel::Low), kMaxCodeBytes);
}

TEST(ReedSolomon, KnownCodeword) {
    // Version 1-M data codewords of "HELLO WORLD" in alphanumeric mode.
    const std::vector<std::uint8_t> data = {32, 91, 11, 120, 209, 114, 220, 77, 67, 64, 236, 17, 236, 17, 236, 17};
    const auto ecc = reed_solomon_remainder(data, reed_solomon_divisor(10));
    EXPECT_EQ(ecc, (std::vector<std::uint8_t>{196, 35, 39, 119, 235, 215, 231, 226, 93, 23}));
}

TEST(ReedSolomon, CodewordsVanishAtGeneratorRoots) {
    std::mt19937 rng(2);
    for (int degree : {7, 10, 18, 30}) {
        for (int t = 0; t < 20; ++t) {
            std::vector<std::uint8_t> word(1 + rng() % 100);
            for (auto& b : word) b = static_cast<std::uint8_t>(rng());
            const auto ecc = reed_solomon_remainder(word, reed_solomon_divisor(degree));
            ASSERT_EQ(ecc.size(), static_cast<std::size_t>(degree));
            word.insert(word.end(), ecc.begin(), ecc.end());
            std::uint8_t root = 1;
            for (int i = 0; i < degree; ++i) {
                ASSERT_EQ(poly_eval(word, root), 0) << degree << " root " << i;
                root = gf_mul(root, 2);
            }
        }
    }
}

TEST(QrEncode, PicksSmallestVersion) {
    std::mt19937 rng(4);
    for (int l = 0; l < 4; ++l) {
        for (int v : {1, 9, 10, 26, 27, 40}) {
            const Bytes data = random_bytes(rng, static_cast<std::size_t>(kCapacity[v - 1][l]));
            const QrSymbol s = QrSymbol::encode(data, kLevels[l]);
            EXPECT_EQ(s.version(), v);
            EXPECT_EQ(s.size(), 17 + 4 * v);
            if (v < 40) {
                Bytes more = data;
                more.push_back(0);
                EXPECT_EQ(QrSymbol::encode(more, kLevels[l]).version(), v + 1);
            }
        }
    }
}

TEST(QrEncode, Errors) {
    try {
        qr_encode(Bytes(2954, 0x55));
        FAIL();
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapacityExceeded);
        EXPECT_GE(e.required_chunks(), 2u);
    }
    try {
        qr_encode(Bytes{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyPayload);
    }
    QrOptions small;
    small.max_version = 3;
    EXPECT_THROW(qr_encode(Bytes(54, 1), small), CapacityError);
    EXPECT_NO_THROW(qr_encode(Bytes(53, 1), small));
}

TEST(QrEncode, CapacityErrorReportsChunkCount) {
    const Program p = assemble(oracle::read_file(fixture("appendix_b.qrt")));
    const Bytes bytes = encode_program(p, {});
    QrOptions options;
    options.max_version = 5;
    try {
        qr_encode(bytes, options);
        FAIL();
    } catch (const CapacityError& e) {
        const auto frames = split_with_continuation(decode_frame(bytes).payload, byte_capacity(5, EcLevel::Low));
        EXPECT_EQ(e.required_chunks(), frames.size());
    }
}

TEST(QrDecode, HundredBytes) {
    TempDir dir;
    std::mt19937 rng(8);
    const Bytes data = random_bytes(rng, 100);
    EXPECT_EQ(png_round_trip(data, {}, dir), data);
}

TEST(QrDecode, RandomPayloadsAcrossVersionsAndLevels) {
    TempDir dir;
    std::mt19937 rng(10);
    for (int v : {1, 2, 3, 6, 7, 10, 14, 21, 27, 33, 40}) {
        for (int l = 0; l < 4; ++l) {
            const auto cap = static_cast<std::size_t>(kCapacity[v - 1][l]);
            const Bytes data = random_bytes(rng, 1 + rng() % cap);
            QrOptions options;
            options.level = kLevels[l];
            options.module_pixels = v > 30 ? 3 : 4;
            ASSERT_EQ(png_round_trip(data, options, dir), data) << "version " << v << " level " << l;
        }
    }
}

TEST(QrDecode, FullCapacityAndEveryMask) {
    TempDir dir;
    std::mt19937 rng(12);
    const Bytes full = random_bytes(rng, 2953);
    QrOptions options;
    options.module_pixels = 3;
    EXPECT_EQ(png_round_trip(full, options, dir), full);
    const Bytes small = random_bytes(rng, 40);
    for (int mask = 0; mask < 8; ++mask) {
        const QrSymbol s = QrSymbol::encode(small, EcLevel::Medium, 1, 40, mask);
        EXPECT_EQ(s.mask(), mask);
        write_png(s, dir / "mask.png", {});
        EXPECT_EQ(read_qr_image(dir / "mask.png"), small) << mask;
    }
}

TEST(QrDecode, NonQrImageFails) {
    TempDir dir;
    cv::Mat noise(200, 200, CV_8UC1);
    cv::randu(noise, 0, 255);
    cv::imwrite((dir / "noise.png").string(), noise);
    EXPECT_THROW(read_qr_image(dir / "noise.png"), Error);
    EXPECT_THROW(read_qr_image(dir / "missing.png"), Error);
}

TEST(Continuation, SingleFrameHasFlagCleared) {
    const BitString payload = BitString::from_string("10101");
    const auto frames = split_with_continuation(payload, 100);
    ASSERT_EQ(frames.size(), 1u);
    const Frame f = decode_frame(frames[0]);
    EXPECT_FALSE(f.continuation);
    EXPECT_EQ(f.payload, payload);
    EXPECT_EQ(reassemble(frames), payload);
}

TEST(Continuation, SixThousandBytesNeedThreeCodes) {
    std::mt19937 rng(14);
    const Bytes raw = random_bytes(rng, 6000);
    const BitString payload = BitString::from_bytes(raw);
    EXPECT_EQ(required_chunks(payload.size(), 2953), 3u);
    const auto frames = split_with_continuation(payload, 2953);
    ASSERT_EQ(frames.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_LE(frames[i].size(), 2953u);
        const Frame f = decode_frame(frames[i]);
        ASSERT_TRUE(f.continuation);
        EXPECT_EQ(f.continuation->sequence_number, i);
        EXPECT_EQ(f.continuation->sequence_length, 3u);
    }
}

TEST(Continuation, ChunkCountIsMinimal) {
    for (std::size_t cap : {20u, 106u, 2953u}) {
        for (std::size_t bits = 1; bits < cap * 8 * 6; bits += 37) {
            const std::size_t n = required_chunks(bits, cap);
            std::size_t total = 0;
            for (std::size_t i = 0; i < n; ++i) total += chunk_payload_budget(cap, i, n);
            if (n > 1) {
                ASSERT_GE(total, bits);
                std::size_t fewer = 0;
                for (std::size_t i = 0; i + 1 < n; ++i) fewer += chunk_payload_budget(cap, i, n - 1);
                if (n - 1 > 1) ASSERT_LT(fewer, bits);
            }
        }
    }
}

TEST(Continuation, ShuffledReassemblyAndMissingChunks) {
    std::mt19937 rng(16);
    const std::size_t cap = byte_capacity(10, EcLevel::Low);
    for (double factor : {1.0, 2.5, 5.0}) {
        const Bytes raw = random_bytes(rng, static_cast<std::size_t>(cap * factor));
        const BitString payload = BitString::from_bytes(raw);
        auto frames = split_with_continuation(payload, cap);
        for (const auto& f : frames) ASSERT_LE(f.size(), cap);
        for (int t = 0; t < 10; ++t) {
            std::shuffle(frames.begin(), frames.end(), rng);
            ASSERT_EQ(reassemble(frames), payload);
        }
        if (frames.size() < 3) continue;
        // Drop two chunks and check the reported gaps.
        std::vector<Bytes> partial;
        std::vector<std::uint64_t> dropped;
        for (const auto& f : frames) {
            const auto seq = decode_frame(f).continuation->sequence_number;
            if (seq == 0 || seq == frames.size() - 2) {
                dropped.push_back(seq);
            } else {
                partial.push_back(f);
            }
        }
        std::sort(dropped.begin(), dropped.end());
        try {
            reassemble(partial);
            FAIL();
        } catch (const IncompleteSetError& e) {
            EXPECT_EQ(e.missing(), dropped);
        }
    }
}

TEST(Continuation, InconsistentSets) {
    std::mt19937 rng(18);
    const BitString payload = BitString::from_bytes(random_bytes(rng, 500));
    auto frames = split_with_continuation(payload, 106);
    ASSERT_GT(frames.size(), 2u);
    auto duplicated = frames;
    duplicated.push_back(frames[1]);
    try {
        reassemble(duplicated);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedStream);
    }
    auto mixed = frames;
    mixed[0] = encode_frame(Continuation{0, frames.size() + 1}, BitString::from_string("1"));
    try {
        reassemble(mixed);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedStream);
    }
    EXPECT_THROW(reassemble(std::vector<Bytes>{}), Error);
    EXPECT_THROW(split_with_continuation(payload, 1), Error);
}

TEST(Continuation, ProgramSurvivesSplitAndImages) {
    TempDir dir;
    const Program p = assemble(oracle::read_file(fixture("appendix_b.qrt")));
    const Bytes bytes = encode_program(p, {});
    const auto frames = split_with_continuation(decode_frame(bytes).payload, byte_capacity(6, EcLevel::Medium));
    ASSERT_GT(frames.size(), 1u);
    std::vector<Bytes> read_back;
    QrOptions options;
    options.level = EcLevel::Medium;
    options.max_version = 6;
    for (std::size_t i = frames.size(); i-- > 0;) {
        write_png(qr_encode(frames[i], options), dir / "c.png", options);
        read_back.push_back(read_qr_image(dir / "c.png"));
    }
    const Bytes joined = reassemble_to_frame(read_back);
    EXPECT_EQ(joined, bytes);
    EXPECT_EQ(decode_program(joined, {}).instructions, p.instructions);
}
