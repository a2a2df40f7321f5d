#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qrtree/bitstream.hpp"
#include "qrtree/header.hpp"
#include "qrtree/qr_symbol.hpp"

namespace qrtree {

using Bytes = std::vector<std::uint8_t>;

// Largest payload of the biggest symbol: version 40, low error correction.
inline constexpr std::size_t kMaxCodeBytes = 2953;

struct QrOptions {
    EcLevel level = EcLevel::Low;
    int max_version = kMaxQrVersion;
    int module_pixels = 4;
    int border_modules = 4;
};

// Throws CapacityExceeded carrying the number of continuation chunks the bytes
// would need, and EmptyPayload for no bytes.
QrSymbol qr_encode(std::span<const std::uint8_t> bytes, const QrOptions& options = {});

void write_png(const QrSymbol& symbol, const std::filesystem::path& path,
               const QrOptions& options = {});

// Reads one QR code from an image file. Throws Io when unreadable and
// MalformedStream when no code can be decoded.
Bytes read_qr_image(const std::filesystem::path& path);

// Bit budget left for payload in chunk `index` of `count`.
std::size_t chunk_payload_budget(std::size_t capacity_bytes, std::uint64_t index, std::uint64_t count);

// Number of codes `payload_bits` needs at the given per-code capacity; 1 means no
// continuation. Throws InvalidArgument when the capacity cannot carry any payload.
std::size_t required_chunks(std::size_t payload_bits, std::size_t capacity_bytes);

// Frames for each code. A payload that fits in one code yields a single frame with
// the continuation flag cleared.
std::vector<Bytes> split_with_continuation(const BitString& payload, std::size_t capacity_bytes);

// Concatenates payloads by sequence number, in any arrival order. A single frame
// without continuation passes through. Throws IncompleteSet (listing missing
// numbers) or MalformedStream for duplicates and conflicting totals.
BitString reassemble(std::span<const Bytes> frames);

// Reassembled payload rewrapped as one self-contained frame.
Bytes reassemble_to_frame(std::span<const Bytes> frames);

}  // namespace qrtree
