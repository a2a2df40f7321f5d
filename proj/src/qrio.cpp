#include "qrtree/qrio.hpp"

#include <map>
#include <set>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "ReadBarcode.h"

#include "qrtree/error.hpp"

namespace qrtree {

QrSymbol qr_encode(std::span<const std::uint8_t> bytes, const QrOptions& options) {
    try {
        return QrSymbol::encode(bytes, options.level, kMinQrVersion, options.max_version);
    } catch (const CapacityError& e) {
        const std::size_t capacity = byte_capacity(options.max_version, options.level);
        std::size_t chunks = e.required_chunks();
        try {
            const Frame frame = decode_frame(bytes);
            chunks = required_chunks(frame.payload.size(), capacity);
        } catch (const Error&) {
            // Not a frame: fall back to the plain byte estimate.
        }
        throw CapacityError(std::string(e.what()) + "; split into " + std::to_string(chunks) +
                                " codes",
                            chunks);
    }
}

void write_png(const QrSymbol& symbol, const std::filesystem::path& path, const QrOptions& options) {
    const int scale = std::max(1, options.module_pixels);
    const int border = std::max(0, options.border_modules);
    const int side = (symbol.size() + 2 * border) * scale;
    cv::Mat image(side, side, CV_8UC1, cv::Scalar(255));
    for (int y = 0; y < symbol.size(); ++y) {
        for (int x = 0; x < symbol.size(); ++x) {
            if (!symbol.dark(x, y)) continue;
            image(cv::Rect((x + border) * scale, (y + border) * scale, scale, scale)).setTo(0);
        }
    }
    if (!cv::imwrite(path.string(), image)) {
        throw Error(ErrorKind::Io, "cannot write " + path.string());
    }
}

Bytes read_qr_image(const std::filesystem::path& path) {
    const cv::Mat image = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
    if (image.empty()) throw Error(ErrorKind::Io, "cannot read image " + path.string());
    const ZXing::ImageView view(image.data, image.cols, image.rows, ZXing::ImageFormat::Lum,
                                static_cast<int>(image.step));
    ZXing::ReaderOptions options;
    options.setFormats(ZXing::BarcodeFormat::QRCode);
    options.setTryHarder(true);
    const ZXing::Barcode code = ZXing::ReadBarcode(view, options);
    if (!code.isValid()) {
        throw Error(ErrorKind::MalformedStream, "no decodable QR code in " + path.string());
    }
    return code.bytes();
}

std::size_t chunk_payload_budget(std::size_t capacity_bytes, std::uint64_t index, std::uint64_t count) {
    const std::size_t overhead = frame_overhead_bits(Continuation{index, count});
    const std::size_t bits = capacity_bytes * 8;
    return bits > overhead ? bits - overhead : 0;
}

std::size_t required_chunks(std::size_t payload_bits, std::size_t capacity_bytes) {
    if (payload_bits + frame_overhead_bits(std::nullopt) <= capacity_bytes * 8) return 1;
    for (std::uint64_t count = 2;; ++count) {
        std::size_t total = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::size_t budget = chunk_payload_budget(capacity_bytes, i, count);
            if (budget == 0) {
                throw Error(ErrorKind::InvalidArgument,
                            std::to_string(capacity_bytes) +
                                "-byte codes cannot hold a continuation chunk");
            }
            total += budget;
        }
        if (total >= payload_bits) return count;
    }
}

std::vector<Bytes> split_with_continuation(const BitString& payload, std::size_t capacity_bytes) {
    const std::size_t count = required_chunks(payload.size(), capacity_bytes);
    if (count == 1) return {encode_frame(std::nullopt, payload)};
    std::vector<Bytes> frames;
    std::size_t offset = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::size_t take =
            std::min(chunk_payload_budget(capacity_bytes, i, count), payload.size() - offset);
        frames.push_back(encode_frame(Continuation{i, count}, payload.slice(offset, take)));
        offset += take;
    }
    return frames;
}

BitString reassemble(std::span<const Bytes> frames) {
    if (frames.empty()) throw Error(ErrorKind::EmptyPayload, "no codes to reassemble");
    std::map<std::uint64_t, BitString> parts;
    std::optional<std::uint64_t> total;
    for (const Bytes& bytes : frames) {
        Frame frame = decode_frame(bytes);
        if (!frame.continuation) {
            if (frames.size() != 1) {
                throw Error(ErrorKind::MalformedStream,
                            "a code without continuation cannot be combined with others");
            }
            return std::move(frame.payload);
        }
        const Continuation c = *frame.continuation;
        if (total && *total != c.sequence_length) {
            throw Error(ErrorKind::MalformedStream,
                        "codes disagree on the sequence length (" + std::to_string(*total) +
                            " vs " + std::to_string(c.sequence_length) + ")");
        }
        total = c.sequence_length;
        if (!parts.emplace(c.sequence_number, std::move(frame.payload)).second) {
            throw Error(ErrorKind::MalformedStream,
                        "sequence number " + std::to_string(c.sequence_number) + " repeated");
        }
    }
    std::vector<std::uint64_t> missing;
    for (std::uint64_t i = 0; i < *total; ++i) {
        if (!parts.contains(i)) missing.push_back(i);
    }
    if (!missing.empty()) {
        std::string list;
        for (auto m : missing) list += (list.empty() ? "" : ", ") + std::to_string(m);
        throw IncompleteSetError("missing codes " + list + " of " + std::to_string(*total),
                                 std::move(missing));
    }
    BitWriter out;
    for (const auto& [number, part] : parts) out.append(part);
    return std::move(out).take();
}

Bytes reassemble_to_frame(std::span<const Bytes> frames) {
    return encode_frame(std::nullopt, reassemble(frames));
}

}  // namespace qrtree
