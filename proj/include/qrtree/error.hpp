#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrtree {

enum class ErrorKind {
    EndOfStream,
    MalformedStream,
    Unsupported,
    UnknownDialect,
    InvalidArgument,
    Schema,
    Parse,
    Encode,
    EmptyPayload,
    CapacityExceeded,
    IncompleteSet,
    MalformedProgram,
    HostAbort,
    Io,
};

const char* to_string(ErrorKind kind);

// Base of every error raised by the toolchain.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised while reading a bit stream; carries the bit offset where decoding failed.
class StreamError : public Error {
public:
    StreamError(ErrorKind kind, const std::string& message, std::size_t bit_offset);

    std::size_t bit_offset() const noexcept { return bit_offset_; }

private:
    std::size_t bit_offset_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class CapacityError : public Error {
public:
    CapacityError(const std::string& message, std::size_t required_chunks);

    std::size_t required_chunks() const noexcept { return required_chunks_; }

private:
    std::size_t required_chunks_;
};

class IncompleteSetError : public Error {
public:
    IncompleteSetError(const std::string& message, std::vector<std::uint64_t> missing);

    const std::vector<std::uint64_t>& missing() const noexcept { return missing_; }

private:
    std::vector<std::uint64_t> missing_;
};

}  // namespace qrtree
