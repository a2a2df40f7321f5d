#include "qrtree/error.hpp"

#include <utility>

namespace qrtree {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EndOfStream: return "EndOfStream";
        case ErrorKind::MalformedStream: return "MalformedStream";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::UnknownDialect: return "UnknownDialect";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Schema: return "Schema";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Encode: return "Encode";
        case ErrorKind::EmptyPayload: return "EmptyPayload";
        case ErrorKind::CapacityExceeded: return "CapacityExceeded";
        case ErrorKind::IncompleteSet: return "IncompleteSet";
        case ErrorKind::MalformedProgram: return "MalformedProgram";
        case ErrorKind::HostAbort: return "HostAbort";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

StreamError::StreamError(ErrorKind kind, const std::string& message, std::size_t bit_offset)
    : Error(kind, message + " (at bit " + std::to_string(bit_offset) + ")"),
      bit_offset_(bit_offset) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorKind::Parse,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

CapacityError::CapacityError(const std::string& message, std::size_t required_chunks)
    : Error(ErrorKind::CapacityExceeded, message), required_chunks_(required_chunks) {}

IncompleteSetError::IncompleteSetError(const std::string& message,
                                       std::vector<std::uint64_t> missing)
    : Error(ErrorKind::IncompleteSet, message), missing_(std::move(missing)) {}

}  // namespace qrtree
