#pragma once

#include <stdexcept>
#include <string>

namespace geodesy {

// Coarse error category, used by the CLI to pick an exit code and by
// callers that want to branch without string matching.
enum class ErrorCode {
    Param,          // bad parameter / unsupported input
    Io,             // file or stream problem
    Parse,          // malformed document
    InvalidGraph,   // graph violates its structural contract
    Disconnected,   // operation requires a connected graph
    InvalidDrawing, // drawing fails validity checks
    NotGeodetic,    // operation requires a geodetic host
    Ambiguous,      // a unique shortest path was requested but several exist
    Contract,       // an input violated a documented precondition
    Internal,       // "cannot happen" guard tripped
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace geodesy
