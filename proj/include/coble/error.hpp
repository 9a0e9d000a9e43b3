#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace coble {

// Every failure carries a stable machine-readable code (reused verbatim as
// the CLI reason code) plus a human-readable detail string.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    error(std::string code, const std::string& detail, std::string payload_json)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          payload_(std::move(payload_json)) {}

    const std::string& code() const noexcept { return code_; }
    // Optional machine-readable certificate, serialized as a JSON object.
    const std::string& payload() const noexcept { return payload_; }

private:
    std::string code_;
    std::string payload_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
    throw error(code, detail);
}

[[noreturn]] inline void fail_with_payload(const std::string& code,
                                           const std::string& detail,
                                           const std::string& payload_json) {
    throw error(code, detail, payload_json);
}

inline void require(bool cond, const std::string& code, const std::string& detail) {
    if (!cond) fail(code, detail);
}

} // namespace coble
