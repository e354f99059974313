#pragma once

#include <stdexcept>
#include <string>

namespace rbfcnn {

/// Library-wide error type. All recoverable failures surface as this.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

} // namespace rbfcnn
