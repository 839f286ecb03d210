#pragma once

#include <stdexcept>
#include <string>

namespace albnn {

// Build-wide scalar type. 64-bit by default; 32-bit via -DALBNN_REAL32.
#ifdef ALBNN_REAL32
using real = float;
#else
using real = double;
#endif

// Invalid or inconsistent experiment configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable or malformed dataset files (CLI exit code 3).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace albnn
