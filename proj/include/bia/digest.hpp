#pragma once

#include <cstdint>
#include <string>

namespace bia {

/// SHA-256 hex digest of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace bia
