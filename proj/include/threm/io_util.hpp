#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace threm {

/// Shortest round-trippable decimal form of x (std::to_chars); integral
/// timestamps print without a decimal point.
std::string fmt_double(double x);

/// FNV-1a over a byte string, used for config hashes in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);

std::string hex64(std::uint64_t v);

/// Writes content to path atomically (temp file in the same directory +
/// rename).
void atomic_write_file(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

}  // namespace threm
