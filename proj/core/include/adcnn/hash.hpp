#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

namespace adcnn {

/// 64-bit FNV-1a. Used for content fingerprints in manifests, not security.
inline std::uint64_t fnv1a64(const void* data, std::size_t size,
                             std::uint64_t state = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    state ^= p[i];
    state *= 0x100000001b3ULL;
  }
  return state;
}

std::uint64_t hash_file(const std::filesystem::path& path);

std::string hash_hex(std::uint64_t h);

}  // namespace adcnn
