#pragma once

#include <cstdint>
#include <cstring>
#include <type_traits>

namespace adcnn {

// Byte-level encode/decode helpers. Scalars are stored little-endian unless
// a reader detected the opposite order; swapped() flips any fixed-size value.

template <typename T>
T swapped(T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  unsigned char b[sizeof(T)];
  std::memcpy(b, &v, sizeof(T));
  for (std::size_t i = 0; i < sizeof(T) / 2; ++i) {
    unsigned char t = b[i];
    b[i] = b[sizeof(T) - 1 - i];
    b[sizeof(T) - 1 - i] = t;
  }
  std::memcpy(&v, b, sizeof(T));
  return v;
}

inline bool host_is_little_endian() {
  const std::uint16_t probe = 1;
  unsigned char b;
  std::memcpy(&b, &probe, 1);
  return b == 1;
}

template <typename T>
T decode(const unsigned char* p, bool swap) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return swap ? swapped(v) : v;
}

template <typename T>
T decode_le(const unsigned char* p) {
  return decode<T>(p, !host_is_little_endian());
}

template <typename T>
void encode_le(unsigned char* p, T v) {
  if (!host_is_little_endian()) v = swapped(v);
  std::memcpy(p, &v, sizeof(T));
}

}  // namespace adcnn
