#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "adcnn/tensor.hpp"

namespace adcnn {

// Tensor dump format, used for slice records, checkpoints and golden files:
//   bytes 0..3   magic "TNS1"
//   bytes 4..7   rank, uint32 little-endian
//   then rank x uint64 dims, little-endian
//   then product(dims) x float64 payload, little-endian

std::vector<unsigned char> encode_tensor(const Tensor& t);
Tensor decode_tensor(const std::vector<unsigned char>& bytes);

void save_tensor(const std::filesystem::path& path, const Tensor& t);
Tensor load_tensor(const std::filesystem::path& path);

// Whole-file helpers shared by the format readers/writers.
std::vector<unsigned char> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      const std::vector<unsigned char>& bytes);

}  // namespace adcnn
