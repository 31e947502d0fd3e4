#include "adcnn/tensor_io.hpp"

#include <fstream>

#include "adcnn/byteio.hpp"
#include "adcnn/error.hpp"

namespace adcnn {

namespace {
constexpr unsigned char kMagic[4] = {'T', 'N', 'S', '1'};
}

std::vector<unsigned char> encode_tensor(const Tensor& t) {
  std::vector<unsigned char> out(4 + 4 + 8 * t.rank() + 8 * t.size());
  unsigned char* p = out.data();
  std::memcpy(p, kMagic, 4);
  p += 4;
  encode_le<std::uint32_t>(p, static_cast<std::uint32_t>(t.rank()));
  p += 4;
  for (std::size_t d : t.shape()) {
    encode_le<std::uint64_t>(p, d);
    p += 8;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    encode_le<double>(p, t.data()[i]);
    p += 8;
  }
  return out;
}

Tensor decode_tensor(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw FormatError("tensor blob: bad magic");
  }
  const unsigned char* p = bytes.data() + 4;
  const auto rank = decode_le<std::uint32_t>(p);
  p += 4;
  if (rank > 8) throw FormatError("tensor blob: implausible rank");
  if (bytes.size() < 8 + 8ull * rank) throw FormatError("tensor blob: truncated header");
  std::vector<std::size_t> shape(rank);
  std::size_t count = 1;
  for (std::uint32_t a = 0; a < rank; ++a) {
    shape[a] = static_cast<std::size_t>(decode_le<std::uint64_t>(p));
    p += 8;
    count *= shape[a];
  }
  const std::size_t expected = 8 + 8ull * rank + 8ull * count;
  if (bytes.size() != expected) {
    throw FormatError("tensor blob: expected " + std::to_string(expected) +
                      " bytes, got " + std::to_string(bytes.size()));
  }
  std::vector<double> data(count);
  for (std::size_t i = 0; i < count; ++i) {
    data[i] = decode_le<double>(p);
    p += 8;
  }
  return Tensor::from_data(std::move(shape), std::move(data));
}

std::vector<unsigned char> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("short write to " + path.string());
}

void save_tensor(const std::filesystem::path& path, const Tensor& t) {
  write_file_bytes(path, encode_tensor(t));
}

Tensor load_tensor(const std::filesystem::path& path) {
  return decode_tensor(read_file_bytes(path));
}

}  // namespace adcnn
