// Little-endian encoding helpers for the binary formats.

#ifndef SYNPROBE_BINARY_H_
#define SYNPROBE_BINARY_H_

#include <bit>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>

namespace synprobe::binary {

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

inline void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

inline void put_f32(std::string& out, float f) {
  put_u32(out, std::bit_cast<std::uint32_t>(f));
}

// Sequential reader over a byte buffer; get_* return nullopt on truncation.
class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  bool done() const { return pos_ == bytes_.size(); }

  std::optional<std::uint32_t> get_u32() {
    if (remaining() < 4) return std::nullopt;
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    pos_ += 4;
    return v;
  }

  std::optional<std::uint64_t> get_u64() {
    auto lo = get_u32();
    if (!lo) return std::nullopt;
    auto hi = get_u32();
    if (!hi) return std::nullopt;
    return (static_cast<std::uint64_t>(*hi) << 32) | *lo;
  }

  std::optional<float> get_f32() {
    auto bits = get_u32();
    if (!bits) return std::nullopt;
    return std::bit_cast<float>(*bits);
  }

  std::optional<std::string_view> get_bytes(std::size_t n) {
    if (remaining() < n) return std::nullopt;
    auto out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace synprobe::binary

#endif  // SYNPROBE_BINARY_H_
