// synprobe: per-word embedding tables and their binary format.
//
// Layout (all integers little-endian):
//   "EMB1" | u32 dim | { u32 n | 16-byte id hash | n*dim f32 } ... | u32 0
// A sentence record with n = 0 terminates the table; end of input right after
// the header (or after a record) is accepted as well.

#ifndef SYNPROBE_EMBEDDINGS_H_
#define SYNPROBE_EMBEDDINGS_H_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace synprobe {

using SentenceHash = std::array<std::uint8_t, 16>;

// BLAKE2b with a 16-byte digest over the UTF-8 sentence id.
SentenceHash sentence_id_hash(std::string_view id);
inline bool is_unchecked(const SentenceHash& h) {
  for (auto b : h)
    if (b != 0) return false;
  return true;
}

struct EmbeddedSentence {
  SentenceHash id_hash{};
  int words = 0;
  std::vector<float> values;  // words x dim, row-major

  std::span<const float> row(int word, int dim) const {
    return std::span<const float>(values).subspan(
        static_cast<std::size_t>(word) * dim, dim);
  }
  bool operator==(const EmbeddedSentence&) const = default;
};

struct EmbeddingTable {
  int dim = 0;
  std::vector<EmbeddedSentence> sentences;

  bool operator==(const EmbeddingTable&) const = default;
};

class EmbeddingFormatError : public std::runtime_error {
 public:
  EmbeddingFormatError(const std::string& what, std::size_t offset)
      : std::runtime_error("byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

EmbeddingTable read_embeddings(std::string_view bytes);
std::string write_embeddings(const EmbeddingTable& table);

}  // namespace synprobe

#endif  // SYNPROBE_EMBEDDINGS_H_
