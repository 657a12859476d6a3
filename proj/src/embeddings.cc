#include "synprobe/embeddings.h"

#include <sodium.h>

#include "synprobe/binary.h"

namespace synprobe {

namespace {
constexpr std::string_view kMagic = "EMB1";
}  // namespace

SentenceHash sentence_id_hash(std::string_view id) {
  [[maybe_unused]] static const int ready = sodium_init();
  SentenceHash out{};
  crypto_generichash(out.data(), out.size(),
                     reinterpret_cast<const unsigned char*>(id.data()), id.size(),
                     nullptr, 0);
  return out;
}

EmbeddingTable read_embeddings(std::string_view bytes) {
  binary::Reader in(bytes);
  auto magic = in.get_bytes(kMagic.size());
  if (!magic || *magic != kMagic)
    throw EmbeddingFormatError("missing EMB1 magic", 0);
  auto dim = in.get_u32();
  if (!dim) throw EmbeddingFormatError("truncated header", in.offset());
  if (*dim == 0 || *dim > (1u << 20))
    throw EmbeddingFormatError("implausible dimension " + std::to_string(*dim),
                               kMagic.size());
  EmbeddingTable table;
  table.dim = static_cast<int>(*dim);
  while (!in.done()) {
    const std::size_t record = in.offset();
    auto n = in.get_u32();
    if (!n) throw EmbeddingFormatError("truncated word count", record);
    if (*n == 0) {
      if (!in.done())
        throw EmbeddingFormatError("data after terminating record", in.offset());
      break;
    }
    EmbeddedSentence sentence;
    auto hash = in.get_bytes(sentence.id_hash.size());
    if (!hash) throw EmbeddingFormatError("truncated sentence hash", in.offset());
    std::copy(hash->begin(), hash->end(), sentence.id_hash.begin());
    const std::uint64_t count = static_cast<std::uint64_t>(*n) * *dim;
    if (count * 4 > in.remaining())
      throw EmbeddingFormatError(
          "truncated record: " + std::to_string(*n) + " words of dimension " +
              std::to_string(*dim) + " need " + std::to_string(count * 4) +
              " bytes, " + std::to_string(in.remaining()) + " left",
          record);
    sentence.words = static_cast<int>(*n);
    sentence.values.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) sentence.values.push_back(*in.get_f32());
    table.sentences.push_back(std::move(sentence));
  }
  return table;
}

std::string write_embeddings(const EmbeddingTable& table) {
  std::string out(kMagic);
  binary::put_u32(out, static_cast<std::uint32_t>(table.dim));
  for (const EmbeddedSentence& s : table.sentences) {
    binary::put_u32(out, static_cast<std::uint32_t>(s.words));
    out.append(reinterpret_cast<const char*>(s.id_hash.data()), s.id_hash.size());
    for (float v : s.values) binary::put_f32(out, v);
  }
  binary::put_u32(out, 0);
  return out;
}

}  // namespace synprobe
