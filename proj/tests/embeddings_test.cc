#include <gtest/gtest.h>

#include "synprobe/binary.h"
#include "synprobe/embeddings.h"
#include "synprobe/random.h"

namespace synprobe {
namespace {

std::string header(std::uint32_t dim) {
  std::string out = "EMB1";
  binary::put_u32(out, dim);
  return out;
}

TEST(EmbeddingsTest, ReadsHandBuiltFile) {
  std::string bytes = header(4);
  binary::put_u32(bytes, 2);
  const SentenceHash hash = sentence_id_hash("s1");
  bytes.append(reinterpret_cast<const char*>(hash.data()), hash.size());
  const std::vector<float> values = {0.5f, -1.0f, 2.25f, 0.0f, 1e-3f, 3.0f, -7.5f, 42.0f};
  for (float v : values) binary::put_f32(bytes, v);
  binary::put_u32(bytes, 0);

  const EmbeddingTable table = read_embeddings(bytes);
  EXPECT_EQ(table.dim, 4);
  ASSERT_EQ(table.sentences.size(), 1u);
  EXPECT_EQ(table.sentences[0].words, 2);
  EXPECT_EQ(table.sentences[0].values, values);
  EXPECT_EQ(table.sentences[0].id_hash, hash);
  EXPECT_EQ(table.sentences[0].row(1, 4)[3], 42.0f);
  EXPECT_EQ(write_embeddings(table), bytes);
}

TEST(EmbeddingsTest, LittleEndianLayout) {
  EmbeddingTable table;
  table.dim = 1;
  table.sentences.push_back({SentenceHash{}, 1, {1.0f}});
  const std::string bytes = write_embeddings(table);
  ASSERT_EQ(bytes.size(), 4u + 4 + 4 + 16 + 4 + 4);
  EXPECT_EQ(bytes.substr(0, 4), "EMB1");
  EXPECT_EQ(bytes.substr(4, 4), std::string("\x01\0\0\0", 4));
  EXPECT_EQ(bytes.substr(8, 4), std::string("\x01\0\0\0", 4));
  EXPECT_EQ(bytes.substr(28, 4), std::string("\0\0\x80\x3f", 4));
  EXPECT_EQ(bytes.substr(32, 4), std::string(4, '\0'));
}

TEST(EmbeddingsTest, EmptyPayload) {
  EXPECT_TRUE(read_embeddings(header(8)).sentences.empty());
  std::string terminated = header(8);
  binary::put_u32(terminated, 0);
  const EmbeddingTable table = read_embeddings(terminated);
  EXPECT_EQ(table.dim, 8);
  EXPECT_TRUE(table.sentences.empty());
}

TEST(EmbeddingsTest, RandomRoundTrip) {
  Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    EmbeddingTable table;
    table.dim = rng.range(1, 16);
    for (int s = rng.range(0, 10); s > 0; --s) {
      EmbeddedSentence sentence;
      sentence.words = rng.range(1, 9);
      if (rng.uniform() < 0.5) sentence.id_hash = sentence_id_hash(std::to_string(s));
      for (int i = 0; i < sentence.words * table.dim; ++i)
        sentence.values.push_back(static_cast<float>(rng.normal()));
      table.sentences.push_back(std::move(sentence));
    }
    EXPECT_EQ(read_embeddings(write_embeddings(table)), table);
  }
}

TEST(EmbeddingsTest, ErrorsCarryOffsets) {
  auto offset_of = [](const std::string& bytes) -> long {
    try {
      read_embeddings(bytes);
    } catch (const EmbeddingFormatError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("EMB2\x04\0\0\0"), 0);
  EXPECT_EQ(offset_of("EM"), 0);
  EXPECT_EQ(offset_of("EMB1\x04\0"), 4);
  EXPECT_EQ(offset_of(header(0)), 4);

  std::string truncated = header(2);
  binary::put_u32(truncated, 3);
  truncated += std::string(16, '\0');
  binary::put_f32(truncated, 1.0f);
  EXPECT_EQ(offset_of(truncated), 8);

  std::string short_hash = header(2);
  binary::put_u32(short_hash, 1);
  short_hash += "abc";
  EXPECT_EQ(offset_of(short_hash), 12);

  std::string trailing = header(2);
  binary::put_u32(trailing, 0);
  trailing += "x";
  EXPECT_EQ(offset_of(trailing), 12);
}

TEST(EmbeddingsTest, GarbageNeverCrashes) {
  Rng rng(2);
  for (int k = 0; k < 5000; ++k) {
    std::string bytes = header(rng.range(1, 3));
    for (int i = rng.range(0, 80); i > 0; --i) bytes += static_cast<char>(rng.range(0, 3));
    try {
      const EmbeddingTable t = read_embeddings(bytes);
      for (const auto& s : t.sentences)
        ASSERT_EQ(s.values.size(), static_cast<std::size_t>(s.words) * t.dim);
    } catch (const EmbeddingFormatError&) {
    }
  }
}

TEST(EmbeddingsTest, SentenceHashIsBlake2b128) {
  // BLAKE2b with a 16-byte digest, as in Python's hashlib.blake2b(digest_size=16).
  const SentenceHash h = sentence_id_hash("abc");
  const SentenceHash expected = {0xcf, 0x4a, 0xb7, 0x91, 0xc6, 0x2b, 0x8d, 0x2b,
                                 0x21, 0x09, 0xc9, 0x02, 0x75, 0x28, 0x78, 0x16};
  EXPECT_EQ(h, expected);
  EXPECT_FALSE(is_unchecked(h));
  EXPECT_TRUE(is_unchecked(SentenceHash{}));
}

}  // namespace
}  // namespace synprobe
