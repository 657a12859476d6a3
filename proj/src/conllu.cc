#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "synprobe/treebank_io.h"

namespace synprobe {
namespace {

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Parses the lines of one sentence (comments included). Throws ParseError.
DepTree parse_sentence(const std::vector<Line>& lines, int ordinal) {
  DepTree tree;
  std::vector<int> head_lines;
  for (const Line& line : lines) {
    if (std::size_t bad = find_invalid_utf8(line.text);
        bad != std::string_view::npos)
      throw ParseError("invalid UTF-8", line.number, static_cast<int>(bad) + 1);
    if (line.text.front() == '#') {
      constexpr std::string_view kSentId = "# sent_id = ";
      if (line.text.starts_with(kSentId))
        tree.id = std::string(line.text.substr(kSentId.size()));
      continue;
    }
    auto fields = split_tabs(line.text);
    if (fields.size() != 10)
      throw ParseError("expected 10 tab-separated columns, found " +
                           std::to_string(fields.size()),
                       line.number);
    std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      // Multiword range or empty node; both still need numeric parts.
      const char sep = id.find('-') != std::string_view::npos ? '-' : '.';
      std::size_t at = id.find(sep);
      if (!parse_int(id.substr(0, at)) || !parse_int(id.substr(at + 1)))
        throw ParseError("malformed ID '" + std::string(id) + "'", line.number);
      continue;
    }
    auto index = parse_int(id);
    if (!index || *index != tree.size() + 1)
      throw ParseError("malformed or out-of-sequence ID '" + std::string(id) +
                           "'",
                       line.number);
    auto head = parse_int(fields[6]);
    if (!head || *head < 0)
      throw ParseError("malformed HEAD '" + std::string(fields[6]) + "'",
                       line.number);
    if (fields[1].empty())
      throw ParseError("empty FORM", line.number);
    Token token;
    token.index = *index;
    token.form = std::string(fields[1]);
    token.upos = std::string(fields[3]);
    token.head = *head;
    token.deprel = std::string(fields[7]);
    tree.tokens.push_back(std::move(token));
    head_lines.push_back(line.number);
  }
  const int first_line = lines.front().number;
  if (tree.tokens.empty())
    throw ParseError("sentence has no syntactic words", first_line);
  int roots = 0;
  for (int i = 1; i <= tree.size(); ++i) {
    const Token& t = tree.at(i);
    if (t.head > tree.size())
      throw ParseError("head " + std::to_string(t.head) + " out of range",
                       head_lines[i - 1]);
    if (t.head == i)
      throw ParseError("token is its own head", head_lines[i - 1]);
    if (t.head == 0) ++roots;
  }
  if (roots == 0) throw ParseError("sentence has no root", first_line);
  if (roots > 1)
    throw ParseError("sentence has " + std::to_string(roots) + " roots",
                     first_line);
  if (std::string problem = dep_tree_problem(tree); !problem.empty())
    throw ParseError(problem, first_line);
  if (tree.id.empty()) tree.id = std::to_string(ordinal);
  return tree;
}

}  // namespace

ReadResult<DepTree> read_conllu(std::string_view text, OnError policy) {
  ReadResult<DepTree> result;
  std::vector<Line> block;
  int ordinal = 0;
  auto flush = [&] {
    if (block.empty()) return;
    ++ordinal;
    try {
      result.trees.push_back(parse_sentence(block, ordinal));
    } catch (const ParseError& e) {
      if (policy == OnError::kAbort) throw;
      result.errors.push_back(e);
    }
    block.clear();
  };
  for (const Line& line : split_lines(text)) {
    if (is_blank(line.text))
      flush();
    else
      block.push_back(line);
  }
  flush();
  return result;
}

std::string write_conllu(const std::vector<DepTree>& trees) {
  std::string out;
  for (const DepTree& tree : trees) {
    if (!tree.id.empty()) out += "# sent_id = " + tree.id + "\n";
    for (const Token& t : tree.tokens) {
      out += std::to_string(t.index);
      out += '\t';
      out += t.form;
      out += "\t_\t";
      out += t.upos.empty() ? "_" : t.upos;
      out += "\t_\t_\t";
      out += std::to_string(t.head);
      out += '\t';
      out += t.deprel.empty() ? "_" : t.deprel;
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

std::size_t find_invalid_utf8(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates and values past U+10FFFF.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF))
      return i;
    i += len;
  }
  return std::string_view::npos;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace synprobe
