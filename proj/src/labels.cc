#include "synprobe/labels.h"

namespace synprobe {
namespace {

// Splits `text` into sentences of tab-separated lines; calls `line_fn` with
// the fields and line number and `end_fn` after each sentence.
template <typename LineFn, typename EndFn>
void scan_blocks(std::string_view text, LineFn line_fn, EndFn end_fn) {
  int number = 0;
  bool open = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (open) end_fn();
      open = false;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t from = 0;
    while (true) {
      std::size_t tab = line.find('\t', from);
      fields.push_back(line.substr(from, tab == std::string_view::npos
                                             ? std::string_view::npos
                                             : tab - from));
      if (tab == std::string_view::npos) break;
      from = tab + 1;
    }
    open = true;
    line_fn(fields, number);
  }
  if (open) end_fn();
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kRelHead: return "relhead";
    case Scheme::kTwoPlanar: return "2planar";
    case Scheme::kArcHybrid: return "archybrid";
    case Scheme::kConstLevels: return "constlevels";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::kRelHead, Scheme::kTwoPlanar, Scheme::kArcHybrid,
                   Scheme::kConstLevels})
    if (scheme_name(s) == name) return s;
  return std::nullopt;
}

bool is_dependency(Scheme scheme) { return scheme != Scheme::kConstLevels; }

DepEncoding dep_encoding(Scheme scheme) {
  switch (scheme) {
    case Scheme::kTwoPlanar: return DepEncoding::kTwoPlanar;
    case Scheme::kArcHybrid: return DepEncoding::kArcHybrid;
    default: return DepEncoding::kRelHead;
  }
}

std::string dep_atom(const DepLabel& label) {
  return label.arc_part + kAtomJoiner + label.rel_part;
}

DepLabel parse_dep_atom(std::string_view atom) {
  const std::size_t at = atom.find(kAtomJoiner);
  if (at == std::string_view::npos) return {std::string(atom), ""};
  return {std::string(atom.substr(0, at)), std::string(atom.substr(at + 1))};
}

std::string const_atom(const ConstLabel& label) {
  return render_const_label(label);
}

std::string write_dep_labels(const std::vector<DepLabelSentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    for (std::size_t i = 0; i < s.labels.size(); ++i)
      out += s.forms[i] + '\t' + s.labels[i].arc_part + '\t' +
             s.labels[i].rel_part + '\n';
    out += '\n';
  }
  return out;
}

std::string write_const_labels(const std::vector<ConstLabelSentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    for (std::size_t i = 0; i < s.labels.size(); ++i)
      out += s.words[i].form + '\t' + render_const_label(s.labels[i]) + '\t' +
             s.words[i].pos + '\n';
    out += '\n';
  }
  return out;
}

std::vector<DepLabelSentence> read_dep_labels(std::string_view text) {
  std::vector<DepLabelSentence> out;
  DepLabelSentence current;
  scan_blocks(
      text,
      [&](const std::vector<std::string_view>& f, int line) {
        if (f.size() != 3)
          throw ParseError("expected form, arc and relation columns", line);
        if (f[0].empty()) throw ParseError("empty form", line);
        current.forms.emplace_back(f[0]);
        current.labels.push_back({std::string(f[1]), std::string(f[2])});
      },
      [&] { out.push_back(std::move(current)); current = {}; });
  return out;
}

std::vector<ConstLabelSentence> read_const_labels(std::string_view text) {
  std::vector<ConstLabelSentence> out;
  ConstLabelSentence current;
  scan_blocks(
      text,
      [&](const std::vector<std::string_view>& f, int line) {
        if (f.size() != 2 && f.size() != 3)
          throw ParseError("expected form and label columns", line);
        if (f[0].empty()) throw ParseError("empty form", line);
        try {
          current.labels.push_back(parse_const_label(f[1]));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line);
        }
        std::string pos = f.size() == 3 && !f[2].empty() ? std::string(f[2])
                                                        : std::string(kUnknownPos);
        current.words.push_back({std::string(f[0]), std::move(pos)});
      },
      [&] { out.push_back(std::move(current)); current = {}; });
  return out;
}

}  // namespace synprobe
