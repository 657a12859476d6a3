// synprobe: CoNLL-U and bracketed-tree readers/writers.

#ifndef SYNPROBE_TREEBANK_IO_H_
#define SYNPROBE_TREEBANK_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "synprobe/trees.h"

namespace synprobe {

enum class OnError { kAbort, kSkip };

template <typename Tree>
struct ReadResult {
  std::vector<Tree> trees;
  std::vector<ParseError> errors;  // only populated with OnError::kSkip
};

// Only ID, FORM, UPOS, HEAD and DEPREL are kept. Multiword-token ranges
// ("3-4") and empty nodes ("3.1") are dropped. With kAbort the first bad
// sentence throws ParseError; with kSkip it is recorded and skipped.
ReadResult<DepTree> read_conllu(std::string_view text,
                                OnError policy = OnError::kAbort);
std::string write_conllu(const std::vector<DepTree>& trees);

// One PTB-style tree per line, e.g. "(S (NP (DT This) (NN painting)) ...)".
// A top-level bracket without a label and a single child, "( (S ...) )", is
// unwrapped. Nonterminals may not contain '+', which is reserved for
// collapsed unary chains.
ReadResult<ConstTree> read_brackets(std::string_view text,
                                    OnError policy = OnError::kAbort);
ConstTree parse_bracketed_tree(std::string_view line, int line_number = 1);
std::string write_brackets(const std::vector<ConstTree>& trees);
std::string to_bracketed(const ConstNode& node);

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t find_invalid_utf8(std::string_view text);

// File helpers used by the CLI and tests.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace synprobe

#endif  // SYNPROBE_TREEBANK_IO_H_
