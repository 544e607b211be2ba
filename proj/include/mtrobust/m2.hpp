#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "mtrobust/sentence.hpp"

namespace mtrobust {

enum class EditOp { Missing, Replacement, Unnecessary, Unknown };

// ERRANT-style edit label: operation prefix plus category. Serialized as
// "M:NOUN", "R:VERB:SVA", "U:DET", or the literal "UNK".
struct ErrorType {
  EditOp op = EditOp::Unknown;
  std::string category;

  std::string str() const;
  static ErrorType parse(const std::string& text);

  // Category with the operation prefix dropped and ':' replaced by '-'
  // ("R:VERB:SVA" -> "VERB-SVA"), for grouping across operations.
  std::string collapsed() const;

  bool operator==(const ErrorType&) const = default;
};

// One correction: replace source tokens [start, end) with `replacement`.
// Insertions have start == end; deletions have an empty replacement.
struct Edit {
  std::size_t start = 0;
  std::size_t end = 0;
  Sentence replacement;
  ErrorType type;
  int annotator = 0;

  bool operator==(const Edit&) const = default;
};

struct AnnotatedSentence {
  Sentence source;
  std::vector<Edit> edits;
  std::set<int> noop_annotators;  // annotators that marked the sentence correct

  std::vector<Edit> edits_of(int annotator) const;
  bool operator==(const AnnotatedSentence&) const = default;
};

// Parses M2 blocks: an "S <tokens>" line followed by zero or more
// "A <start> <end>|||<type>|||<correction>|||...|||<annotator>" lines,
// blocks separated by blank lines. noop annotations record the annotator and
// produce no Edit; "-NONE-" or an empty correction means an empty replacement.
std::vector<AnnotatedSentence> parse_m2(std::istream& in, const WarningSink& warn = {});
std::vector<AnnotatedSentence> parse_m2_file(const std::string& path, const WarningSink& warn = {});

void serialize_m2(const std::vector<AnnotatedSentence>& sentences, std::ostream& out);

// Applies the chosen annotator's edits left to right. Throws InvalidInput on
// overlapping spans (naming both edits) or a span past the end of the source.
// An annotator with no edits returns the source unchanged.
Sentence apply_edits(const AnnotatedSentence& s, int annotator);

void lowercase_inplace(AnnotatedSentence& s);

}  // namespace mtrobust
