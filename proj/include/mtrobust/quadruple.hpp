#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtrobust/m2.hpp"
#include "mtrobust/sentence.hpp"

namespace mtrobust {

// One evaluation unit: noisy source x, corrected source x_tilde, and the MT
// outputs y / y_tilde of each, plus the applied edits.
struct Quadruple {
  Sentence x;
  Sentence x_tilde;
  Sentence y;
  Sentence y_tilde;
  std::vector<Edit> edits;  // the selected annotator's edits, noop excluded
  std::string dataset_id;
  std::size_t index = 0;

  bool clean() const { return edits.empty(); }
};

std::size_t error_count(const Quadruple& q);

// Zips annotated sentences with the two hypothesis files. Throws InvalidInput
// (reporting all three lengths) on a count mismatch.
std::vector<Quadruple> assemble_quadruples(const std::vector<AnnotatedSentence>& annotated,
                                           const std::vector<Sentence>& hyp_noisy,
                                           const std::vector<Sentence>& hyp_clean,
                                           const std::string& dataset_id,
                                           int annotator);

// One tokenized sentence per line, UTF-8, LF line endings. Blank lines are
// kept as empty sentences and reported through the warning sink.
std::vector<Sentence> read_sentence_file(const std::string& path, const WarningSink& warn = {});

// Deterministic subset selection: without a seed, the first k indices; with a
// seed, a partial Fisher-Yates draw (own bounded-draw code, so the choice is
// identical across platforms). Results are sorted ascending.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                        std::optional<std::uint64_t> seed);

}  // namespace mtrobust
