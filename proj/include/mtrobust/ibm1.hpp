#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mtrobust/quadruple.hpp"
#include "mtrobust/sentence.hpp"

namespace mtrobust {

// Probability floor for word pairs never seen together in training.
inline constexpr double kUnseenProb = 1e-12;

// Printable name of the NULL source word in table dumps.
inline constexpr const char* kNullWordName = "<NULL>";

struct Vocab {
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> words;

  int add(const std::string& w);
  int find(const std::string& w) const;  // -1 when absent
  std::size_t size() const { return words.size(); }
};

// IBM Model 1 lexical table t(target | source), trained by EM. Source index
// -1 denotes the NULL word, which co-occurs with every target word.
class TranslationTable {
public:
  static constexpr int kNull = -1;

  // prob by internal ids; unseen pairs floor at kUnseenProb.
  double prob(int source_id, int target_id) const;
  double prob(const std::string& source, const std::string& target) const;

  const Vocab& source_vocab() const { return source_vocab_; }
  const Vocab& target_vocab() const { return target_vocab_; }
  const std::vector<double>& log_likelihood_trace() const { return log_likelihood_; }

  // "source_token target_token probability" lines, sorted lexicographically.
  void dump(std::ostream& out) const;

private:
  friend TranslationTable train_ibm1(const std::vector<std::pair<Sentence, Sentence>>&, int, int);

  // row index 0 is NULL, row i+1 is source word id i
  std::size_t row_of(int source_id) const { return static_cast<std::size_t>(source_id + 1); }

  Vocab source_vocab_;
  Vocab target_vocab_;
  std::vector<std::unordered_map<int, double>> rows_;
  std::vector<double> log_likelihood_;
};

// Aligned source index per target position; kNullAligned marks NULL.
struct Alignment {
  static constexpr int kNullAligned = -1;
  std::vector<int> source_of;

  std::size_t size() const { return source_of.size(); }
};

// Standard Model 1 EM. t is initialized uniformly over co-occurring pairs
// (the NULL row over the whole target vocabulary); each iteration records the
// corpus log-likelihood under the parameters it started from, so the trace is
// non-decreasing. Deterministic for any thread count: expectation counts are
// accumulated over fixed-size blocks and merged in block order.
TranslationTable train_ibm1(const std::vector<std::pair<Sentence, Sentence>>& bitext,
                            int iterations, int threads = 1);

// a_j = argmax_i t(target_j | source_i) over NULL and all source positions.
// Ties prefer non-NULL, then the smallest source index.
Alignment viterbi_align(const TranslationTable& table, const Sentence& source,
                        const Sentence& target);

struct QuadrupleAlignments {
  Alignment noisy;  // x  -> y
  Alignment clean;  // x~ -> y~
};

// Trains one shared table on the union of all noisy and clean pairs, then
// Viterbi-aligns both pairs of every quadruple.
std::vector<QuadrupleAlignments> align_corpus(const std::vector<Quadruple>& qs, int iterations,
                                              int threads = 1);

// Pharaoh format: one line per sentence pair, space-separated "i-j" links
// (source-target), NULL links omitted.
void write_pharaoh(const std::vector<Alignment>& alignments, std::ostream& out);

// Reads one alignment per line; target_lengths sizes each alignment. Throws
// InvalidInput listing the missing line numbers when the file is short, and
// ParseError on malformed links or out-of-range indices.
std::vector<Alignment> read_pharaoh(std::istream& in,
                                    const std::vector<std::size_t>& target_lengths);
std::vector<Alignment> read_pharaoh_file(const std::string& path,
                                         const std::vector<std::size_t>& target_lengths);

}  // namespace mtrobust
