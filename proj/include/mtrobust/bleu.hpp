#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "mtrobust/sentence.hpp"

namespace mtrobust {

inline constexpr int kBleuOrder = 4;

// Summable sufficient statistics for BLEU-4 over one or more candidate /
// reference pairs.
struct BleuStats {
  std::array<std::int64_t, kBleuOrder> matched{};  // clipped n-gram matches
  std::array<std::int64_t, kBleuOrder> total{};    // candidate n-gram counts
  std::int64_t candidate_len = 0;
  std::int64_t reference_len = 0;

  BleuStats& operator+=(const BleuStats& o);
};

struct BleuBreakdown {
  std::array<double, kBleuOrder> precisions{};
  double brevity_penalty = 1.0;
  std::int64_t candidate_len = 0;
  std::int64_t reference_len = 0;
  double score = 0.0;  // [0, 100]
};

BleuStats bleu_stats(const Sentence& candidate, const Sentence& reference);

// Score from accumulated statistics. With smoothing on, the n >= 2 precisions
// are (matched+1)/(total+1); order-1 is never smoothed. An empty candidate or
// a zero precision yields score 0.
BleuBreakdown bleu_from_stats(const BleuStats& stats, bool smooth);

// Sentence-level BLEU-4 (smoothed). Throws InvalidInput on an empty reference.
BleuBreakdown sentence_bleu(const Sentence& candidate, const Sentence& reference);

// Corpus-level BLEU-4: counts are summed over all pairs before the geometric
// mean, no smoothing. Throws InvalidInput on an empty pair list or when every
// reference is empty.
double corpus_bleu(const std::vector<std::pair<Sentence, Sentence>>& pairs);
double corpus_bleu_from_stats(const BleuStats& stats);

}  // namespace mtrobust
