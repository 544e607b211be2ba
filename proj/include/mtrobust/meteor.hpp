#pragma once

#include <cstdint>

#include "mtrobust/sentence.hpp"

namespace mtrobust {

// Exact-match METEOR parameters (Denkowski & Lavie constants).
inline constexpr double kMeteorAlpha = 0.9;
inline constexpr double kMeteorBeta = 3.0;
inline constexpr double kMeteorGamma = 0.5;

// Summable sufficient statistics for the exact-match METEOR variant.
struct MeteorStats {
  std::int64_t matches = 0;
  std::int64_t chunks = 0;
  std::int64_t candidate_len = 0;
  std::int64_t reference_len = 0;

  MeteorStats& operator+=(const MeteorStats& o);
};

struct MeteorBreakdown {
  std::int64_t matches = 0;
  std::int64_t chunks = 0;
  double precision = 0.0;
  double recall = 0.0;
  double fmean = 0.0;
  double penalty = 0.0;
  double score = 0.0;  // [0, 100]
};

// Unigram exact-match alignment maximizing matches and, among maximal
// matchings, minimizing the number of chunks (runs of matched tokens adjacent
// and in order in both sentences). The search is exact branch-and-bound with
// a node cap; past the cap the best matching found so far is used.
MeteorStats meteor_stats(const Sentence& candidate, const Sentence& reference);

MeteorBreakdown meteor_breakdown_from_stats(const MeteorStats& stats);

// score = 100 * fmean * (1 - gamma * (chunks/matches)^beta); 0 when nothing
// matches. Empty inputs score 0 rather than erroring.
MeteorBreakdown meteor_lite(const Sentence& candidate, const Sentence& reference);

}  // namespace mtrobust
