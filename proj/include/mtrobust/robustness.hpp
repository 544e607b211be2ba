#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtrobust/bleu.hpp"
#include "mtrobust/meteor.hpp"
#include "mtrobust/metrics.hpp"
#include "mtrobust/quadruple.hpp"

namespace mtrobust {

// Everything the per-sentence analyses and the corpus aggregations need about
// one quadruple. The BLEU/METEOR sufficient statistics make corpus scores
// over any subset recomputable without the sentences themselves.
struct RobustnessRecord {
  std::string dataset_id;
  std::size_t index = 0;
  std::size_t source_len = 0;  // |x|
  std::size_t edit_count = 0;
  std::vector<std::string> edit_types;  // serialized, in edit order
  bool robust = false;
  double source_distance = 0.0;  // d(x, x_tilde), BLEU kernel
  double output_distance = 0.0;  // d(y, y_tilde), BLEU kernel
  std::optional<double> f_bleu;    // sentence faux BLEU of y against y_tilde
  std::optional<double> f_meteor;  // sentence faux METEOR likewise
  std::optional<double> noise_ratio;  // defined iff source_distance > 0
  BleuStats bleu;      // y against reference y_tilde
  MeteorStats meteor;  // likewise
};

enum class Subset { All, NonRobust };

bool is_robust(const Quadruple& q);

// 100 * robust / total. Throws InvalidInput on an empty list.
double robustness_percentage(const std::vector<Quadruple>& qs);
double robustness_percentage(const std::vector<RobustnessRecord>& records);

// Corpus-level kernel score of {y} against references {y_tilde} over the
// subset. nullopt when the non-robust subset is empty (every instance
// robust); throws InvalidInput when the input list itself is empty.
std::optional<double> faux_corpus_score(const std::vector<Quadruple>& qs, Kernel kernel,
                                        Subset subset);

// d(y, y_tilde) / d(x, x_tilde) with sentence-level BLEU distances.
// nullopt when x == x_tilde (no source noise to relate to).
std::optional<double> noise_ratio(const Quadruple& q);

// Arithmetic mean of the defined per-sentence ratios, pairwise-summed.
// Throws InvalidInput when no quadruple has a defined ratio.
double corpus_noise_ratio(const std::vector<Quadruple>& qs);

// Alternative aggregate: ratio of corpus-level distances
// (100 - corpus_bleu over outputs) / (100 - corpus_bleu over sources).
double corpus_noise_ratio_distance_ratio(const std::vector<Quadruple>& qs);

// Optional discount for language-pair length mismatch: mean source-side
// length over mean output-side length (both sides of each pair counted).
double length_ratio_discount(const std::vector<Quadruple>& qs);

// True iff the noise ratio exceeds 1, evaluated as output distance strictly
// greater than source distance. Requires x != x_tilde.
bool attack_success(const Quadruple& q);

RobustnessRecord evaluate_quadruple(const Quadruple& q);

// Per-quadruple records in input order; computed over fixed-size blocks so
// the result is identical for any thread count.
std::vector<RobustnessRecord> evaluate_corpus(const std::vector<Quadruple>& qs, int threads = 1);

}  // namespace mtrobust
