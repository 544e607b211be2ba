#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtrobust/robustness.hpp"

namespace mtrobust {

struct CorpusReport {
  std::string dataset_id;
  std::size_t n_sentences = 0;
  double mean_edits = 0.0;
  double rb = 0.0;  // robustness percentage
  std::optional<double> f_bleu_nonrobust;    // nullopt: every instance robust
  std::optional<double> f_meteor_nonrobust;  // likewise
  std::optional<double> mean_nr;             // nullopt: no edited instance
};

// One report per dataset (order of first appearance), an "ALL\<id>" row when
// exclude_from_all names a present dataset, then the "ALL" row. Aggregate
// rows are computed over the concatenated records, not averaged.
std::vector<CorpusReport> dataset_report(const std::vector<RobustnessRecord>& records,
                                         const std::optional<std::string>& exclude_from_all = {});

struct ErrorCountBin {
  std::string label;  // "1".."9", "10+"
  std::size_t n = 0;
  std::optional<double> rb;               // absent when n == 0
  std::optional<double> f_bleu_nonrobust; // corpus faux BLEU over the bin's non-robust members
};

// Bins instances by edit count; zero-edit instances are excluded. Empty bins
// are emitted with n = 0 so the series always covers 1..9 and 10+.
std::vector<ErrorCountBin> bin_by_error_count(const std::vector<RobustnessRecord>& records);

struct GridCell {
  int length_bound = 0;  // |x| < length_bound; bounds 5,10,...,35
  int errors = 0;        // 1..5
  std::size_t n = 0;
  std::optional<double> rb;
  bool plotted = false;  // n > 0 and rb >= 1%
};

struct LengthErrorGrid {
  std::vector<GridCell> cells;  // all 7 x 5 cells, length-major
  std::size_t n_length_overflow = 0;  // |x| >= 35
  std::size_t n_error_overflow = 0;   // more than 5 edits (length in range)
  std::size_t n_clean = 0;            // zero edits, excluded
};

LengthErrorGrid bin_by_length_and_errors(const std::vector<RobustnessRecord>& records);

// Sample Pearson correlation. Throws InvalidInput on length mismatch, fewer
// than two points, or zero variance in either column.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

enum class RecoverabilityFlag { Typical, RecoverableOutlier, NonrecoverableOutlier };

struct ErrorTypeRecoverability {
  std::string error_type;
  std::size_t n_instances = 0;
  double rb = 0.0;
  RecoverabilityFlag flag = RecoverabilityFlag::Typical;
  bool in_band_pool = false;  // n >= min_count, so it entered the mu/sigma pool
};

struct RecoverabilityResult {
  std::vector<ErrorTypeRecoverability> types;  // sorted by rb descending
  std::optional<double> mu;                    // over the pool types' RB values
  std::optional<double> sigma;                 // population sd over the pool
  std::size_t min_count = 0;
};

// Restricted to single-edit instances. Flags types whose RB falls outside
// [mu - 2 sigma, mu + 2 sigma]; collapse_categories merges operations into
// one category ("R:VERB:SVA" -> "VERB-SVA").
RecoverabilityResult error_recoverability(const std::vector<RobustnessRecord>& records,
                                          std::size_t min_count = 10,
                                          bool collapse_categories = false);

}  // namespace mtrobust
