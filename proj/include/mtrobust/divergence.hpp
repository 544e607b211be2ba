#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtrobust/ibm1.hpp"
#include "mtrobust/quadruple.hpp"

namespace mtrobust {

// Which side's tokens are tested for membership in the other output:
// Reference counts tokens of y_tilde missing from y (the worked-example
// convention and the default); Output counts tokens of y missing from y_tilde
// (the formal set definition). Both use offsets relative to the same anchor.
enum class DivergenceSide { Reference, Output };

std::string side_name(DivergenceSide side);
DivergenceSide parse_side(const std::string& name);

struct DivergenceHistogram {
  std::map<int, std::int64_t> counts;  // signed offset -> count
  std::int64_t total = 0;
  std::int64_t contributing_instances = 0;

  void add_offsets(const std::vector<int>& offsets);
  void merge(const DivergenceHistogram& o);
};

// Population moments of the offset distribution. mu/sigma require at least
// one observation; gamma1 additionally requires n >= 2 and sigma > 0.
struct DistributionStats {
  std::optional<double> mu;
  std::optional<double> sigma;
  std::optional<double> gamma1;
  std::int64_t n = 0;
};

DistributionStats distribution_stats(const DivergenceHistogram& h);

// Position i* of the correction in x_tilde: the first replacement token for
// insertions/replacements, the token after the deletion site (clamped to the
// last position) for deletions.
std::optional<std::size_t> correction_position(const Quadruple& q, const Edit& e);

// k*: the smallest target position aligned to i*. When nothing aligns to i*,
// falls back to the nearest source index that has an aligned target (ties
// toward the smaller index). nullopt when y_tilde is empty or no source
// position aligns anywhere. Throws InvalidInput unless q has exactly one edit.
std::optional<std::size_t> edit_anchor(const Quadruple& q, const Edit& e,
                                       const Alignment& clean);

// Offsets j - k* of the divergent positions on the chosen side; membership is
// by token type. Duplicate tokens contribute one offset per position.
std::vector<int> divergent_offsets(const Quadruple& q, std::size_t k_star,
                                   DivergenceSide side);

enum class DivergenceGrouping { Overall, ErrorType, Quartile };

struct DivergenceGroup {
  DivergenceHistogram histogram;
  DistributionStats stats;
};

struct DivergenceResult {
  // Keys: "all" for Overall; the serialized error type for ErrorType;
  // "q1".."q4" for Quartile. Empty groups are omitted.
  std::map<std::string, DivergenceGroup> groups;
  std::int64_t considered = 0;         // single-edit instances seen
  std::int64_t skipped_no_anchor = 0;  // instances without a usable anchor
};

// qs must be pre-filtered to single-edit quadruples; clean_alignments[i]
// aligns qs[i].x_tilde to qs[i].y_tilde. Quartile grouping bins on
// i*/|x_tilde| with bounds 0.25 / 0.5 / 0.75.
DivergenceResult divergence_distribution(const std::vector<Quadruple>& qs,
                                         const std::vector<Alignment>& clean_alignments,
                                         DivergenceSide side, DivergenceGrouping grouping);

// "offset<TAB>count" lines sorted by offset, then one "mu sigma gamma1 n"
// stats line (undefined values print as nan).
void dump_histogram(const DivergenceHistogram& h, const DistributionStats& stats,
                    std::ostream& out);

}  // namespace mtrobust
