#pragma once

#include <string>

#include "mtrobust/sentence.hpp"

namespace mtrobust {

enum class Kernel { Bleu, Meteor };

std::string kernel_name(Kernel k);
Kernel parse_kernel(const std::string& name);

// d(a, b) = 100 - score of a against reference b. Errors propagate from the
// kernel (notably: BLEU rejects an empty reference).
double distance(const Sentence& a, const Sentence& b, Kernel kernel);

}  // namespace mtrobust
