#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mtrobust {

// A whitespace-tokenized sentence. Tokens never contain whitespace; an empty
// vector represents a blank line.
using Sentence = std::vector<std::string>;

// Splits on runs of spaces/tabs. Does not attempt any real tokenization;
// inputs are expected to be pre-tokenized.
Sentence tokenize(const std::string& line);

std::string join(const Sentence& s);

// ASCII-only lowercasing; multibyte UTF-8 sequences pass through untouched.
std::string lowercase_ascii(const std::string& token);
void lowercase_ascii_inplace(Sentence& s);

// Sink for non-fatal oddities found while reading input (blank hypothesis
// lines, span/operation mismatches). line is 1-based, 0 when unknown.
using WarningSink = std::function<void(std::size_t line, const std::string& message)>;

}  // namespace mtrobust
