#pragma once

#include <string>
#include <vector>

#include "biosimp/config.hpp"
#include "biosimp/text.hpp"

namespace biosimp {

enum class RemovalReason { kSectionIndicator, kParenthetical };

struct HyphenRewrite {
  std::string fragment;  // e.g. "alpha-"
  std::string partner;   // e.g. "beta-catenin"
  std::string result;    // e.g. "alpha-catenin"

  friend bool operator==(const HyphenRewrite&, const HyphenRewrite&) = default;
};

// What preprocessing did to one sentence. Spans reference the input sentence.
struct PreprocessRecord {
  std::vector<std::pair<Span, RemovalReason>> removed_spans;
  std::vector<HyphenRewrite> hyphen_rewrites;
  bool changed = false;
};

struct PreprocessResult {
  Sentence sentence;
  PreprocessRecord record;
};

// Removes a leading "RESULTS:" style section label: 1-3 alphabetic tokens
// whose uppercased, space-joined form is a configured indicator, followed by
// a colon token.
PreprocessResult strip_section_indicator(const Sentence& sentence,
                                         const PipelineConfig& config);

// Removes every balanced (...) and [...] group, delimiters included.
// Unbalanced delimiters, or a removal that would leave no alphabetic token,
// leave the sentence unchanged.
PreprocessResult strip_parentheticals(const Sentence& sentence);

// Completes "alpha-" from the nearest following token with an interior
// hyphen, and "-catenin" from the nearest preceding one.
PreprocessResult rejoin_hyphen_fragments(const Sentence& sentence);

// The three steps in order: section indicator, parentheticals (when the
// config enables it), hyphen rejoining.
PreprocessResult preprocess_sentence(const Sentence& sentence,
                                     const PipelineConfig& config);

// In-place variants over tagged text; the pipeline composes these so that
// downstream stages keep character-level provenance. Return true when the
// text changed.
bool strip_section_indicator_tagged(TaggedText& text,
                                    const std::vector<std::string>& indicators,
                                    PreprocessRecord& record);
bool strip_parentheticals_tagged(TaggedText& text, PreprocessRecord& record);
bool rejoin_hyphen_fragments_tagged(TaggedText& text, PreprocessRecord& record);
bool preprocess_tagged(TaggedText& text, const PipelineConfig& config,
                       PreprocessRecord& record);

}  // namespace biosimp
