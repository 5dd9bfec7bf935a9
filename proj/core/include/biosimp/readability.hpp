#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "biosimp/lexicon.hpp"
#include "biosimp/model.hpp"

namespace biosimp {

struct CorpusStats {
  long sentence_count = 0;
  long word_count = 0;  // tokens with at least one alphanumeric character
  long syllable_count = 0;
  long complex_word_count = 0;  // words with >= 3 syllables
  std::array<long, 4> stage_counts{};  // indexed by Stage

  std::optional<double> words_per_sentence;
  std::optional<double> flesch_kincaid;
  std::optional<double> gunning_fog;

  long stage_count(Stage s) const { return stage_counts[static_cast<int>(s)]; }
};

// Maximal aeiouy groups, minus one for a terminal "e" that is not "le",
// at least 1; hyphenated words sum over their parts; placeholder tokens
// count as 2.
int count_syllables(std::string_view word, const PlaceholderStyle& style = {});

// 0.39 * words/sentence + 11.8 * syllables/word - 15.59.
// Throws DegenerateCorpusError when there are no sentences or no words.
double flesch_kincaid_grade(const CorpusStats& stats);

// 0.4 * (words/sentence + 100 * complex_words/words).
double gunning_fog_index(const CorpusStats& stats);

CorpusStats corpus_stats(const std::vector<Sentence>& corpus,
                         const PlaceholderStyle& style = {});
CorpusStats corpus_stats(const std::vector<SimplifiedSentence>& corpus,
                         const PlaceholderStyle& style = {});

struct ReductionReport {
  CorpusStats before;
  CorpusStats after;
  std::optional<double> words_per_sentence_drop;  // percent
  std::optional<double> flesch_kincaid_drop;
  std::optional<double> gunning_fog_drop;
  std::optional<double> word_count_drop;
};

ReductionReport reduction_report(const CorpusStats& before, const CorpusStats& after);

// Aligned plain-text reports; percentages carry one decimal place.
std::string render_stats_text(const CorpusStats& stats);
std::string render_reduction_text(const ReductionReport& report);

}  // namespace biosimp
