#include "biosimp/readability.hpp"

#include <cstdio>
#include <sstream>

#include "biosimp/errors.hpp"
#include "biosimp/text.hpp"

namespace biosimp {

namespace {

bool is_vowel(char c) {
  switch (c | 0x20) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

int syllables_of_part(std::string_view part) {
  int groups = 0;
  bool in_group = false;
  for (char c : part) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  std::string folded = ascii_lower_copy(part);
  if (folded.size() >= 1 && folded.back() == 'e' && !folded.ends_with("le")) {
    --groups;
  }
  return groups < 1 ? 1 : groups;
}

std::string format1(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

std::string format2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

void accumulate(CorpusStats& stats, std::string_view text, const StageSet& transforms,
                const PlaceholderStyle& style) {
  ++stats.sentence_count;
  for (const Token& tok : tokenize(text)) {
    if (!has_alnum(tok.text)) continue;
    ++stats.word_count;
    int syllables = count_syllables(tok.text, style);
    stats.syllable_count += syllables;
    if (syllables >= 3) ++stats.complex_word_count;
  }
  for (Stage s : transforms.to_vector()) {
    ++stats.stage_counts[static_cast<int>(s)];
  }
}

void finish(CorpusStats& stats) {
  if (stats.sentence_count > 0) {
    stats.words_per_sentence =
        static_cast<double>(stats.word_count) / stats.sentence_count;
    if (stats.word_count > 0) {
      stats.flesch_kincaid = flesch_kincaid_grade(stats);
      stats.gunning_fog = gunning_fog_index(stats);
    }
  }
}

std::optional<double> percent_drop(std::optional<double> before,
                                   std::optional<double> after) {
  if (!before || !after || *before <= 0) return std::nullopt;
  return 100.0 * (*before - *after) / *before;
}

}  // namespace

int count_syllables(std::string_view word, const PlaceholderStyle& style) {
  if (style.is_placeholder(word)) return 2;
  int total = 0;
  std::size_t pos = 0;
  while (pos <= word.size()) {
    std::size_t dash = word.find('-', pos);
    std::string_view part = word.substr(
        pos, dash == std::string_view::npos ? word.size() - pos : dash - pos);
    if (!part.empty()) total += syllables_of_part(part);
    if (dash == std::string_view::npos) break;
    pos = dash + 1;
  }
  return total < 1 ? 1 : total;
}

double flesch_kincaid_grade(const CorpusStats& stats) {
  if (stats.sentence_count <= 0 || stats.word_count <= 0) {
    throw DegenerateCorpusError("Flesch-Kincaid needs at least one sentence and word");
  }
  double wps = static_cast<double>(stats.word_count) / stats.sentence_count;
  double spw = static_cast<double>(stats.syllable_count) / stats.word_count;
  return 0.39 * wps + 11.8 * spw - 15.59;
}

double gunning_fog_index(const CorpusStats& stats) {
  if (stats.sentence_count <= 0 || stats.word_count <= 0) {
    throw DegenerateCorpusError("Gunning Fog needs at least one sentence and word");
  }
  double wps = static_cast<double>(stats.word_count) / stats.sentence_count;
  double complex_share =
      static_cast<double>(stats.complex_word_count) / stats.word_count;
  return 0.4 * (wps + 100.0 * complex_share);
}

CorpusStats corpus_stats(const std::vector<Sentence>& corpus,
                         const PlaceholderStyle& style) {
  CorpusStats stats;
  for (const Sentence& s : corpus) accumulate(stats, s.text, {}, style);
  finish(stats);
  return stats;
}

CorpusStats corpus_stats(const std::vector<SimplifiedSentence>& corpus,
                         const PlaceholderStyle& style) {
  CorpusStats stats;
  for (const SimplifiedSentence& s : corpus) {
    accumulate(stats, s.text, s.transforms, style);
  }
  finish(stats);
  return stats;
}

ReductionReport reduction_report(const CorpusStats& before, const CorpusStats& after) {
  ReductionReport report;
  report.before = before;
  report.after = after;
  report.words_per_sentence_drop =
      percent_drop(before.words_per_sentence, after.words_per_sentence);
  report.flesch_kincaid_drop = percent_drop(before.flesch_kincaid, after.flesch_kincaid);
  report.gunning_fog_drop = percent_drop(before.gunning_fog, after.gunning_fog);
  if (before.word_count > 0) {
    report.word_count_drop = percent_drop(static_cast<double>(before.word_count),
                                          static_cast<double>(after.word_count));
  }
  return report;
}

namespace {

const char* stage_label(Stage s) {
  switch (s) {
    case Stage::kPreprocess: return "preprocess";
    case Stage::kEntity: return "entity placeholders";
    case Stage::kNounPhrase: return "noun-phrase placeholders";
    case Stage::kSplit: return "clause split";
  }
  return "?";
}

std::string opt2(const std::optional<double>& v) {
  return v ? format2(*v) : std::string("n/a");
}

}  // namespace

std::string render_stats_text(const CorpusStats& stats) {
  std::ostringstream out;
  out << "sentences           " << stats.sentence_count << "\n";
  out << "words               " << stats.word_count << "\n";
  out << "syllables           " << stats.syllable_count << "\n";
  out << "complex words       " << stats.complex_word_count << "\n";
  out << "words/sentence      " << opt2(stats.words_per_sentence) << "\n";
  out << "Flesch-Kincaid      " << opt2(stats.flesch_kincaid) << "\n";
  out << "Gunning Fog         " << opt2(stats.gunning_fog) << "\n";
  out << "sentences per stage:\n";
  for (Stage s : {Stage::kPreprocess, Stage::kEntity, Stage::kNounPhrase, Stage::kSplit}) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "  %-26s%ld\n", stage_label(s), stats.stage_count(s));
    out << buf;
  }
  return out.str();
}

std::string render_reduction_text(const ReductionReport& report) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-20s%12s%12s%10s\n", "metric", "before", "after",
                "drop");
  out << buf;

  const auto row = [&](const char* name, const std::optional<double>& b,
                       const std::optional<double>& a,
                       const std::optional<double>& drop) {
    std::string drop_text = drop ? format1(*drop) + "%" : std::string("n/a");
    std::snprintf(buf, sizeof(buf), "%-20s%12s%12s%10s\n", name, opt2(b).c_str(),
                  opt2(a).c_str(), drop_text.c_str());
    out << buf;
  };

  std::snprintf(buf, sizeof(buf), "%-20s%12ld%12ld\n", "sentences",
                report.before.sentence_count, report.after.sentence_count);
  out << buf;
  row("words/sentence", report.before.words_per_sentence,
      report.after.words_per_sentence, report.words_per_sentence_drop);
  row("Flesch-Kincaid", report.before.flesch_kincaid, report.after.flesch_kincaid,
      report.flesch_kincaid_drop);
  row("Gunning Fog", report.before.gunning_fog, report.after.gunning_fog,
      report.gunning_fog_drop);

  out << "sentences per stage (after):\n";
  for (Stage s : {Stage::kPreprocess, Stage::kEntity, Stage::kNounPhrase, Stage::kSplit}) {
    std::snprintf(buf, sizeof(buf), "  %-26s%ld\n", stage_label(s),
                  report.after.stage_count(s));
    out << buf;
  }
  return out.str();
}

}  // namespace biosimp
