#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biosimp/model.hpp"
#include "biosimp/text.hpp"

namespace biosimp {

// One original-word reference of a link endpoint. Original sentences carry
// index + span; endpoints of simplified tokens carry the covered original
// spans; a reference with neither falls back to surface comparison.
struct LinkWord {
  std::optional<Span> span;
  std::optional<int> index;
  std::string text;

  friend bool operator==(const LinkWord&, const LinkWord&) = default;
};

struct LinkToken {
  int index = 0;      // token position in its own sentence
  std::string text;   // token surface
  std::vector<LinkWord> words;

  friend bool operator==(const LinkToken&, const LinkToken&) = default;
};

struct DepLink {
  std::string type;  // link type
  LinkToken head;
  LinkToken dep;

  friend bool operator==(const DepLink&, const DepLink&) = default;
};

enum class LinkRole { kGold, kOriginal, kSimplified };

struct LinkSet {
  std::string sentence_id;
  LinkRole role = LinkRole::kGold;
  std::vector<DepLink> links;  // kept in input order; order is the tie-break
};

// Whether the gold endpoint's single word is one of the words of the
// predicted endpoint. Span containment when both sides carry spans, index
// equality when both carry indices, surface fallback otherwise.
bool endpoint_contains(const LinkToken& predicted, const LinkToken& gold);

struct MatchSets {
  std::vector<DepLink> tp;
  std::vector<DepLink> fp;
  std::vector<DepLink> fn;
};

// Greedy one-to-one matching in input order: each predicted link takes the
// first compatible unmatched gold link. Unmatched gold links become false
// negatives unless both endpoints fall inside one predicted-side token.
// `pred_tokens` is the full token inventory of the prediction side.
MatchSets match_link_sets(const LinkSet& pred, const LinkSet& gold,
                          const std::vector<LinkToken>& pred_tokens);

struct SentenceScore {
  std::string sentence_id;
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double precision = 1.0;  // 1 when tp+fp == 0
  double recall = 1.0;     // 1 when tp+fn == 0
};

SentenceScore score_sentence(const MatchSets& sets, const std::string& sentence_id = {});
SentenceScore score_from_counts(long tp, long fp, long fn,
                                const std::string& sentence_id = {});

struct EvalReport {
  double macro_precision = 0.0;  // fractions in [0, 1]
  double macro_recall = 0.0;
  double f_measure = 0.0;
  std::vector<SentenceScore> per_sentence;
};

// Unweighted means over sentences; f is the harmonic mean of the macro
// values. Throws EmptyCorpusError on an empty list.
EvalReport score_corpus(const std::vector<SentenceScore>& per_sentence);

// Table layout with percentages to two decimals.
std::string render_eval_text(const EvalReport& report, const std::string& label);

// --- link file loading and corpus-level evaluation --------------------------

// TSV columns: sentence_id, link_type, head_index, head_text, dep_index,
// dep_text. '#' comments and blank lines ignored.
struct LinkRow {
  std::string sentence_id;
  std::string type;
  int head_index = 0;
  std::string head_text;
  int dep_index = 0;
  std::string dep_text;
  int line_no = 0;
};

std::vector<LinkRow> parse_link_tsv(std::string_view content, const std::string& where);
std::vector<LinkRow> read_link_tsv(const std::string& path);

struct EvalOptions {
  bool strict = true;
  std::function<void(const std::string&)> warn;  // lenient-mode diagnostics
};

// Scores predictions against gold, one score per gold sentence id (in first-
// appearance order). Without alignment records, predictions are over the
// original sentences and ids must match gold ids. With alignment records
// (from the simplify output), prediction ids name simplified records and are
// grouped by their original sentence.
EvalReport evaluate_links(const std::vector<LinkRow>& gold_rows,
                          const std::vector<LinkRow>& pred_rows,
                          const std::vector<SimplifiedSentence>& alignment,
                          const EvalOptions& options = {});

}  // namespace biosimp
