#include "biosimp/clause_split.hpp"

#include <algorithm>

namespace biosimp {

HeuristicOracle::HeuristicOracle(Lexicons lexicons, PlaceholderStyle style)
    : lexicons_(std::move(lexicons)), style_(std::move(style)) {}

Verdict HeuristicOracle::judge(const std::string& text) {
  bool seen_noun = false;
  for (const Token& tok : tokenize(text)) {
    if (seen_noun && is_finite_verb(tok.text, lexicons_)) return Verdict::kSentence;
    if (is_noun_like(tok.text, lexicons_, style_)) seen_noun = true;
  }
  return Verdict::kNotSentence;
}

Verdict judge_clausehood(const std::string& text, ClausehoodOracle& oracle) {
  return oracle.judge(text);
}

namespace {

// Delimiter depth contributed by one token's characters.
int depth_delta(std::string_view token, int& depth) {
  for (char c : token) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') depth = std::max(0, depth - 1);
  }
  return depth;
}

bool is_terminal_punct(std::string_view token) {
  return token == "." || token == "!" || token == "?";
}

struct Segmentation {
  // Segments as [begin, end) token ranges; separators[k] is the comma token
  // index between segment k and k+1.
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  std::vector<std::size_t> separators;
  bool degenerate = false;  // empty segment (adjacent top-level commas)
};

template <typename Texts>
Segmentation segment_on_commas(const Texts& texts) {
  Segmentation seg;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    bool top_level_comma = texts[i] == "," && depth == 0;
    depth_delta(texts[i], depth);
    if (top_level_comma) {
      if (i == start) seg.degenerate = true;
      seg.segments.emplace_back(start, i);
      seg.separators.push_back(i);
      start = i + 1;
    }
  }
  if (start == texts.size() && !seg.segments.empty()) seg.degenerate = true;
  seg.segments.emplace_back(start, texts.size());
  return seg;
}

std::vector<std::string> texts_of(const std::vector<AlignedToken>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const AlignedToken& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace

std::vector<Clause> split_on_commas(const Sentence& sentence) {
  std::vector<std::string> texts;
  texts.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) texts.push_back(t.text);

  Segmentation seg = segment_on_commas(texts);
  std::vector<Clause> clauses;
  for (const auto& [begin, end] : seg.segments) {
    if (begin >= end) continue;
    std::vector<std::string> range(texts.begin() + begin, texts.begin() + end);
    clauses.push_back({detokenize(range),
                       {sentence.tokens[begin].span.start,
                        sentence.tokens[end - 1].span.end}});
  }
  return clauses;
}

std::vector<SplitUnit> split_sentence_aligned(const std::vector<AlignedToken>& tokens,
                                              const SplitConfig& config,
                                              ClausehoodOracle& oracle) {
  const std::vector<std::string> texts = texts_of(tokens);

  long words = 0;
  for (const std::string& t : texts) {
    if (has_alnum(t)) ++words;
  }
  Segmentation seg = segment_on_commas(texts);
  long commas = static_cast<long>(seg.separators.size());

  if (words < config.threshold_words || commas < config.min_commas ||
      seg.degenerate) {
    return {{tokens, false}};
  }

  std::vector<SplitUnit> units;
  std::vector<AlignedToken> acc;
  std::size_t pending_comma = 0;  // separator preceding the open accumulator
  bool pending_comma_valid = false;

  for (std::size_t k = 0; k < seg.segments.size(); ++k) {
    if (k > 0) {
      if (!acc.empty()) {
        acc.push_back(tokens[seg.separators[k - 1]]);
      } else {
        pending_comma = seg.separators[k - 1];
        pending_comma_valid = true;
      }
    }
    auto [begin, end] = seg.segments[k];
    acc.insert(acc.end(), tokens.begin() + begin, tokens.begin() + end);

    bool needs_period = acc.empty() || !is_terminal_punct(acc.back().text);
    std::vector<AlignedToken> candidate = acc;
    if (needs_period) candidate.push_back({".", {}});
    if (oracle.judge(detokenize_aligned(candidate)) == Verdict::kSentence) {
      units.push_back({std::move(candidate), needs_period});
      acc.clear();
    }
  }

  if (!acc.empty()) {
    if (units.empty()) return {{tokens, false}};
    // Never-sentential tail folds back into the previous unit, comma-joined.
    SplitUnit& last = units.back();
    if (last.period_appended) {
      last.tokens.pop_back();
      last.period_appended = false;
    }
    if (pending_comma_valid) last.tokens.push_back(tokens[pending_comma]);
    last.tokens.insert(last.tokens.end(), acc.begin(), acc.end());
  }
  return units;
}

std::vector<SimplifiedSentence> split_sentence(const Sentence& sentence,
                                               const SplitConfig& config,
                                               ClausehoodOracle& oracle) {
  std::vector<AlignedToken> tokens = to_aligned(sentence);
  std::vector<SplitUnit> units = split_sentence_aligned(tokens, config, oracle);

  std::vector<SimplifiedSentence> out;
  bool split_happened = units.size() >= 2;
  for (std::size_t k = 0; k < units.size(); ++k) {
    const SplitUnit& unit = units[k];
    SimplifiedSentence s;
    s.id = sentence.id + "." + std::to_string(k + 1);
    s.orig_id = sentence.id;
    s.orig_text = sentence.text;
    if (!split_happened && !unit.period_appended && unit.tokens == tokens) {
      s.text = sentence.text;
    } else {
      s.text = detokenize_aligned(unit.tokens);
    }
    for (const AlignedToken& t : unit.tokens) {
      s.alignment.token_origins.push_back(t.origins);
    }
    if (split_happened) s.transforms.insert(Stage::kSplit);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace biosimp
