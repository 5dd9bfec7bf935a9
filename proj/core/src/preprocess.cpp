#include "biosimp/preprocess.hpp"

#include <algorithm>

namespace biosimp {

namespace {

std::string range_text(const TaggedText& text, const TokenRange& range) {
  std::u32string chars;
  for (std::size_t i = range.begin; i < range.end; ++i) chars.push_back(text[i].ch);
  return utf8::encode(chars);
}

bool range_all_alpha(const TaggedText& text, const TokenRange& range) {
  if (range.begin >= range.end) return false;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (!is_alpha_cp(text[i].ch)) return false;
  }
  return true;
}

// Original-coordinate span of a tagged range (synthetic chars skipped).
Span orig_span(const TaggedText& text, std::size_t begin, std::size_t end) {
  int lo = -1, hi = -1;
  for (std::size_t i = begin; i < end; ++i) {
    if (text[i].orig == TaggedChar::kSynthetic) continue;
    if (lo < 0) lo = text[i].orig;
    hi = text[i].orig + 1;
  }
  if (lo < 0) return {0, 0};
  return {lo, hi};
}

void erase_and_tidy(TaggedText& text, std::size_t begin, std::size_t end) {
  text.erase(text.begin() + begin, text.begin() + end);
  bool space_before = begin > 0 && is_space_cp(text[begin - 1].ch);
  bool space_after = begin < text.size() && is_space_cp(text[begin].ch);
  if (space_before && space_after) {
    text.erase(text.begin() + begin);
  } else if (!space_before && !space_after && begin > 0 && begin < text.size()) {
    text.insert(text.begin() + begin, {U' ', TaggedChar::kSynthetic});
  }
}

void trim_edges(TaggedText& text) {
  while (!text.empty() && is_space_cp(text.back().ch)) text.pop_back();
  std::size_t lead = 0;
  while (lead < text.size() && is_space_cp(text[lead].ch)) ++lead;
  text.erase(text.begin(), text.begin() + lead);
}

}  // namespace

bool strip_section_indicator_tagged(TaggedText& text,
                                    const std::vector<std::string>& indicators,
                                    PreprocessRecord& record) {
  std::vector<TokenRange> ranges = token_ranges(text);
  for (std::size_t k = 1; k <= 3 && k < ranges.size(); ++k) {
    bool alphabetic = true;
    std::string joined;
    for (std::size_t i = 0; i < k; ++i) {
      if (!range_all_alpha(text, ranges[i])) {
        alphabetic = false;
        break;
      }
      if (i > 0) joined += ' ';
      joined += ascii_upper_copy(range_text(text, ranges[i]));
    }
    if (!alphabetic) break;  // longer prefixes cannot be alphabetic either
    if (range_text(text, ranges[k]) != ":") continue;
    if (std::find(indicators.begin(), indicators.end(), joined) == indicators.end()) {
      continue;
    }
    record.removed_spans.emplace_back(orig_span(text, ranges[0].begin, ranges[k].end),
                                      RemovalReason::kSectionIndicator);
    erase_and_tidy(text, ranges[0].begin, ranges[k].end);
    trim_edges(text);
    record.changed = true;
    return true;
  }
  return false;
}

bool strip_parentheticals_tagged(TaggedText& text, PreprocessRecord& record) {
  // Find outermost balanced groups; any mismatch or leftover opener means
  // the sentence is left alone.
  std::vector<std::pair<char32_t, std::size_t>> stack;
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  for (std::size_t i = 0; i < text.size(); ++i) {
    char32_t c = text[i].ch;
    if (c == U'(' || c == U'[') {
      stack.emplace_back(c, i);
    } else if (c == U')' || c == U']') {
      if (stack.empty()) return false;
      char32_t open = stack.back().first;
      if ((c == U')' && open != U'(') || (c == U']' && open != U'[')) return false;
      std::size_t begin = stack.back().second;
      stack.pop_back();
      if (stack.empty()) groups.emplace_back(begin, i + 1);
    }
  }
  if (!stack.empty() || groups.empty()) return false;

  // Guard: removal must leave at least one alphabetic character.
  bool alpha_left = false;
  std::size_t g = 0;
  for (std::size_t i = 0; i < text.size() && !alpha_left; ++i) {
    while (g < groups.size() && i >= groups[g].second) ++g;
    bool inside = g < groups.size() && i >= groups[g].first && i < groups[g].second;
    if (!inside && is_alpha_cp(text[i].ch)) alpha_left = true;
  }
  if (!alpha_left) return false;

  for (const auto& [begin, end] : groups) {
    record.removed_spans.emplace_back(orig_span(text, begin, end),
                                      RemovalReason::kParenthetical);
  }
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    erase_and_tidy(text, it->first, it->second);
  }
  trim_edges(text);
  record.changed = true;
  return true;
}

bool rejoin_hyphen_fragments_tagged(TaggedText& text, PreprocessRecord& record) {
  std::vector<TokenRange> ranges = token_ranges(text);
  struct Snapshot {
    std::string text;
    TokenRange range;
  };
  std::vector<Snapshot> tokens;
  tokens.reserve(ranges.size());
  for (const TokenRange& r : ranges) tokens.push_back({range_text(text, r), r});

  const auto interior_hyphen = [](const std::string& t) {
    std::size_t first = t.find('-');
    return first != std::string::npos && first > 0 && first + 1 < t.size();
  };

  struct Edit {
    std::size_t pos;          // insertion index into `text`
    std::string completion;   // synthetic characters
  };
  std::vector<Edit> edits;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i].text;
    if (t.size() < 2 || !has_alnum(t)) continue;
    if (t.back() == '-') {
      for (std::size_t j = i + 1; j < tokens.size(); ++j) {
        if (!interior_hyphen(tokens[j].text)) continue;
        std::string completion = tokens[j].text.substr(tokens[j].text.rfind('-') + 1);
        edits.push_back({tokens[i].range.end, completion});
        record.hyphen_rewrites.push_back({t, tokens[j].text, t + completion});
        break;
      }
    } else if (t.front() == '-') {
      for (std::size_t j = i; j-- > 0;) {
        if (!interior_hyphen(tokens[j].text)) continue;
        std::string completion = tokens[j].text.substr(0, tokens[j].text.find('-'));
        edits.push_back({tokens[i].range.begin, completion});
        record.hyphen_rewrites.push_back({t, tokens[j].text, completion + t});
        break;
      }
    }
  }
  if (edits.empty()) return false;

  std::sort(edits.begin(), edits.end(),
            [](const Edit& a, const Edit& b) { return a.pos > b.pos; });
  for (const Edit& e : edits) {
    TaggedText inserted;
    for (char32_t cp : utf8::decode(e.completion)) {
      inserted.push_back({cp, TaggedChar::kSynthetic});
    }
    text.insert(text.begin() + e.pos, inserted.begin(), inserted.end());
  }
  record.changed = true;
  return true;
}

bool preprocess_tagged(TaggedText& text, const PipelineConfig& config,
                       PreprocessRecord& record) {
  bool changed = strip_section_indicator_tagged(text, config.section_indicators, record);
  if (config.strip_parentheticals) {
    changed |= strip_parentheticals_tagged(text, record);
  }
  changed |= rejoin_hyphen_fragments_tagged(text, record);
  record.changed = changed;
  return changed;
}

namespace {

PreprocessResult wrap(const Sentence& sentence, PreprocessRecord record,
                      const TaggedText& tagged, bool changed) {
  PreprocessResult out;
  out.record = std::move(record);
  if (!changed) {
    out.sentence = sentence;
  } else {
    out.sentence = make_sentence(sentence.id,
                                 detokenize_aligned(tokenize_tagged(tagged)));
  }
  return out;
}

}  // namespace

PreprocessResult strip_section_indicator(const Sentence& sentence,
                                         const PipelineConfig& config) {
  TaggedText tagged = tag_text(sentence.text);
  PreprocessRecord record;
  bool changed = strip_section_indicator_tagged(tagged, config.section_indicators, record);
  record.changed = changed;
  return wrap(sentence, std::move(record), tagged, changed);
}

PreprocessResult strip_parentheticals(const Sentence& sentence) {
  TaggedText tagged = tag_text(sentence.text);
  PreprocessRecord record;
  bool changed = strip_parentheticals_tagged(tagged, record);
  record.changed = changed;
  return wrap(sentence, std::move(record), tagged, changed);
}

PreprocessResult rejoin_hyphen_fragments(const Sentence& sentence) {
  TaggedText tagged = tag_text(sentence.text);
  PreprocessRecord record;
  bool changed = rejoin_hyphen_fragments_tagged(tagged, record);
  record.changed = changed;
  return wrap(sentence, std::move(record), tagged, changed);
}

PreprocessResult preprocess_sentence(const Sentence& sentence,
                                     const PipelineConfig& config) {
  TaggedText tagged = tag_text(sentence.text);
  PreprocessRecord record;
  bool changed = preprocess_tagged(tagged, config, record);
  return wrap(sentence, std::move(record), tagged, changed);
}

}  // namespace biosimp
