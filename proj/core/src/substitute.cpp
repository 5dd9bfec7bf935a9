#include "biosimp/substitute.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "biosimp/errors.hpp"

namespace biosimp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool has_upper_or_digit(std::string_view s) {
  for (char c : s) {
    if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  }
  return false;
}

bool is_absorbable_determiner(std::string_view token) {
  std::string folded = ascii_lower_copy(token);
  return folded == "the" || folded == "a" || folded == "an";
}

std::vector<std::string> texts_of(const Sentence& sentence) {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) out.push_back(t.text);
  return out;
}

std::vector<std::string> texts_of(const std::vector<AlignedToken>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const AlignedToken& t : tokens) out.push_back(t.text);
  return out;
}

Span envelope(const std::vector<Span>& spans) {
  if (spans.empty()) return {0, 0};
  return {spans.front().start, spans.back().end};
}

}  // namespace

void Gazetteer::add(std::string_view name, PlaceholderKind kind) {
  std::string surface(trim(name));
  if (surface.empty()) return;
  if (!seen_lines_.insert(surface).second) return;

  Entry entry;
  entry.surface = surface;
  entry.kind = kind;
  entry.case_sensitive = has_upper_or_digit(surface);
  for (const Token& t : tokenize(surface)) entry.tokens.push_back(t.text);
  if (entry.tokens.empty()) return;

  std::size_t id = entries_.size();
  if (entry.case_sensitive) {
    by_exact_first_[entry.tokens.front()].push_back(id);
  } else {
    by_folded_first_[ascii_lower_copy(entry.tokens.front())].push_back(id);
  }
  entries_.push_back(std::move(entry));
}

std::vector<std::size_t> Gazetteer::candidates(std::string_view token) const {
  std::vector<std::size_t> out;
  if (auto it = by_exact_first_.find(std::string(token)); it != by_exact_first_.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::string folded = ascii_lower_copy(token);
  if (auto it = by_folded_first_.find(folded); it != by_folded_first_.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end(), [this](std::size_t a, std::size_t b) {
    const Entry& ea = entries_[a];
    const Entry& eb = entries_[b];
    if (ea.tokens.size() != eb.tokens.size()) return ea.tokens.size() > eb.tokens.size();
    if (ea.case_sensitive != eb.case_sensitive) return ea.case_sensitive;
    return ea.surface < eb.surface;
  });
  return out;
}

Gazetteer Gazetteer::from_text(std::string_view content, const std::string& where) {
  Gazetteer gaz;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, nl == std::string_view::npos ? content.size() - pos : nl - pos);
    ++line_no;
    if (nl == std::string_view::npos) pos = content.size() + 1;
    else pos = nl + 1;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    PlaceholderKind kind = PlaceholderKind::kEntity;
    std::size_t tab = line.find('\t');
    if (tab != std::string_view::npos) {
      std::string_view kind_col = trim(line.substr(tab + 1));
      line = trim(line.substr(0, tab));
      if (!kind_col.empty() && !kind_from_name(kind_col, kind)) {
        throw ParseError(where + ":" + std::to_string(line_no),
                         "unknown kind column: '" + std::string(kind_col) + "'");
      }
    }
    gaz.add(line, kind);
  }
  if (gaz.size() == 0) throw EmptyGazetteerError(where);
  return gaz;
}

Gazetteer Gazetteer::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), path);
}

Gazetteer load_gazetteer(const std::string& path) { return Gazetteer::load(path); }

std::vector<EntityMatch> find_entity_matches(const std::vector<std::string>& token_texts,
                                             const Gazetteer& gazetteer) {
  std::vector<EntityMatch> matches;
  std::size_t last_end = 0;
  std::size_t i = 0;
  while (i < token_texts.size()) {
    const Gazetteer::Entry* best = nullptr;
    std::size_t best_len = 0;
    for (std::size_t id : gazetteer.candidates(token_texts[i])) {
      const Gazetteer::Entry& entry = gazetteer.entry(id);
      std::size_t len = entry.tokens.size();
      if (len <= best_len || i + len > token_texts.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < len; ++k) {
        const std::string& have = token_texts[i + k];
        const std::string& want = entry.tokens[k];
        if (entry.case_sensitive ? have != want
                                 : ascii_lower_copy(have) != ascii_lower_copy(want)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        best = &entry;
        best_len = len;
      }
    }
    if (!best) {
      ++i;
      continue;
    }
    EntityMatch m;
    m.begin = i;
    m.end = i + best_len;
    m.kind = best->kind;
    if (i > last_end && i > 0 && is_absorbable_determiner(token_texts[i - 1])) {
      m.begin = i - 1;
      m.absorbed_determiner = true;
    }
    std::vector<std::string> range(token_texts.begin() + m.begin,
                                   token_texts.begin() + m.end);
    m.surface = detokenize(range);
    matches.push_back(std::move(m));
    last_end = i + best_len;
    i = last_end;
  }
  return matches;
}

std::vector<EntityMatch> find_entity_matches(const Sentence& sentence,
                                             const Gazetteer& gazetteer) {
  return find_entity_matches(texts_of(sentence), gazetteer);
}

namespace {

struct TokenClassRow {
  TokenClass cls;
  std::string folded;
};

std::vector<TokenClassRow> classify_all(const std::vector<std::string>& token_texts,
                                        const Lexicons& lex,
                                        const PlaceholderStyle& style) {
  std::vector<TokenClassRow> rows;
  rows.reserve(token_texts.size());
  for (const std::string& t : token_texts) {
    rows.push_back({classify_token(t, lex, style), ascii_lower_copy(t)});
  }
  return rows;
}

}  // namespace

std::vector<NounChunk> chunk_noun_phrases(const std::vector<std::string>& token_texts,
                                          const Lexicons& lex,
                                          const PlaceholderStyle& style) {
  std::vector<TokenClassRow> rows = classify_all(token_texts, lex, style);
  std::vector<NounChunk> chunks;
  std::size_t i = 0;
  while (i < rows.size()) {
    const TokenClass& c = rows[i].cls;
    if (!(c.det || c.noun || c.adj)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    std::size_t j = i + (c.det ? 1 : 0);
    while (j < rows.size() && (rows[j].cls.noun || rows[j].cls.adj)) ++j;

    // The run must end at a noun; drop trailing adjectives.
    std::size_t k = j;
    while (k > start && !rows[k - 1].cls.noun) --k;
    if (k > start && k - start >= 2) {
      chunks.push_back({start, k, k - 1});
      i = k;
    } else {
      i = std::max(j, start + 1);
    }
  }
  return chunks;
}

std::vector<NounChunk> chunk_noun_phrases(const Sentence& sentence, const Lexicons& lex,
                                          const PlaceholderStyle& style) {
  return chunk_noun_phrases(texts_of(sentence), lex, style);
}

Number infer_number(const std::vector<std::string>& token_texts, const NounChunk& chunk,
                    const Lexicons& lex) {
  if (chunk.end < token_texts.size() &&
      is_third_person_singular_verb(token_texts[chunk.end], lex)) {
    return Number::kSingular;
  }
  const auto is_a_or_an = [](const std::string& t) {
    std::string folded = ascii_lower_copy(t);
    return folded == "a" || folded == "an";
  };
  if (chunk.begin < token_texts.size() && is_a_or_an(token_texts[chunk.begin])) {
    return Number::kSingular;
  }
  if (chunk.begin > 0 && is_a_or_an(token_texts[chunk.begin - 1])) {
    return Number::kSingular;
  }
  return Number::kPlural;
}

Number infer_number(const Sentence& sentence, const NounChunk& chunk,
                    const Lexicons& lex) {
  return infer_number(texts_of(sentence), chunk, lex);
}

namespace {

// Shared by the entity and noun-phrase paths: replaces disjoint ascending
// token ranges with single placeholder tokens carrying the merged origins.
struct Replacement {
  std::size_t begin;
  std::size_t end;
  std::string placeholder;
  PlaceholderKind kind;
  Number number;
};

std::vector<AlignedToken> apply_replacements(const std::vector<AlignedToken>& tokens,
                                             const std::vector<Replacement>& repls,
                                             PlaceholderTable& table) {
  std::vector<AlignedToken> out;
  out.reserve(tokens.size());
  std::size_t r = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (r < repls.size() && repls[r].begin == i) {
      const Replacement& repl = repls[r];
      std::vector<Span> origins = merge_origins(tokens, repl.begin, repl.end);
      std::vector<std::string> range;
      for (std::size_t k = repl.begin; k < repl.end; ++k) range.push_back(tokens[k].text);

      PlaceholderEntry entry;
      entry.placeholder = repl.placeholder;
      entry.surface = detokenize(range);
      entry.orig_span = envelope(origins);
      entry.kind = repl.kind;
      entry.number = repl.number;
      table.push_back(std::move(entry));

      out.push_back({repl.placeholder, std::move(origins)});
      i = repl.end;
      ++r;
    } else {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace

std::vector<AlignedToken> replace_entities_aligned(
    const std::vector<AlignedToken>& tokens, const std::vector<EntityMatch>& matches,
    const PlaceholderStyle& style, PlaceholderTable& table) {
  std::vector<Replacement> repls;
  int ordinal = 1;
  for (const EntityMatch& m : matches) {
    repls.push_back({m.begin, m.end, style.entity_prefix + std::to_string(ordinal++),
                     m.kind, Number::kNotApplicable});
  }
  return apply_replacements(tokens, repls, table);
}

std::vector<AlignedToken> replace_noun_phrases_aligned(
    const std::vector<AlignedToken>& tokens, const std::vector<NounChunk>& chunks,
    const Lexicons& lex, const PlaceholderStyle& style, PlaceholderTable& table) {
  std::vector<std::string> texts = texts_of(tokens);
  std::vector<Replacement> repls;
  int ordinal = 1;
  for (const NounChunk& chunk : chunks) {
    Number number = infer_number(texts, chunk, lex);
    std::string placeholder = style.np_prefix + std::to_string(ordinal++);
    if (number == Number::kPlural) placeholder += 's';
    repls.push_back({chunk.begin, chunk.end, std::move(placeholder),
                     PlaceholderKind::kNounPhrase, number});
  }
  return apply_replacements(tokens, repls, table);
}

namespace {

SubstitutionResult wrap_substitution(const Sentence& sentence,
                                     std::vector<AlignedToken> new_tokens,
                                     PlaceholderTable table, bool changed) {
  SubstitutionResult out;
  out.table = std::move(table);
  out.changed = changed;
  if (!changed) {
    out.sentence = sentence;
    for (const Token& t : sentence.tokens) {
      out.alignment.token_origins.push_back({t.span});
    }
    return out;
  }
  out.sentence = make_sentence(sentence.id, detokenize_aligned(new_tokens));
  for (const AlignedToken& t : new_tokens) {
    out.alignment.token_origins.push_back(t.origins);
  }
  return out;
}

}  // namespace

SubstitutionResult replace_entities(const Sentence& sentence,
                                    const std::vector<EntityMatch>& matches,
                                    const PipelineConfig& config) {
  PlaceholderTable table;
  std::vector<AlignedToken> tokens =
      replace_entities_aligned(to_aligned(sentence), matches, config.placeholders, table);
  return wrap_substitution(sentence, std::move(tokens), std::move(table),
                           !matches.empty());
}

SubstitutionResult replace_noun_phrases(const Sentence& sentence,
                                        const std::vector<NounChunk>& chunks,
                                        const PipelineConfig& config,
                                        const Lexicons& lex) {
  PlaceholderTable table;
  std::vector<AlignedToken> tokens = replace_noun_phrases_aligned(
      to_aligned(sentence), chunks, lex, config.placeholders, table);
  return wrap_substitution(sentence, std::move(tokens), std::move(table),
                           !chunks.empty());
}

std::string restore_placeholders(const SimplifiedSentence& sentence,
                                 const PlaceholderStyle& style) {
  std::vector<std::string> out_texts;
  for (const Token& tok : tokenize(sentence.text)) {
    if (const PlaceholderEntry* entry = find_placeholder(sentence.placeholders, tok.text)) {
      for (const Token& surface_tok : tokenize(entry->surface)) {
        out_texts.push_back(surface_tok.text);
      }
      continue;
    }
    if (style.is_placeholder(tok.text)) {
      throw UnknownPlaceholderError(tok.text, sentence.id);
    }
    out_texts.push_back(tok.text);
  }
  return detokenize(out_texts);
}

}  // namespace biosimp
