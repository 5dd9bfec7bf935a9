#include "biosimp/lexicon.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "biosimp/errors.hpp"
#include "biosimp/text.hpp"

namespace biosimp {

namespace {

// Generated from core/data at build time.
constexpr const char* kBuiltinPos =
#include "pos_lexicon.inc"
    ;
constexpr const char* kBuiltinVerbs =
#include "verbs.inc"
    ;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool next_line(std::string_view& rest, std::string_view& line) {
  if (rest.empty()) return false;
  std::size_t nl = rest.find('\n');
  if (nl == std::string_view::npos) {
    line = rest;
    rest = {};
  } else {
    line = rest.substr(0, nl);
    rest.remove_prefix(nl + 1);
  }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(std::string_view word, std::string_view suffix) {
  // Require at least two characters before the suffix so that bare suffix
  // words ("or", "in") never trip the heuristic.
  return word.size() >= suffix.size() + 2 &&
         word.substr(word.size() - suffix.size()) == suffix;
}

constexpr std::array<std::string_view, 6> kNounSuffixes = {"tion", "ity", "ase",
                                                           "in", "or", "er"};
constexpr std::array<std::string_view, 4> kAdjSuffixes = {"al", "ic", "ous", "ive"};

bool noun_by_suffix(std::string_view folded) {
  for (std::string_view s : kNounSuffixes) {
    if (ends_with(folded, s)) return true;
  }
  return false;
}

bool adj_by_suffix(std::string_view folded) {
  for (std::string_view s : kAdjSuffixes) {
    if (ends_with(folded, s)) return true;
  }
  return false;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool pos_tag_from_name(std::string_view name, PosTag& out) {
  if (name == "DET") out = PosTag::kDet;
  else if (name == "NOUN") out = PosTag::kNoun;
  else if (name == "ADJ") out = PosTag::kAdj;
  else if (name == "VERB") out = PosTag::kVerb;
  else if (name == "AUX") out = PosTag::kAux;
  else if (name == "CONJ") out = PosTag::kConj;
  else if (name == "PREP") out = PosTag::kPrep;
  else if (name == "ADV") out = PosTag::kAdv;
  else if (name == "NUM") out = PosTag::kNum;
  else if (name == "OTHER") out = PosTag::kOther;
  else return false;
  return true;
}

bool PlaceholderStyle::is_entity_placeholder(std::string_view token) const {
  if (entity_prefix.empty() || !token.starts_with(entity_prefix)) return false;
  return all_digits(token.substr(entity_prefix.size()));
}

bool PlaceholderStyle::is_np_placeholder(std::string_view token) const {
  if (np_prefix.empty() || !token.starts_with(np_prefix)) return false;
  std::string_view rest = token.substr(np_prefix.size());
  if (!rest.empty() && rest.back() == 's') rest.remove_suffix(1);
  return all_digits(rest);
}

const Lexicons& Lexicons::builtin() {
  static const Lexicons instance = load({}, {});
  return instance;
}

Lexicons Lexicons::load(const std::string& pos_path, const std::string& verbs_path) {
  Lexicons lex;
  if (pos_path.empty()) lex.load_pos(kBuiltinPos);
  else lex.load_pos_file(pos_path);
  if (verbs_path.empty()) lex.load_verbs(kBuiltinVerbs);
  else lex.load_verbs_file(verbs_path);
  return lex;
}

void Lexicons::load_pos(std::string_view content) {
  std::string_view rest = content;
  std::string_view line;
  while (next_line(rest, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::size_t sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) continue;
    std::string word = ascii_lower_copy(trim(line.substr(0, sep)));
    std::string_view tag_name = trim(line.substr(sep + 1));
    PosTag tag;
    if (word.empty() || !pos_tag_from_name(tag_name, tag)) continue;
    pos_.emplace(std::move(word), tag);  // first entry wins
  }
}

void Lexicons::load_verbs(std::string_view content) {
  std::string_view rest = content;
  std::string_view line;
  while (next_line(rest, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    verb_bases_.insert(ascii_lower_copy(line));
  }
}

void Lexicons::load_pos_file(const std::string& path) { load_pos(read_file(path)); }
void Lexicons::load_verbs_file(const std::string& path) { load_verbs(read_file(path)); }

std::optional<PosTag> Lexicons::pos(std::string_view folded_word) const {
  auto it = pos_.find(std::string(folded_word));
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

bool Lexicons::is_verb_base(std::string_view folded_word) const {
  return verb_bases_.count(std::string(folded_word)) > 0;
}

namespace {

// Resolves a word to a tag, trying the exact form, then -es and -s
// inflections against both the POS lexicon and the base-verb list, then the
// suffix heuristics (also on the singular-stripped form).
std::optional<PosTag> resolve_tag(std::string_view folded, const Lexicons& lex) {
  if (auto tag = lex.pos(folded)) return tag;
  if (lex.is_verb_base(folded)) return PosTag::kVerb;

  auto inflected = [&](std::string_view base) -> std::optional<PosTag> {
    if (auto tag = lex.pos(base)) return tag;
    if (lex.is_verb_base(base)) return PosTag::kVerb;
    return std::nullopt;
  };

  std::string_view es_base, s_base;
  if (folded.size() > 2 && folded.ends_with("es")) {
    es_base = folded.substr(0, folded.size() - 2);
    if (auto tag = inflected(es_base)) return tag;
  }
  if (folded.size() > 1 && folded.ends_with('s') && !folded.ends_with("ss")) {
    s_base = folded.substr(0, folded.size() - 1);
    if (auto tag = inflected(s_base)) return tag;
  }

  if (noun_by_suffix(folded)) return PosTag::kNoun;
  if (adj_by_suffix(folded)) return PosTag::kAdj;
  if (!s_base.empty() && noun_by_suffix(s_base)) return PosTag::kNoun;
  if (!s_base.empty() && adj_by_suffix(s_base)) return PosTag::kAdj;
  return std::nullopt;
}

bool is_finite_tag(std::string_view folded, PosTag tag, const Lexicons& lex) {
  if (tag == PosTag::kAux) return true;
  if (tag != PosTag::kVerb) return false;
  // Exact verb entries and base verbs are finite (plain present or listed
  // past form); so are -s/-es inflections of listed bases.
  (void)folded;
  (void)lex;
  return true;
}

}  // namespace

TokenClass classify_token(std::string_view token, const Lexicons& lex,
                          const PlaceholderStyle& style) {
  TokenClass cls;
  if (style.is_placeholder(token)) {
    cls.placeholder = true;
    return cls;
  }
  if (!has_alnum(token)) {
    cls.punct = true;
    return cls;
  }
  std::string folded = ascii_lower_copy(token);
  std::optional<PosTag> tag = resolve_tag(folded, lex);
  if (!tag) return cls;  // unknown: never chunkable, never a verb
  switch (*tag) {
    case PosTag::kDet: cls.det = true; break;
    case PosTag::kNoun: cls.noun = true; break;
    case PosTag::kAdj: cls.adj = true; break;
    case PosTag::kVerb:
    case PosTag::kAux:
      cls.finite_verb = is_finite_tag(folded, *tag, lex);
      break;
    case PosTag::kConj: cls.conj = true; break;
    default: break;
  }
  return cls;
}

bool is_third_person_singular_verb(std::string_view token, const Lexicons& lex) {
  std::string folded = ascii_lower_copy(token);
  if (folded == "is" || folded == "was" || folded == "has" || folded == "does") {
    return true;
  }
  if (folded.size() > 2 && folded.ends_with("es") &&
      lex.is_verb_base(folded.substr(0, folded.size() - 2))) {
    return true;
  }
  if (folded.size() > 1 && folded.ends_with('s') && !folded.ends_with("ss") &&
      lex.is_verb_base(folded.substr(0, folded.size() - 1))) {
    return true;
  }
  return false;
}

bool is_noun_like(std::string_view token, const Lexicons& lex,
                  const PlaceholderStyle& style) {
  if (style.is_placeholder(token)) return true;
  if (!has_alnum(token)) return false;
  std::string folded = ascii_lower_copy(token);
  std::optional<PosTag> tag = resolve_tag(folded, lex);
  return tag == PosTag::kNoun;
}

bool is_finite_verb(std::string_view token, const Lexicons& lex) {
  if (!has_alnum(token)) return false;
  std::string folded = ascii_lower_copy(token);
  std::optional<PosTag> tag = resolve_tag(folded, lex);
  if (!tag) return false;
  return is_finite_tag(folded, *tag, lex);
}

}  // namespace biosimp
