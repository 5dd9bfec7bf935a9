#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace biosimp {

enum class PosTag {
  kDet,
  kNoun,
  kAdj,
  kVerb,  // finite verb form listed explicitly (irregular or past)
  kAux,
  kConj,
  kPrep,
  kAdv,
  kNum,
  kOther,
};

bool pos_tag_from_name(std::string_view name, PosTag& out);

// Placeholder token shapes: <entity_prefix><digits> and <np_prefix><digits>[s].
struct PlaceholderStyle {
  std::string entity_prefix = "GENE";
  std::string np_prefix = "NPX";

  bool is_entity_placeholder(std::string_view token) const;
  bool is_np_placeholder(std::string_view token) const;
  bool is_placeholder(std::string_view token) const {
    return is_entity_placeholder(token) || is_np_placeholder(token);
  }
};

// Part-of-speech lexicon plus the base-verb list. Both are flat word lists
// shipped as data files and overridable by path; lookups are ASCII-folded.
class Lexicons {
 public:
  // Compiled-in copies of the shipped data files.
  static const Lexicons& builtin();

  // Loads from the given paths; an empty path keeps the built-in copy of
  // that list.
  static Lexicons load(const std::string& pos_path, const std::string& verbs_path);

  Lexicons() = default;

  void load_pos(std::string_view content);        // lines: word<TAB>TAG
  void load_verbs(std::string_view content);      // lines: base form
  void load_pos_file(const std::string& path);    // MissingFileError on failure
  void load_verbs_file(const std::string& path);

  std::optional<PosTag> pos(std::string_view folded_word) const;
  bool is_verb_base(std::string_view folded_word) const;
  std::size_t pos_size() const { return pos_.size(); }
  std::size_t verb_count() const { return verb_bases_.size(); }

 private:
  std::unordered_map<std::string, PosTag> pos_;
  std::unordered_set<std::string> verb_bases_;
};

// What the rule chunker and the clausehood heuristic need to know about a
// token. Derived from the lexicon, -s/-es inflection of listed bases, and the
// suffix heuristics (-tion -ity -ase -in -or -er noun; -al -ic -ous -ive adj).
struct TokenClass {
  bool placeholder = false;
  bool punct = false;  // no alphanumeric character
  bool det = false;
  bool noun = false;
  bool adj = false;
  bool finite_verb = false;
  bool conj = false;
};

TokenClass classify_token(std::string_view token, const Lexicons& lex,
                          const PlaceholderStyle& style);

// is/was/has/does, or an -s/-es inflection of a listed base verb.
bool is_third_person_singular_verb(std::string_view token, const Lexicons& lex);

// Noun-like for the clausehood heuristic: noun per lexicon or suffix, or a
// placeholder token.
bool is_noun_like(std::string_view token, const Lexicons& lex,
                  const PlaceholderStyle& style);

bool is_finite_verb(std::string_view token, const Lexicons& lex);

}  // namespace biosimp
