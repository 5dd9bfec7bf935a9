#pragma once

#include <string>
#include <vector>

#include "biosimp/config.hpp"
#include "biosimp/lexicon.hpp"
#include "biosimp/model.hpp"
#include "biosimp/text.hpp"

namespace biosimp {

// Flat dictionary of known names, matched by exact token sequence.
// Entries containing an uppercase letter or a digit match case-sensitively,
// all-lowercase entries match case-insensitively.
class Gazetteer {
 public:
  struct Entry {
    std::vector<std::string> tokens;
    std::string surface;
    PlaceholderKind kind = PlaceholderKind::kEntity;
    bool case_sensitive = false;
  };

  // One name per line, optional TAB + kind column, '#' comments, duplicates
  // collapsed. Throws MissingFileError / EmptyGazetteerError / ParseError.
  static Gazetteer load(const std::string& path);
  static Gazetteer from_text(std::string_view content, const std::string& where);

  Gazetteer() = default;

  void add(std::string_view name, PlaceholderKind kind = PlaceholderKind::kEntity);
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Entry indices that could start at `token`, longest first.
  std::vector<std::size_t> candidates(std::string_view token) const;
  const Entry& entry(std::size_t i) const { return entries_[i]; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_exact_first_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_folded_first_;
  std::unordered_set<std::string> seen_lines_;
};

Gazetteer load_gazetteer(const std::string& path);

// A gazetteer hit: token-index range [begin, end), including an absorbed
// leading "the"/"a"/"an".
struct EntityMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool absorbed_determiner = false;
  std::string surface;
  PlaceholderKind kind = PlaceholderKind::kEntity;

  friend bool operator==(const EntityMatch&, const EntityMatch&) = default;
};

// Leftmost-longest non-overlapping matching over the token sequence.
std::vector<EntityMatch> find_entity_matches(const std::vector<std::string>& token_texts,
                                             const Gazetteer& gazetteer);
std::vector<EntityMatch> find_entity_matches(const Sentence& sentence,
                                             const Gazetteer& gazetteer);

// Maximal DET? (ADJ|NOUN)* NOUN run of length >= 2. Placeholders, commas,
// conjunctions and finite verbs never appear inside a chunk.
struct NounChunk {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t head = 0;  // index of the final noun

  friend bool operator==(const NounChunk&, const NounChunk&) = default;
};

std::vector<NounChunk> chunk_noun_phrases(const std::vector<std::string>& token_texts,
                                          const Lexicons& lex,
                                          const PlaceholderStyle& style);
std::vector<NounChunk> chunk_noun_phrases(const Sentence& sentence,
                                          const Lexicons& lex = Lexicons::builtin(),
                                          const PlaceholderStyle& style = {});

// Singular iff the token right after the chunk is a third-person-singular
// verb, or the chunk's determiner (own or immediately preceding) is a/an.
Number infer_number(const std::vector<std::string>& token_texts, const NounChunk& chunk,
                    const Lexicons& lex);
Number infer_number(const Sentence& sentence, const NounChunk& chunk,
                    const Lexicons& lex = Lexicons::builtin());

// Replacement over alignment-carrying tokens; `table` gains one entry per
// replacement. Ordinals are per sentence and per occurrence, starting at 1.
std::vector<AlignedToken> replace_entities_aligned(
    const std::vector<AlignedToken>& tokens, const std::vector<EntityMatch>& matches,
    const PlaceholderStyle& style, PlaceholderTable& table);

std::vector<AlignedToken> replace_noun_phrases_aligned(
    const std::vector<AlignedToken>& tokens, const std::vector<NounChunk>& chunks,
    const Lexicons& lex, const PlaceholderStyle& style, PlaceholderTable& table);

struct SubstitutionResult {
  Sentence sentence;
  PlaceholderTable table;
  AlignmentMap alignment;
  bool changed = false;
};

SubstitutionResult replace_entities(const Sentence& sentence,
                                    const std::vector<EntityMatch>& matches,
                                    const PipelineConfig& config);

SubstitutionResult replace_noun_phrases(const Sentence& sentence,
                                        const std::vector<NounChunk>& chunks,
                                        const PipelineConfig& config,
                                        const Lexicons& lex = Lexicons::builtin());

// Expands every placeholder token back to its recorded surface. A token that
// looks like a placeholder but has no table entry raises
// UnknownPlaceholderError.
std::string restore_placeholders(const SimplifiedSentence& sentence,
                                 const PlaceholderStyle& style = {});

}  // namespace biosimp
