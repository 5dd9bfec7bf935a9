#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biosimp/text.hpp"

namespace biosimp {

enum class Stage : std::uint8_t {
  kPreprocess = 0,
  kEntity = 1,
  kNounPhrase = 2,
  kSplit = 3,
};

const char* stage_name(Stage stage);          // "PREPROCESS", "ENTITY", "NP", "SPLIT"
bool stage_from_name(std::string_view name, Stage& out);

// Small value-type set of stage tags.
class StageSet {
 public:
  StageSet() = default;

  void insert(Stage s) { bits_ |= mask(s); }
  void erase(Stage s) { bits_ &= ~mask(s); }
  bool contains(Stage s) const { return bits_ & mask(s); }
  bool empty() const { return bits_ == 0; }

  std::vector<Stage> to_vector() const;

  friend bool operator==(const StageSet&, const StageSet&) = default;

 private:
  static std::uint8_t mask(Stage s) {
    return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(s));
  }
  std::uint8_t bits_ = 0;
};

enum class PlaceholderKind : std::uint8_t { kEntity, kNounPhrase };
enum class Number : std::uint8_t { kSingular, kPlural, kNotApplicable };

const char* kind_name(PlaceholderKind kind);
const char* number_name(Number number);
bool kind_from_name(std::string_view name, PlaceholderKind& out);
bool number_from_name(std::string_view name, Number& out);

// One substitution: the placeholder token as it appears in the output
// (including a plural "s" when attached) and the surface it stands for.
// `orig_span` anchors the surface in the sentence the substitution ran on.
struct PlaceholderEntry {
  std::string placeholder;
  std::string surface;
  Span orig_span;
  PlaceholderKind kind = PlaceholderKind::kEntity;
  Number number = Number::kNotApplicable;

  friend bool operator==(const PlaceholderEntry&, const PlaceholderEntry&) = default;
};

using PlaceholderTable = std::vector<PlaceholderEntry>;

// Looks up a placeholder token; tries the exact token first, then the token
// with a trailing plural "s" stripped. Returns nullptr when absent.
const PlaceholderEntry* find_placeholder(const PlaceholderTable& table,
                                         std::string_view token);

// Per output token, the original-text spans it covers. Entries may be empty
// for synthetic tokens (a period appended by the splitter).
struct AlignmentMap {
  std::vector<std::vector<Span>> token_origins;

  friend bool operator==(const AlignmentMap&, const AlignmentMap&) = default;
};

// Full provenance record for one output sentence of the pipeline.
struct SimplifiedSentence {
  std::string id;        // orig_id plus ".k" suffix, k >= 1
  std::string orig_id;
  std::string orig_text;
  std::string text;
  PlaceholderTable placeholders;
  AlignmentMap alignment;
  StageSet transforms;
};

}  // namespace biosimp
