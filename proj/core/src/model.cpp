#include "biosimp/model.hpp"

namespace biosimp {

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::kPreprocess: return "PREPROCESS";
    case Stage::kEntity: return "ENTITY";
    case Stage::kNounPhrase: return "NP";
    case Stage::kSplit: return "SPLIT";
  }
  return "?";
}

bool stage_from_name(std::string_view name, Stage& out) {
  if (name == "PREPROCESS") out = Stage::kPreprocess;
  else if (name == "ENTITY") out = Stage::kEntity;
  else if (name == "NP") out = Stage::kNounPhrase;
  else if (name == "SPLIT") out = Stage::kSplit;
  else return false;
  return true;
}

std::vector<Stage> StageSet::to_vector() const {
  std::vector<Stage> out;
  for (Stage s : {Stage::kPreprocess, Stage::kEntity, Stage::kNounPhrase, Stage::kSplit}) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

const char* kind_name(PlaceholderKind kind) {
  return kind == PlaceholderKind::kEntity ? "ENTITY" : "NOUN_PHRASE";
}

const char* number_name(Number number) {
  switch (number) {
    case Number::kSingular: return "SINGULAR";
    case Number::kPlural: return "PLURAL";
    case Number::kNotApplicable: return "NA";
  }
  return "?";
}

bool kind_from_name(std::string_view name, PlaceholderKind& out) {
  if (name == "ENTITY") out = PlaceholderKind::kEntity;
  else if (name == "NOUN_PHRASE") out = PlaceholderKind::kNounPhrase;
  else return false;
  return true;
}

bool number_from_name(std::string_view name, Number& out) {
  if (name == "SINGULAR") out = Number::kSingular;
  else if (name == "PLURAL") out = Number::kPlural;
  else if (name == "NA" || name == "NOT_APPLICABLE") out = Number::kNotApplicable;
  else return false;
  return true;
}

const PlaceholderEntry* find_placeholder(const PlaceholderTable& table,
                                         std::string_view token) {
  for (const PlaceholderEntry& e : table) {
    if (e.placeholder == token) return &e;
  }
  if (token.size() > 1 && token.back() == 's') {
    std::string_view stripped = token.substr(0, token.size() - 1);
    for (const PlaceholderEntry& e : table) {
      if (e.placeholder == stripped) return &e;
    }
  }
  return nullptr;
}

}  // namespace biosimp
