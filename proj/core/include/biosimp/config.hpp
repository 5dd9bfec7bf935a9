#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "biosimp/lexicon.hpp"

namespace biosimp {

enum class OracleChoice { kHeuristic, kExternal, kConstant };

// Everything the pipeline needs that is not per-sentence data. Values mirror
// the `key = value` config file; command-line flags override the file.
struct PipelineConfig {
  std::vector<std::string> section_indicators;  // uppercased phrases
  bool strip_parentheticals = true;

  int split_threshold_words = 35;
  int split_min_commas = 2;

  std::string gazetteer_path;
  OracleChoice oracle = OracleChoice::kHeuristic;
  std::string oracle_cmd;
  std::chrono::milliseconds oracle_timeout{10'000};
  int oracle_pool = 1;
  bool constant_oracle_verdict = false;  // only for oracle = constant

  PlaceholderStyle placeholders;

  // Empty path = use the compiled-in copy of the shipped data file.
  std::string pos_lexicon_path;
  std::string verb_lexicon_path;
  std::string section_indicator_path;

  static PipelineConfig defaults();

  // Loads the lexicons this config names (or the built-in ones).
  Lexicons load_lexicons() const;
};

// Default section indicator phrases (RESULTS, CONCLUSION, ...).
const std::vector<std::string>& default_section_indicators();

// Parses `key = value` lines ('#' comments, blank lines ignored) into an
// existing config. Unknown keys raise ParseError.
void apply_config_file(PipelineConfig& config, const std::string& path);
void apply_config_text(PipelineConfig& config, std::string_view content,
                       const std::string& where);

// One indicator phrase per line, '#' comments; entries are uppercased.
std::vector<std::string> load_indicator_file(const std::string& path);

bool oracle_choice_from_name(std::string_view name, OracleChoice& out);
const char* oracle_choice_name(OracleChoice choice);

}  // namespace biosimp
