#include "biosimp/config.hpp"

#include <fstream>
#include <sstream>

#include "biosimp/errors.hpp"
#include "biosimp/text.hpp"

namespace biosimp {

namespace {

constexpr const char* kBuiltinIndicators =
#include "section_indicators.inc"
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

std::vector<std::string> parse_indicators(std::string_view content) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, nl == std::string_view::npos ? content.size() - pos : nl - pos);
    line = trim(line);
    if (!line.empty() && line.front() != '#') {
      out.push_back(ascii_upper_copy(line));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

bool parse_bool(std::string_view value, bool& out) {
  std::string v = ascii_lower_copy(value);
  if (v == "1" || v == "true" || v == "on" || v == "yes") out = true;
  else if (v == "0" || v == "false" || v == "off" || v == "no") out = false;
  else return false;
  return true;
}

bool parse_int(std::string_view value, int& out) {
  try {
    std::size_t used = 0;
    int parsed = std::stoi(std::string(value), &used);
    if (used != value.size()) return false;
    out = parsed;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

const std::vector<std::string>& default_section_indicators() {
  static const std::vector<std::string> indicators = parse_indicators(kBuiltinIndicators);
  return indicators;
}

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig config;
  config.section_indicators = default_section_indicators();
  return config;
}

Lexicons PipelineConfig::load_lexicons() const {
  if (pos_lexicon_path.empty() && verb_lexicon_path.empty()) {
    return Lexicons::builtin();
  }
  return Lexicons::load(pos_lexicon_path, verb_lexicon_path);
}

std::vector<std::string> load_indicator_file(const std::string& path) {
  return parse_indicators(read_file(path));
}

bool oracle_choice_from_name(std::string_view name, OracleChoice& out) {
  std::string v = ascii_lower_copy(name);
  if (v == "heuristic") out = OracleChoice::kHeuristic;
  else if (v == "external") out = OracleChoice::kExternal;
  else if (v == "constant") out = OracleChoice::kConstant;
  else return false;
  return true;
}

const char* oracle_choice_name(OracleChoice choice) {
  switch (choice) {
    case OracleChoice::kHeuristic: return "heuristic";
    case OracleChoice::kExternal: return "external";
    case OracleChoice::kConstant: return "constant";
  }
  return "?";
}

void apply_config_text(PipelineConfig& config, std::string_view content,
                       const std::string& where) {
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
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(where + ":" + std::to_string(line_no), "expected key = value");
    }
    std::string key = ascii_lower_copy(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));

    const auto bad_value = [&]() {
      throw ParseError(where + ":" + std::to_string(line_no),
                       "bad value for " + key + ": '" + value + "'");
    };

    if (key == "strip_parentheticals") {
      if (!parse_bool(value, config.strip_parentheticals)) bad_value();
    } else if (key == "split_threshold_words") {
      if (!parse_int(value, config.split_threshold_words) ||
          config.split_threshold_words < 1) {
        bad_value();
      }
    } else if (key == "split_min_commas") {
      if (!parse_int(value, config.split_min_commas) || config.split_min_commas < 1) {
        bad_value();
      }
    } else if (key == "gazetteer") {
      config.gazetteer_path = value;
    } else if (key == "oracle") {
      if (!oracle_choice_from_name(value, config.oracle)) bad_value();
    } else if (key == "oracle_cmd") {
      config.oracle_cmd = value;
    } else if (key == "oracle_timeout_ms") {
      int ms = 0;
      if (!parse_int(value, ms) || ms < 1) bad_value();
      config.oracle_timeout = std::chrono::milliseconds(ms);
    } else if (key == "oracle_pool") {
      if (!parse_int(value, config.oracle_pool) || config.oracle_pool < 1) bad_value();
    } else if (key == "entity_prefix") {
      if (value.empty()) bad_value();
      config.placeholders.entity_prefix = value;
    } else if (key == "np_prefix") {
      if (value.empty()) bad_value();
      config.placeholders.np_prefix = value;
    } else if (key == "pos_lexicon") {
      config.pos_lexicon_path = value;
    } else if (key == "verb_lexicon") {
      config.verb_lexicon_path = value;
    } else if (key == "section_indicator_file") {
      config.section_indicator_path = value;
      config.section_indicators = load_indicator_file(value);
    } else {
      throw ParseError(where + ":" + std::to_string(line_no), "unknown key: " + key);
    }
  }
}

void apply_config_file(PipelineConfig& config, const std::string& path) {
  apply_config_text(config, read_file(path), path);
}

}  // namespace biosimp
