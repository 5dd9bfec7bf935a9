#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include "biosimp/lexicon.hpp"
#include "biosimp/model.hpp"
#include "biosimp/text.hpp"

namespace biosimp {

enum class Verdict { kSentence, kNotSentence };

// Decides whether a candidate text stands as a complete sentence. Concurrent
// judge() calls must be safe, and the verdict may depend only on the text.
class ClausehoodOracle {
 public:
  virtual ~ClausehoodOracle() = default;
  virtual Verdict judge(const std::string& text) = 0;
};

// Built-in approximation: a finite verb with a noun-like token somewhere
// before it.
class HeuristicOracle : public ClausehoodOracle {
 public:
  explicit HeuristicOracle(Lexicons lexicons = Lexicons::builtin(),
                           PlaceholderStyle style = {});
  Verdict judge(const std::string& text) override;

 private:
  Lexicons lexicons_;
  PlaceholderStyle style_;
};

// Fixed verdict, for tests and for disabling splitting behaviourally.
class ConstantOracle : public ClausehoodOracle {
 public:
  explicit ConstantOracle(Verdict verdict) : verdict_(verdict) {}
  Verdict judge(const std::string&) override { return verdict_; }

 private:
  Verdict verdict_;
};

Verdict judge_clausehood(const std::string& text, ClausehoodOracle& oracle);

// A comma-delimited segment; commas themselves belong to no clause.
struct Clause {
  std::string text;
  Span orig_span;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Splits at comma tokens that are not enclosed in parentheses or brackets.
std::vector<Clause> split_on_commas(const Sentence& sentence);

struct SplitConfig {
  int threshold_words = 35;
  int min_commas = 2;
};

// One emitted unit of a split, with provenance. `period_appended` marks the
// terminal "." that was added for the clausehood test.
struct SplitUnit {
  std::vector<AlignedToken> tokens;
  bool period_appended = false;
};

// Accumulates clauses left to right and emits each accumulator the oracle
// accepts as a sentence. Returns a single unit holding the input tokens when
// the trigger condition fails or no accumulation is ever accepted.
std::vector<SplitUnit> split_sentence_aligned(const std::vector<AlignedToken>& tokens,
                                              const SplitConfig& config,
                                              ClausehoodOracle& oracle);

std::vector<SimplifiedSentence> split_sentence(const Sentence& sentence,
                                               const SplitConfig& config,
                                               ClausehoodOracle& oracle);

}  // namespace biosimp
