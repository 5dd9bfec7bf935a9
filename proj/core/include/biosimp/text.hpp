#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace biosimp {

// Half-open character range [start, end). Offsets count decoded code points
// of the sentence the span refers to, not bytes.
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool empty() const { return start >= end; }
  bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct Token {
  std::string text;  // UTF-8, exactly the characters at `span`
  Span span;

  friend bool operator==(const Token&, const Token&) = default;
};

// One input sentence. `tokens` is the deterministic decomposition of `text`;
// spans index the code points of `text`.
struct Sentence {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
};

namespace utf8 {

// Lenient decoder: invalid sequences become U+FFFD, one replacement per
// offending byte, so decoding never fails and is deterministic.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

}  // namespace utf8

// Character classes used across the pipeline. Non-ASCII code points count
// as alphabetic unless they fall in a small set of known punctuation and
// symbol ranges; biomedical text is full of Greek letters we must not drop.
bool is_space_cp(char32_t cp);
bool is_alpha_cp(char32_t cp);
bool is_digit_cp(char32_t cp);
bool is_alnum_cp(char32_t cp);

char32_t ascii_lower(char32_t cp);
char32_t ascii_upper(char32_t cp);

// ASCII-folded lowercase copy (non-ASCII left as-is).
std::string ascii_lower_copy(std::string_view text);
std::string ascii_upper_copy(std::string_view text);

// True if any character of the UTF-8 string is alphabetic / alnum.
bool has_alpha(std::string_view text);
bool has_alnum(std::string_view text);

// Splits on whitespace, then detaches . , ; : ! ? ( ) [ ] { } " from word
// edges as separate tokens. Hyphens and apostrophes are never detached, so
// "alpha-" and "Huntington's" stay single tokens.
std::vector<Token> tokenize(std::string_view text);

// Joins token texts with single spaces, except no space before
// . , ; : ! ? ) ] } and no space after ( [ {.
std::string detokenize(const std::vector<Token>& tokens);
std::string detokenize(const std::vector<std::string>& token_texts);

// Substring of a UTF-8 string by code-point span.
std::string substr(std::string_view text, const Span& span);

Sentence make_sentence(std::string id, std::string text);

// --- Alignment-carrying working representation -----------------------------
//
// Pipeline stages transform sentences while tracking, per output token, which
// character ranges of the stage-zero text it came from. Tokens created out of
// thin air (an appended period, the completion of a hyphen fragment) carry no
// origin for the synthetic part.

struct AlignedToken {
  std::string text;
  std::vector<Span> origins;  // disjoint, ascending spans of the original text

  friend bool operator==(const AlignedToken&, const AlignedToken&) = default;
};

// A decoded character plus the offset it occupies in the original sentence,
// or kSynthetic for characters inserted by a transform.
struct TaggedChar {
  char32_t ch;
  int orig;

  static constexpr int kSynthetic = -1;
};

using TaggedText = std::vector<TaggedChar>;

TaggedText tag_text(std::string_view text);

// Token boundaries as index ranges into a tagged character sequence, using
// the same segmentation as tokenize().
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<TokenRange> token_ranges(const TaggedText& text);

// tokenize() over a tagged character sequence; token origins are the maximal
// contiguous runs of original offsets inside the token.
std::vector<AlignedToken> tokenize_tagged(const TaggedText& text);

// Lifts a Sentence's tokens into aligned tokens whose origins are their own
// spans (the identity alignment).
std::vector<AlignedToken> to_aligned(const Sentence& sentence);

std::string detokenize_aligned(const std::vector<AlignedToken>& tokens);

// Appends spans, coalescing a span that starts exactly where the previous one
// ends. Keeps the disjoint-ascending invariant when inputs are ascending.
void append_origin(std::vector<Span>& origins, const Span& span);

// Merged origins of a token range [begin, end).
std::vector<Span> merge_origins(const std::vector<AlignedToken>& tokens,
                                std::size_t begin, std::size_t end);

}  // namespace biosimp
