#pragma once

#include <stdexcept>
#include <string>

namespace biosimp {

// Base class for every error the library raises on purpose. Anything else
// escaping the library is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MissingFileError : public Error {
 public:
  explicit MissingFileError(const std::string& path)
      : Error("cannot open file: " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class EmptyGazetteerError : public Error {
 public:
  explicit EmptyGazetteerError(const std::string& path)
      : Error("gazetteer has no entries: " + path) {}
};

class UnknownPlaceholderError : public Error {
 public:
  UnknownPlaceholderError(const std::string& token, const std::string& sentence_id)
      : Error("placeholder token '" + token + "' has no table entry (sentence " +
              sentence_id + ")"),
        token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class OracleSpawnError : public Error {
 public:
  explicit OracleSpawnError(const std::string& detail)
      : Error("cannot start clausehood oracle: " + detail) {}
};

class AlignmentMismatchError : public Error {
 public:
  explicit AlignmentMismatchError(const std::string& detail)
      : Error("alignment mismatch: " + detail) {}
};

class DegenerateCorpusError : public Error {
 public:
  explicit DegenerateCorpusError(const std::string& detail)
      : Error("degenerate corpus: " + detail) {}
};

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("empty corpus") {}
};

// Malformed input files (corpus lines, link TSV rows, config).
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& detail)
      : Error(where + ": " + detail) {}
};

}  // namespace biosimp
