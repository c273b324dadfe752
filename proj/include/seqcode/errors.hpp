#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqcode {

// Syntax error in concrete L1/LOR text. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + what),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

// Violation of the two-sorted discipline; `path` locates the first offender.
class SortError : public std::runtime_error {
public:
  SortError(std::string path, const std::string& what)
      : std::runtime_error("sort error at " + path + ": " + what),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

// Malformed JSON AST: unknown node tag, missing field, wrong shape.
class JsonDecodeError : public std::runtime_error {
public:
  enum class Kind { Malformed, UnknownTag, Arity };
  JsonDecodeError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Schema instantiation refused because the monitoring variable occurs free.
class FreeVariableClash : public std::runtime_error {
public:
  explicit FreeVariableClash(const std::string& var)
      : std::runtime_error("variable '" + var + "' occurs free in the formula"),
        var_(var) {}
  const std::string& var() const { return var_; }

private:
  std::string var_;
};

class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace seqcode
