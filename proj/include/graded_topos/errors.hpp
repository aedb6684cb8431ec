#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graded_topos {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input data (bad grade, non-total table, ...).
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& field)
      : Error("schema error: " + field) {}
};

class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t position, const std::string& what)
      : Error("parse error in " + path + " at " + std::to_string(position) +
              ": " + what),
        path_(std::move(path)),
        position_(position) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string path_;
  std::size_t position_;
};

class MixedUniverse : public Error {
 public:
  explicit MixedUniverse(const std::string& where)
      : Error("fuzzy sets or maps over different universes: " + where) {}
};

class MixedCarrier : public Error {
 public:
  explicit MixedCarrier(const std::string& where)
      : Error("frame homomorphisms are not composable: " + where) {}
};

class MixedStructure : public Error {
 public:
  explicit MixedStructure(const std::string& where)
      : Error("system morphisms are not composable: " + where) {}
};

/// Topology closure or enumeration grew beyond its configured cap.
class Overflow : public Error {
 public:
  explicit Overflow(const std::string& what) : Error("overflow: " + what) {}
};

class NotContinuous : public Error {
 public:
  explicit NotContinuous(const std::string& what)
      : Error("map is not continuous: " + what) {}
};

/// Hom enumeration into the grade chain found no point.
class NoPoints : public Error {
 public:
  explicit NoPoints(const std::string& what) : Error("no points: " + what) {}
};

class GradeSetTooSmall : public Error {
 public:
  explicit GradeSetTooSmall(const std::string& what)
      : Error("grade set too small: " + what) {}
};

class EmptyPoints : public Error {
 public:
  EmptyPoints() : Error("system has an empty point set") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArityMismatch : public Error {
 public:
  explicit ArityMismatch(const std::string& symbol)
      : Error("arity mismatch for symbol '" + symbol + "'"), symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(unsigned variable)
      : Error("unbound variable x" + std::to_string(variable)) {}
};

class UndeclaredSymbol : public Error {
 public:
  explicit UndeclaredSymbol(const std::string& symbol)
      : Error("undeclared symbol '" + symbol + "'") {}
};

class CaptureViolation : public Error {
 public:
  explicit CaptureViolation(unsigned variable)
      : Error("substitution would capture x" + std::to_string(variable)),
        variable_(variable) {}

  unsigned variable() const noexcept { return variable_; }

 private:
  unsigned variable_;
};

}  // namespace graded_topos
