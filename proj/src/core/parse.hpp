#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "expr.hpp"

namespace ppsym {

struct ParseOptions {
  /// Expand r and theta to sqrt(y^2+z^2) and arctan2(z, y).
  bool ppwave_chart = true;
  /// Reject identifiers that are neither in `symbols` nor chart coordinates.
  bool strict = false;
  std::set<std::string> symbols;
  /// Declared function arities; calls with a different argument count are rejected.
  std::map<std::string, int> functions;
};

class ParseError : public std::runtime_error {
 public:
  enum class Reason { Syntax, UnknownIdentifier, Arity };
  ParseError(Reason reason, std::size_t offset, const std::string& msg);
  Reason reason() const { return reason_; }
  /// 1-based character position of the offending token (length + 1 at end of input).
  std::size_t offset() const { return offset_; }

 private:
  Reason reason_;
  std::size_t offset_;
};

Expr parse(std::string_view source, const ParseOptions& options = {});

/// Text form accepted back by parse(); DerivApply prints as Derivative[i,j,..](F)(args).
std::string to_string(const Expr& e);

}  // namespace ppsym
