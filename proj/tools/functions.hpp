#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specfun/types.hpp"

namespace specfun::cli {

/// Named arguments of one evaluation. Numeric arguments are complex; `kind`
/// is the only string argument (trig-deriv).
struct Arguments {
  std::map<std::string, Complex> values;
  std::string kind;
  bool exclude_pole = false;

  Complex get(const std::string& name) const { return values.at(name); }
  int get_int(const std::string& name) const;
  double get_real(const std::string& name) const;
};

struct FunctionInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> required;
  std::map<std::string, Complex> defaults;  // optional arguments
  std::vector<std::string> integer_args;    // must be real integers
  std::vector<std::string> real_args;       // must have zero imaginary part
  bool needs_kind = false;
  std::function<EvalResult(const Arguments&, const QuadratureSpec&)> evaluate;
};

/// Every function reachable from `eval` and `table`, sorted by name.
const std::vector<FunctionInfo>& function_table();
const FunctionInfo* find_function(const std::string& name);

/// Thrown for malformed or missing command-line input (exit status 64).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "RE" or "RE,IM".
Complex parse_complex(const std::string& text);

/// Fills defaults and checks presence and integrality of every argument.
/// Raises UsageError.
void validate_arguments(const FunctionInfo& f, Arguments& args);

}  // namespace specfun::cli
