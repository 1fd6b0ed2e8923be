// Command-line front end: expansion, matrix dumps, rank queries, counting,
// the generating-function oracle and the verification suites. All output is
// deterministic; timing goes to stderr unless explicitly requested in the
// document.
#pragma once

#include <iosfwd>
#include <string>

#include "qsym/bigint.hpp"

namespace qsym::cli {

// q = symbolic | rho:<p> | rational:<a>[/<b>]
struct QSpec {
  enum class Kind { symbolic, root_of_unity, rational };
  Kind kind = Kind::symbolic;
  int p = 1;
  Rational value;

  static QSpec parse(const std::string& text);
  std::string str() const;
};

// Exit codes: 0 success / everything verified, 1 verification failure,
// 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsym::cli
