#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ebnoise {

struct VerifyRow {
  std::string name;
  std::string expected;
  std::string computed;
  std::string tolerance;
  bool pass = false;
  std::string reference;
};

/// Evaluates every published fixture.
std::vector<VerifyRow> verify_fixtures();

/// Prints the table; returns true iff every row passes.
bool print_verify_table(const std::vector<VerifyRow>& rows, std::ostream& out);

}  // namespace ebnoise
