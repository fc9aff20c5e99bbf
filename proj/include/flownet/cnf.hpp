#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace flownet {

// Literal i > 0 is variable i, -i its negation; variables are 1-based.
using Literal = int;
using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;

  // Throws InputError on a zero literal or a variable out of range.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;  // index 1..n
  int occurrences(Literal literal) const;
};

// DIMACS CNF ("p cnf n m", clauses terminated by 0). Clauses with one or two
// literals are padded by repeating their last literal; longer ones are
// rejected.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

}  // namespace flownet
