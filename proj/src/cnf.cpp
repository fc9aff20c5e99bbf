#include "flownet/cnf.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>

#include "flownet/error.hpp"

namespace flownet {

void CnfFormula::validate() const {
  if (variable_count < 1) throw InputError("formula needs at least one variable");
  for (const Clause& c : clauses) {
    for (Literal l : c) {
      if (l == 0 || std::abs(l) > variable_count) {
        throw InputError("literal " + std::to_string(l) + " out of range");
      }
    }
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const Clause& c : clauses) {
    bool ok = false;
    for (Literal l : c) {
      if (assignment[static_cast<std::size_t>(std::abs(l))] == (l > 0)) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

int CnfFormula::occurrences(Literal literal) const {
  int count = 0;
  for (const Clause& c : clauses) {
    for (Literal l : c) count += l == literal;
  }
  return count;
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool header = false;
  long declared = 0;
  std::vector<Literal> pending;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (header || !(fields >> kind >> f.variable_count >> declared) || kind != "cnf") {
        throw InputError("bad DIMACS problem line");
      }
      header = true;
      continue;
    }
    if (!header) throw InputError("DIMACS clause before problem line");
    std::istringstream all(line);
    std::string token;
    while (all >> token) {
      char* end = nullptr;
      const long l = std::strtol(token.c_str(), &end, 10);
      if (*end != '\0') throw InputError("bad DIMACS literal '" + token + "'");
      if (l != 0) {
        pending.push_back(static_cast<Literal>(l));
        continue;
      }
      if (pending.empty() || pending.size() > 3) {
        throw InputError("clauses must have 1 to 3 literals");
      }
      while (pending.size() < 3) pending.push_back(pending.back());
      f.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
  }
  if (!header) throw InputError("missing DIMACS problem line");
  if (!pending.empty()) throw InputError("unterminated DIMACS clause");
  if (static_cast<long>(f.clauses.size()) != declared) {
    throw InputError("declared " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  f.validate();
  return f;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

}  // namespace flownet
