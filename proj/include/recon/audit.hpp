#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "recon/matrix.hpp"
#include "recon/rational.hpp"

namespace recon {

// Query-audit log, one statement per line ('#' starts a comment):
//
//   update <neighbour>
//   sum <adversary> <neighbour>[:<version>] ... [= <rational>]
//
// Identifiers are arbitrary whitespace-free tokens. Versions follow the lazy
// rule of AdversarialKnowledge; an explicit version must equal the one that
// rule assigns, otherwise the line is rejected.

struct AuditTerm {
  std::size_t neighbour = 0;  // index into AuditLog::neighbours
  std::size_t version = 0;
};

struct AuditSummation {
  std::size_t line = 0;
  std::string adversary;
  std::vector<AuditTerm> terms;  // sorted by neighbour
  std::optional<Rational> sum;
};

struct AuditLog {
  std::vector<std::string> neighbours;  // first-appearance order
  std::vector<AuditSummation> summations;
};

/// Throws ParseError (see graph.hpp) carrying the offending line number.
AuditLog parse_audit(std::istream& in);
AuditLog parse_audit_file(const std::string& path);

struct AuditLeak {
  std::string neighbour;
  std::size_t version = 0;
  std::vector<Rational> coefficients;  // one per summation, in log order
  std::optional<Rational> value;       // when every summation it uses has a sum
};

struct AuditReport {
  RationalMatrix system;  // t x (n * t), column nu * t + version
  std::vector<AuditLeak> leaks;
  /// False when the summations that carry sums contradict each other; leaked
  /// values are then withheld.
  bool consistent = true;
  std::size_t summations_with_sums = 0;
};

AuditReport analyse_audit(const AuditLog& log);

void print_audit_report(std::ostream& out, const AuditLog& log, const AuditReport& report);

}  // namespace recon
