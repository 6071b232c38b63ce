#include "recon/audit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "recon/graph.hpp"
#include "recon/linalg.hpp"

namespace recon {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) {
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::optional<std::size_t> parse_index(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

class Tracker {
 public:
  std::size_t intern(const std::string& label) {
    const auto [it, inserted] = index_.try_emplace(label, labels_.size());
    if (inserted) {
      labels_.push_back(label);
      version_.push_back(0);
      dirty_.push_back(false);
      observed_.push_back(false);
    }
    return it->second;
  }

  void update(std::size_t nu) { dirty_[nu] = true; }

  // Version the next observation of nu references; commit() applies it.
  std::size_t pending_version(std::size_t nu) const {
    return version_[nu] + ((dirty_[nu] && observed_[nu]) ? 1 : 0);
  }

  void commit(std::size_t nu) {
    version_[nu] = pending_version(nu);
    dirty_[nu] = false;
    observed_[nu] = true;
  }

  std::vector<std::string> take_labels() { return std::move(labels_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> version_;
  std::vector<bool> dirty_;
  std::vector<bool> observed_;
};

}  // namespace

AuditLog parse_audit(std::istream& in) {
  AuditLog log;
  Tracker tracker;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    const auto tokens = tokenize(text);
    if (tokens.empty()) {
      continue;
    }
    if (tokens[0] == "update") {
      if (tokens.size() != 2) {
        throw ParseError(number, "expected 'update <neighbour>'");
      }
      tracker.update(tracker.intern(tokens[1]));
      continue;
    }
    if (tokens[0] != "sum") {
      throw ParseError(number, "unknown statement '" + tokens[0] + "'");
    }
    if (tokens.size() < 3) {
      throw ParseError(number, "expected 'sum <adversary> <neighbour>[:<version>] ...'");
    }

    AuditSummation summation{number, tokens[1], {}, std::nullopt};
    std::vector<std::pair<std::size_t, std::optional<std::size_t>>> requested;
    std::size_t i = 2;
    for (; i < tokens.size() && tokens[i] != "="; ++i) {
      const auto& token = tokens[i];
      const auto colon = token.find(':');
      const std::string label = token.substr(0, colon);
      if (label.empty()) {
        throw ParseError(number, "empty neighbour identifier in '" + token + "'");
      }
      std::optional<std::size_t> version;
      if (colon != std::string::npos) {
        version = parse_index(token.substr(colon + 1));
        if (!version) {
          throw ParseError(number, "bad version in '" + token + "'");
        }
      }
      requested.emplace_back(tracker.intern(label), version);
    }
    if (requested.empty()) {
      throw ParseError(number, "summation over no neighbours");
    }
    if (i < tokens.size()) {
      if (i + 2 != tokens.size()) {
        throw ParseError(number, "expected exactly one rational after '='");
      }
      try {
        summation.sum = parse_rational(tokens[i + 1]);
      } catch (const std::invalid_argument&) {
        throw ParseError(number, "bad rational '" + tokens[i + 1] + "'");
      }
    }

    std::sort(requested.begin(), requested.end());
    for (std::size_t j = 1; j < requested.size(); ++j) {
      if (requested[j].first == requested[j - 1].first) {
        throw ParseError(number, "neighbour listed twice in one summation");
      }
    }
    for (const auto& [nu, version] : requested) {
      const std::size_t expected = tracker.pending_version(nu);
      if (version && *version != expected) {
        std::ostringstream message;
        message << "version mismatch for neighbour: expected " << expected << ", got "
                << *version;
        throw ParseError(number, message.str());
      }
      tracker.commit(nu);
      summation.terms.push_back({nu, expected});
    }
    log.summations.push_back(std::move(summation));
  }
  log.neighbours = tracker.take_labels();
  return log;
}

AuditLog parse_audit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open audit file " + path);
  }
  try {
    return parse_audit(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

AuditReport analyse_audit(const AuditLog& log) {
  const std::size_t t = log.summations.size();
  const std::size_t n = log.neighbours.size();
  AuditReport report;
  report.system = RationalMatrix(t, n * t);
  for (std::size_t tau = 0; tau < t; ++tau) {
    for (const auto& term : log.summations[tau].terms) {
      report.system(tau, term.neighbour * t + term.version) = 1;
    }
    if (log.summations[tau].sum) {
      ++report.summations_with_sums;
    }
  }

  // Consistency of the summations that carry sums: rank([A_s | Theta_s]) == rank(A_s).
  std::vector<std::size_t> with_sums;
  for (std::size_t tau = 0; tau < t; ++tau) {
    if (log.summations[tau].sum) {
      with_sums.push_back(tau);
    }
  }
  if (!with_sums.empty()) {
    RationalMatrix sub(with_sums.size(), n * t);
    RationalMatrix augmented(with_sums.size(), n * t + 1);
    for (std::size_t r = 0; r < with_sums.size(); ++r) {
      for (std::size_t c = 0; c < n * t; ++c) {
        sub(r, c) = report.system(with_sums[r], c);
        augmented(r, c) = sub(r, c);
      }
      augmented(r, n * t) = *log.summations[with_sums[r]].sum;
    }
    report.consistent = bareiss_rank(sub) == bareiss_rank(augmented);
  }

  for (auto& solution : partial_solutions(report.system)) {
    AuditLeak leak;
    leak.neighbour = log.neighbours[solution.variable_index / t];
    leak.version = solution.variable_index % t;
    bool computable = report.consistent;
    Rational value = 0;
    for (std::size_t tau = 0; tau < t && computable; ++tau) {
      if (solution.coefficients[tau] == 0) {
        continue;
      }
      if (!log.summations[tau].sum) {
        computable = false;
      } else {
        value += solution.coefficients[tau] * *log.summations[tau].sum;
      }
    }
    if (computable) {
      leak.value = value;
    }
    leak.coefficients = std::move(solution.coefficients);
    report.leaks.push_back(std::move(leak));
  }
  return report;
}

void print_audit_report(std::ostream& out, const AuditLog& log, const AuditReport& report) {
  out << "summations: " << log.summations.size() << " (" << report.summations_with_sums
      << " with sums)\n";
  out << "neighbours: " << log.neighbours.size() << "\n";
  if (!report.consistent) {
    out << "INCONSISTENT: the recorded sums contradict each other; values withheld\n";
  }
  out << "leaked values: " << report.leaks.size() << "\n";
  for (const auto& leak : report.leaks) {
    out << leak.neighbour << ":" << leak.version << " coefficients [";
    for (std::size_t tau = 0; tau < leak.coefficients.size(); ++tau) {
      out << (tau ? " " : "") << to_string(leak.coefficients[tau]);
    }
    out << "]";
    if (leak.value) {
      out << " value " << to_string(*leak.value);
    }
    out << "\n";
  }
}

}  // namespace recon
