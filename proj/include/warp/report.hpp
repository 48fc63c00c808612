#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace warp {

struct ValidationOptions {
  // Number of witnesses kept; 0 keeps all of them.
  std::size_t max_witnesses = 0;
};

struct Violation {
  int axiom = 0;
  std::string law;
  std::string witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Outcome of a validator. Structural errors (malformed tables, frame
// mismatches) are kept apart from law violations.
class ValidationReport {
 public:
  explicit ValidationReport(ValidationOptions options = {}) : options_(options) {}

  void add_structural(std::string message);
  void add_violation(int axiom, std::string law, std::string witness);
  // Appends another report, prefixing its laws with `scope` when non-empty.
  void absorb(const ValidationReport& other, const std::string& scope = "");

  bool valid() const { return structural_.empty() && violation_count_ == 0; }
  bool structurally_sound() const { return structural_.empty(); }
  bool failed(int axiom) const { return failed_axioms_.count(axiom) != 0; }

  const std::vector<std::string>& structural() const { return structural_; }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t violation_count() const { return violation_count_; }
  const std::set<int>& failed_axioms() const { return failed_axioms_; }
  const ValidationOptions& options() const { return options_; }

  std::string summary() const;

  friend bool operator==(const ValidationReport& a, const ValidationReport& b) {
    return a.structural_ == b.structural_ && a.violations_ == b.violations_ &&
           a.violation_count_ == b.violation_count_ && a.failed_axioms_ == b.failed_axioms_;
  }

 private:
  ValidationOptions options_;
  std::vector<std::string> structural_;
  std::vector<Violation> violations_;
  std::size_t violation_count_ = 0;
  std::set<int> failed_axioms_;
};

// Raised when inputs do not fit together: frame mismatches, unknown atoms,
// non-total tables handed to an operation that needs well-formed data.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by constructions whose precondition is a law-abiding input.
class LawViolation : public std::runtime_error {
 public:
  LawViolation(const std::string& what, ValidationReport report)
      : std::runtime_error(what + ": " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace warp
