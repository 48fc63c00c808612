#include "warp/report.hpp"

#include <sstream>

namespace warp {

void ValidationReport::add_structural(std::string message) {
  structural_.push_back(std::move(message));
}

void ValidationReport::add_violation(int axiom, std::string law, std::string witness) {
  ++violation_count_;
  failed_axioms_.insert(axiom);
  if (options_.max_witnesses != 0 && violations_.size() >= options_.max_witnesses) return;
  violations_.push_back({axiom, std::move(law), std::move(witness)});
}

void ValidationReport::absorb(const ValidationReport& other, const std::string& scope) {
  for (const auto& s : other.structural_)
    add_structural(scope.empty() ? s : scope + ": " + s);
  for (const auto& v : other.violations_)
    add_violation(v.axiom, scope.empty() ? v.law : scope + ": " + v.law, v.witness);
  // Violations dropped by the other report's limit still count here.
  std::size_t dropped = other.violation_count_ - other.violations_.size();
  violation_count_ += dropped;
  failed_axioms_.insert(other.failed_axioms_.begin(), other.failed_axioms_.end());
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream out;
  if (!structural_.empty()) {
    out << structural_.size() << " structural error(s); first: " << structural_.front();
    return out.str();
  }
  out << violation_count_ << " violation(s)";
  if (!violations_.empty()) {
    const auto& v = violations_.front();
    out << "; first: axiom " << v.axiom << " (" << v.law << ") at " << v.witness;
  }
  return out.str();
}

}  // namespace warp
