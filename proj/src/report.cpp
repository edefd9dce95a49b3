#include "qsys/report.hpp"

#include <sstream>

namespace qsys {

void AxiomReport::add(std::string_view axiom, std::vector<int> witness) {
  auto it = counts_.find(axiom);
  if (it == counts_.end()) {
    it = counts_.emplace(std::string(axiom), 0).first;
    order_.emplace_back(axiom);
  }
  if (it->second++ < kMaxWitnessesPerAxiom) {
    violations_.push_back({std::string(axiom), std::move(witness)});
  }
}

void AxiomReport::merge(const AxiomReport& other, std::string_view prefix) {
  for (const auto& name : other.order_) {
    const std::string renamed = std::string(prefix) + name;
    auto it = counts_.find(renamed);
    if (it == counts_.end()) {
      it = counts_.emplace(renamed, 0).first;
      order_.push_back(renamed);
    }
    std::size_t kept = 0;
    for (const auto& v : other.violations_) {
      if (v.axiom != name) continue;
      if (it->second + kept < kMaxWitnessesPerAxiom) {
        violations_.push_back({renamed, v.witness});
      }
      ++kept;
    }
    it->second += other.counts_.at(name);
  }
}

bool AxiomReport::has(std::string_view axiom) const {
  return counts_.find(axiom) != counts_.end();
}

std::size_t AxiomReport::failure_count(std::string_view axiom) const {
  auto it = counts_.find(axiom);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::string> AxiomReport::failed_axioms() const { return order_; }

std::string AxiomReport::to_text() const {
  std::ostringstream out;
  if (valid()) {
    out << "valid\n";
    return out.str();
  }
  out << "invalid\n";
  for (const auto& v : violations_) {
    out << "violation " << v.axiom << " witness";
    for (int w : v.witness) out << ' ' << w;
    out << '\n';
  }
  for (const auto& name : order_) {
    const std::size_t total = counts_.at(name);
    if (total > kMaxWitnessesPerAxiom) {
      out << "suppressed " << name << ' ' << (total - kMaxWitnessesPerAxiom)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace qsys
