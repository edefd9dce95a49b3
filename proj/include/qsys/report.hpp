#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qsys {

// One failed instance of a named axiom. The witness lists the element
// indices (in the order documented by the check that produced it) that
// make the axiom fail.
struct Violation {
  std::string axiom;
  std::vector<int> witness;

  bool operator==(const Violation&) const = default;
};

// Outcome of an exhaustive axiom check. Witnesses are recorded in the
// order the check enumerates its quantifiers, so reports are deterministic.
// At most kMaxWitnessesPerAxiom witnesses are kept per axiom; further
// failures are only counted.
class AxiomReport {
 public:
  static constexpr std::size_t kMaxWitnessesPerAxiom = 16;

  bool valid() const { return violations_.empty(); }

  void add(std::string_view axiom, std::vector<int> witness);

  // Appends every violation of `other`, renaming axioms to
  // "<prefix><axiom>" when a prefix is given.
  void merge(const AxiomReport& other, std::string_view prefix = {});

  const std::vector<Violation>& violations() const { return violations_; }

  // True if at least one witness for `axiom` was recorded.
  bool has(std::string_view axiom) const;

  // Total number of failures seen for `axiom`, including suppressed ones.
  std::size_t failure_count(std::string_view axiom) const;

  // Names of the violated axioms, in first-seen order.
  std::vector<std::string> failed_axioms() const;

  std::string to_text() const;

 private:
  std::vector<Violation> violations_;
  std::map<std::string, std::size_t, std::less<>> counts_;
  std::vector<std::string> order_;
};

}  // namespace qsys
