#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsys/report.hpp"

namespace qsys {

// Thrown when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A binary operation on the dense carrier {0, ..., size-1}, stored row-major:
// (*this)(i, j) is i * j.
class OperationTable {
 public:
  OperationTable() = default;

  // The all-zero table of the given size.
  explicit OperationTable(int size);

  // Takes ownership of `entries` (size*size values, each in range).
  OperationTable(int size, std::vector<int> entries);

  template <class F>
  static OperationTable from_function(int size, F&& op) {
    OperationTable t(size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) t.set(i, j, op(i, j));
    return t;
  }

  int size() const { return size_; }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * size_ + j];
  }
  void set(int i, int j, int value);

  std::span<const int> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * size_,
            static_cast<std::size_t>(size_)};
  }
  const std::vector<int>& entries() const { return entries_; }

  // True when i -> i * j is a bijection for every j.
  bool right_invertible() const;

  bool operator==(const OperationTable&) const = default;

 private:
  int size_ = 0;
  std::vector<int> entries_;
};

// A finite group given by its multiplication table.
class GroupTable {
 public:
  GroupTable() = default;

  // Validates the group axioms with `identity` as unit; throws
  // PreconditionError if they fail.
  GroupTable(OperationTable table, int identity);

  // Locates the identity itself.
  static GroupTable from_table(OperationTable table);

  int size() const { return table_.size(); }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return table_(g, h); }
  int inv(int g) const { return inverse_[g]; }
  int power(int g, long long n) const;
  int order_of(int g) const;
  int exponent() const;
  bool is_abelian() const;

  const OperationTable& table() const { return table_; }
  const std::vector<int>& inverse() const { return inverse_; }

  bool operator==(const GroupTable&) const = default;

 private:
  OperationTable table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

// Small groups used throughout the library and its tests.
GroupTable cyclic_group(int n);
// S_n on {0..n-1}; elements are permutations in lexicographic order and the
// product is composition "apply g first, then h".
GroupTable symmetric_group(int n);
// The dihedral group of order 2n: element k < n is the rotation r^k,
// element n + k is the reflection s r^k.
GroupTable dihedral_group(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

// The permutation of {0..n-1} represented by element g of symmetric_group(n).
std::vector<int> symmetric_group_permutation(int n, int g);
int symmetric_group_element(const std::vector<int>& permutation);

enum class Profile { quandle, rack, kei, group };

// Exhaustive axiom check. Axiom names and witnesses:
//   quandle / rack / kei
//     "idempotency"         (i)       i*i != i          (not for rack)
//     "right-invertibility" (j, i, k) i*j == k*j with i < k
//     "self-distributivity" (i, j, k) (i*j)*k != (i*k)*(j*k)
//     "involutory"          (i, j)    (i*j)*j != i      (kei only)
//   group
//     "associativity"       (a, b, c)
//     "identity"            (a)       e*a != a or a*e != a
//     "inverses"            (a)       no b with a*b == e == b*a
AxiomReport validate_axioms(const OperationTable& table, Profile profile,
                            int identity = 0);

OperationTable trivial_quandle(int n);
OperationTable dihedral_quandle(int n);
// g * h = h^-n g h^n, with n taken modulo the exponent of G.
OperationTable conjugation_quandle(const GroupTable& g, long long n = 1);
// g * h = h g^-1 h; G must be abelian.
OperationTable takasaki_quandle(const GroupTable& g);
// g * h = phi(g h^-1) h; phi must be an automorphism of G.
OperationTable alexander_quandle(const GroupTable& g,
                                 const std::vector<int>& phi);

// The right division a /b with (a*b) /b = a and (a /b) * b = a.
OperationTable dual_operation(const OperationTable& table);

// Smallest subset containing `seeds` and closed under * and its dual.
std::vector<int> generated_subalgebra(const OperationTable& table,
                                      const std::vector<int>& seeds);

// Number of maps phi: source -> target with phi(a*b) = phi(a)*phi(b).
std::uint64_t hom_count(const OperationTable& source,
                        const OperationTable& target, bool surjective_only);

bool is_permutation(const std::vector<int>& p, int n);

}  // namespace qsys
