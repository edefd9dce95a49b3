#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsys/algebra.hpp"
#include "qsys/report.hpp"

namespace qsys {

// Raised when a validation kind needs a field the system does not carry.
class MissingFieldError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A carrier pair (X, G) with the operation family {*_g} on X, the twisting
// map f, the operations (x) and (+) on G, optional n-ary composition tables
// Gamma_k and the X-indexed involution rho_x on G.
struct SystemData {
  int x_size = 0;
  int g_size = 0;
  // Present for G-families and (G,*,f)-families; supplies the group product
  // and unit used by their composition axioms.
  std::optional<GroupTable> group;
  std::vector<OperationTable> star;       // star[g] is *_g on X
  std::vector<int> f;                     // f[g * g_size + h] = f(g, h)
  OperationTable otimes;                  // g (x) h
  std::optional<OperationTable> oplus;    // g (+) h
  std::map<int, std::vector<int>> gamma;  // arity k -> g_size^k entries
  std::vector<std::vector<int>> rho;      // rho[x][g] = rho_x(g); may be empty

  int f_at(int g, int h) const { return f[g * g_size + h]; }
  int apply(int g, int x, int y) const { return star[g](x, y); }
  bool has_rho() const { return !rho.empty(); }
  int rho_at(int x, int g) const { return rho[x][g]; }

  // Gamma_k is available for arity 2 through (+) when no table is stored.
  bool has_gamma(int arity) const;
  int gamma_at(std::span<const int> args) const;

  // Checks sizes and index ranges; throws PreconditionError.
  void check_shape() const;

  bool operator==(const SystemData&) const = default;
};

// A G-family packaged as a system: f(g,h) = h, g (x) h = h^-1 g h,
// g (+) h = gh and rho_x(g) = g^-1.
SystemData g_family_system(const GroupTable& group,
                           std::vector<OperationTable> star);

// A Q-family over the quandle (Q, o): f(a,b) = b and a (x) b = a o b.
SystemData q_family_system(const OperationTable& q,
                           std::vector<OperationTable> star);

// A bare quandle seen as a system over the one-element group, so that
// vertex-free diagrams can be coloured by it directly.
SystemData quandle_system(const OperationTable& q);

enum class FamilyKind {
  g_family,
  gsf_family,
  q_family,
  fw_system,
  trivalent_compatible,
  associative_composition,
  n_compatible,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::fw_system;
  std::vector<int> arities;  // n_compatible only

  FamilySpec() = default;
  FamilySpec(FamilyKind k, std::vector<int> a = {})  // NOLINT: implicit
      : kind(k), arities(std::move(a)) {}
};

// Accepts "g_family", ..., "n_compatible:2,3" (also with '-' for '_').
FamilySpec parse_family_kind(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Exhaustive check of the named definition. Axiom names used in reports:
//   g_family      axiom-1 (x,g) | axiom-2 (x,y,g,h) | axiom-2-unit (x,y) |
//                 axiom-3 (x,y,z,g,h)
//   gsf_family    otimes.<quandle axiom> | axiom-1 (x,g) | axiom-2 (x,y,g,h) |
//                 axiom-2-unit (x,y) | axiom-3 (x,y,z,g,h,q)
//   q_family      otimes.<quandle axiom> | axiom-1 (x,a) | axiom-2 (x,a) |
//                 axiom-3 (x,y,z,a,b)
//   fw_system     axiom-1 (x,g) | axiom-2 (g,h,y,z) | axiom-3 (x,y,z,g,h,q)
//   trivalent_compatible
//                 the fw_system axioms, composition (x,y,g,h),
//                 involution (x,g), condition-1 (g,h), condition-2 (0,g,h),
//                 condition-3 (g,h,q), condition-4 (h,q), condition-5 (g,u,v),
//                 condition-6 (x,g,h)
//   associative_composition
//                 associativity (g,h,q)
//   n_compatible  the fw_system axioms, good-involution.<axiom>, and for each
//                 arity n: n<n>-condition-1 .. n<n>-condition-7
AxiomReport validate_family(const SystemData& data, const FamilySpec& spec);

// x *_{f(g,h) f(g*h,q)} y == x *_{f(g,q) f(g*q,h*q)} y for all x, y, g, h,
// q, with subscripts multiplied in the group. Throws PreconditionError if
// `require_valid` and the data is not a valid (G,*,f)-family.
AxiomReport check_lemma_for(const SystemData& data, bool require_valid = true);

// The quandle on X x G. Element (x, g) has index x * g_size + g.
struct AssociatedQuandle {
  OperationTable table;
  int x_size = 0;
  int g_size = 0;

  int index(int x, int g) const { return x * g_size + g; }
  std::pair<int, int> pair(int index) const {
    return {index / g_size, index % g_size};
  }
};

struct AssociatedResult {
  AssociatedQuandle quandle;
  AxiomReport report;  // validate_axioms(quandle) of the product table
};

// (x,g).(y,h) = (x *_{f(g,h)} y, g (x) h).
AssociatedResult associated_quandle(const SystemData& data);

// rho(x,g) = (x, rho_x(g)) on the associated carrier.
std::vector<int> flattened_rho(const SystemData& data);

// (x,s).(y,t) = (f_{s,t}(x,y), g_{x,y}(s,t)) with f_maps[s*S+t] an operation
// on X and g_maps[x*X+y] an operation on S. The report checks
//   condition-1 (x,s): f_{s,s}(x,x) != x or g_{x,x}(s,s) != s
//   condition-2 (y,t): (x,s) -> (x,s).(y,t) is not a bijection
//   condition-3 (x,y,z,s,t,u): either distributivity equation fails
AssociatedResult general_product_quandle(
    const std::vector<OperationTable>& f_maps,
    const std::vector<OperationTable>& g_maps);

// The specialisation g_{x,y}(s,t) = s o t.
AssociatedResult specialised_product_quandle(
    const OperationTable& q, const std::vector<OperationTable>& f_maps);

// Checks rho^2 = id ("involution", (u)), (u*v)*rho(v) = u ("axiom-2",
// (u,v)) and rho(u)*v = rho(u*v) ("axiom-3", (u,v)). The verdict obtained
// with the alternative axiom u*rho(v) = u /v in place of axiom-2 is
// computed independently; a disagreement is reported as
// "verdict-disagreement". Throws PreconditionError if rho is not a
// permutation.
AxiomReport validate_involution(const OperationTable& q,
                                const std::vector<int>& rho);

struct InvolutionVerdicts {
  bool with_axiom_2 = false;
  bool with_alternative = false;
};
InvolutionVerdicts involution_verdicts(const OperationTable& q,
                                       const std::vector<int>& rho);

// All good involutions of q in lexicographic order.
std::vector<std::vector<int>> search_involutions(const OperationTable& q);

// A group S, a group G acting on X, and tau_x: S -> Stab(x).
struct AxetData {
  GroupTable s_group;
  GroupTable g_group;
  int x_size = 0;
  std::vector<std::vector<int>> action;  // action[g][x] = g.x
  std::vector<std::vector<int>> tau;     // tau[x][s] = tau_x(s) in G
};

// Axiom names: action (g,h,x) | axiom-1 (x,s) | axiom-2 (x,s,t) |
// axiom-3 (g,x,s).
AxiomReport validate_axet(const AxetData& axet);

struct AxetConversion {
  AxiomReport report;                 // axet axioms, then prefixed system checks
  std::optional<SystemData> system;   // absent when the axet axioms fail
  bool has_composition = false;       // (+) and rho were installed
};

// *_s(x,y) = tau_y(s).x, f(s,s') = s', s (x) s' = s; when S is abelian and
// tau_x(e) acts trivially also s (+) s' = s's and rho_x(s) = s^-1. The
// resulting system is validated as fw_system and, when (+) is present, as
// trivalent_compatible and associative_composition; failures appear in the
// report prefixed with "<kind>.".
AxetConversion axet_to_system(const AxetData& axet);

struct GammaResult {
  SystemData system;
  AxiomReport report;  // validate_family(n_compatible{arity})
};

// Installs Gamma_n(g_1..g_n) = ((g_1 (+) g_2) (+) ...) (+) g_n. Throws
// PreconditionError unless the system is trivalent-compatible with
// associative composition.
GammaResult gamma_from_oplus(const SystemData& data, int arity);

}  // namespace qsys
