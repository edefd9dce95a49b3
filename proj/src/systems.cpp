#include "qsys/systems.hpp"

#include <algorithm>
#include <sstream>

namespace qsys {

namespace {

void require_field(bool present, const std::string& what) {
  if (!present) throw MissingFieldError("system lacks " + what);
}

// Advances `t` to the next tuple over {0..base-1} in lexicographic order.
bool next_tuple(std::vector<int>& t, int base) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

template <class F>
void for_each_tuple(int length, int base, F&& visit) {
  std::vector<int> t(length, 0);
  do {
    visit(t);
  } while (next_tuple(t, base));
}

std::vector<int> concat(std::initializer_list<int> head,
                        const std::vector<int>& tail) {
  std::vector<int> out(head);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

void check_fw_axioms(const SystemData& d, AxiomReport& report) {
  const int nx = d.x_size, ng = d.g_size;
  for (int x = 0; x < nx; ++x)
    for (int g = 0; g < ng; ++g)
      if (d.apply(d.f_at(g, g), x, x) != x) report.add("axiom-1", {x, g});
  std::vector<int> hits(nx);
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h) {
      const int fgh = d.f_at(g, h);
      for (int y = 0; y < nx; ++y) {
        std::fill(hits.begin(), hits.end(), 0);
        for (int x = 0; x < nx; ++x) ++hits[d.apply(fgh, x, y)];
        for (int z = 0; z < nx; ++z)
          if (hits[z] != 1) report.add("axiom-2", {g, h, y, z});
      }
    }
  const OperationTable& o = d.otimes;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int z = 0; z < nx; ++z)
        for (int g = 0; g < ng; ++g)
          for (int h = 0; h < ng; ++h)
            for (int q = 0; q < ng; ++q) {
              const int lhs =
                  d.apply(d.f_at(o(g, h), q), d.apply(d.f_at(g, h), x, y), z);
              const int rhs = d.apply(d.f_at(o(g, q), o(h, q)),
                                      d.apply(d.f_at(g, q), x, z),
                                      d.apply(d.f_at(h, q), y, z));
              if (lhs != rhs) report.add("axiom-3", {x, y, z, g, h, q});
            }
}

void check_f_second_argument(const SystemData& d, AxiomReport& report,
                             const std::string& name) {
  for (int g = 1; g < d.g_size; ++g)
    for (int h = 0; h < d.g_size; ++h)
      if (d.f_at(g, h) != d.f_at(0, h)) report.add(name, {0, g, h});
}

void check_group_composition(const SystemData& d, AxiomReport& report) {
  const GroupTable& G = *d.group;
  for (int x = 0; x < d.x_size; ++x)
    for (int y = 0; y < d.x_size; ++y)
      for (int g = 0; g < d.g_size; ++g)
        for (int h = 0; h < d.g_size; ++h)
          if (d.apply(G.mul(g, h), x, y) != d.apply(h, d.apply(g, x, y), y))
            report.add("axiom-2", {x, y, g, h});
  for (int x = 0; x < d.x_size; ++x)
    for (int y = 0; y < d.x_size; ++y)
      if (d.apply(G.identity(), x, y) != x) report.add("axiom-2-unit", {x, y});
}

void check_idempotent_family(const SystemData& d, AxiomReport& report) {
  for (int x = 0; x < d.x_size; ++x)
    for (int g = 0; g < d.g_size; ++g)
      if (d.apply(g, x, x) != x) report.add("axiom-1", {x, g});
}

AxiomReport validate_g_family(const SystemData& d) {
  require_field(d.group.has_value(), "a group table");
  AxiomReport report;
  const GroupTable& G = *d.group;
  check_idempotent_family(d, report);
  check_group_composition(d, report);
  for (int x = 0; x < d.x_size; ++x)
    for (int y = 0; y < d.x_size; ++y)
      for (int z = 0; z < d.x_size; ++z)
        for (int g = 0; g < d.g_size; ++g)
          for (int h = 0; h < d.g_size; ++h) {
            const int conj = G.mul(G.mul(G.inv(h), g), h);
            const int lhs = d.apply(h, d.apply(g, x, y), z);
            const int rhs =
                d.apply(conj, d.apply(h, x, z), d.apply(h, y, z));
            if (lhs != rhs) report.add("axiom-3", {x, y, z, g, h});
          }
  return report;
}

AxiomReport validate_gsf_family(const SystemData& d) {
  require_field(d.group.has_value(), "a group table");
  AxiomReport report;
  report.merge(validate_axioms(d.otimes, Profile::quandle), "otimes.");
  check_idempotent_family(d, report);
  check_group_composition(d, report);
  AxiomReport fw;
  check_fw_axioms(d, fw);
  for (const auto& v : fw.violations())
    if (v.axiom == "axiom-3") report.add("axiom-3", v.witness);
  return report;
}

AxiomReport validate_q_family(const SystemData& d) {
  AxiomReport report;
  report.merge(validate_axioms(d.otimes, Profile::quandle), "otimes.");
  check_idempotent_family(d, report);
  for (int a = 0; a < d.g_size; ++a)
    if (!d.star[a].right_invertible()) {
      for (int x = 0; x < d.x_size; ++x) {
        std::vector<bool> seen(d.x_size, false);
        bool bijective = true;
        for (int y = 0; y < d.x_size; ++y) {
          const int v = d.apply(a, y, x);
          if (seen[v]) bijective = false;
          seen[v] = true;
        }
        if (!bijective) report.add("axiom-2", {x, a});
      }
    }
  for (int x = 0; x < d.x_size; ++x)
    for (int y = 0; y < d.x_size; ++y)
      for (int z = 0; z < d.x_size; ++z)
        for (int a = 0; a < d.g_size; ++a)
          for (int b = 0; b < d.g_size; ++b) {
            const int lhs = d.apply(b, d.apply(a, x, y), z);
            const int rhs = d.apply(d.otimes(a, b), d.apply(b, x, z),
                                    d.apply(b, y, z));
            if (lhs != rhs) report.add("axiom-3", {x, y, z, a, b});
          }
  return report;
}

AxiomReport validate_trivalent(const SystemData& d) {
  require_field(d.oplus.has_value(), "the composition operation (oplus)");
  require_field(d.has_rho(), "the involution rho");
  AxiomReport report;
  check_fw_axioms(d, report);
  const OperationTable& o = d.otimes;
  const OperationTable& p = *d.oplus;
  const int nx = d.x_size, ng = d.g_size;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
          if (d.apply(h, d.apply(g, x, y), y) != d.apply(p(g, h), x, y))
            report.add("composition", {x, y, g, h});
  for (int x = 0; x < nx; ++x)
    for (int g = 0; g < ng; ++g)
      if (d.rho_at(x, d.rho_at(x, g)) != g) report.add("involution", {x, g});
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      if (p(h, o(g, h)) != p(g, h)) report.add("condition-1", {g, h});
  check_f_second_argument(d, report, "condition-2");
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int q = 0; q < ng; ++q)
        if (o(g, p(h, q)) != o(o(g, h), q))
          report.add("condition-3", {g, h, q});
  for (int h = 0; h < ng; ++h)
    for (int q = 0; q < ng; ++q)
      if (d.f_at(0, p(h, q)) != p(d.f_at(0, h), d.f_at(0, q)))
        report.add("condition-4", {h, q});
  for (int g = 0; g < ng; ++g)
    for (int u = 0; u < ng; ++u)
      for (int v = 0; v < ng; ++v)
        if (o(p(u, v), g) != p(o(u, g), o(v, g)))
          report.add("condition-5", {g, u, v});
  for (int x = 0; x < nx; ++x)
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h) {
        const int r = d.rho_at(x, p(g, h));
        if (p(h, r) != d.rho_at(x, g) || p(r, g) != d.rho_at(x, h))
          report.add("condition-6", {x, g, h});
      }
  return report;
}

AxiomReport validate_associative(const SystemData& d) {
  require_field(d.oplus.has_value(), "the composition operation (oplus)");
  AxiomReport report;
  const OperationTable& p = *d.oplus;
  for (int g = 0; g < d.g_size; ++g)
    for (int h = 0; h < d.g_size; ++h)
      for (int q = 0; q < d.g_size; ++q)
        if (p(g, p(h, q)) != p(p(g, h), q))
          report.add("associativity", {g, h, q});
  return report;
}

void check_n_conditions(const SystemData& d, int n, AxiomReport& report) {
  const std::string prefix = "n" + std::to_string(n) + "-condition-";
  const OperationTable& o = d.otimes;
  const int nx = d.x_size, ng = d.g_size;
  auto gamma = [&](const std::vector<int>& args) { return d.gamma_at(args); };

  // 1: Gamma composes the operations.
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for_each_tuple(n, ng, [&](const std::vector<int>& g) {
        int v = x;
        for (int gi : g) v = d.apply(gi, v, y);
        if (v != d.apply(gamma(g), x, y))
          report.add(prefix + "1", concat({x, y}, g));
      });
  // 2: Gamma(h1, h2, ...) = Gamma(h2, h1 (x) h2, ...).
  for_each_tuple(n, ng, [&](const std::vector<int>& g) {
    std::vector<int> moved = g;
    moved[0] = g[1];
    moved[1] = o(g[0], g[1]);
    if (gamma(g) != gamma(moved)) report.add(prefix + "2", g);
  });
  // 3: f depends on its second argument only.
  check_f_second_argument(d, report, prefix + "3");
  // 4: h (x) Gamma(g) = ((h (x) g1) (x) ...) (x) gn.
  for (int h = 0; h < ng; ++h)
    for_each_tuple(n, ng, [&](const std::vector<int>& g) {
      int v = h;
      for (int gi : g) v = o(v, gi);
      if (o(h, gamma(g)) != v) report.add(prefix + "4", concat({h}, g));
    });
  // 5: f(Gamma(g)) = Gamma(f(g1), ..., f(gn)).
  for_each_tuple(n, ng, [&](const std::vector<int>& g) {
    std::vector<int> fg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) fg[i] = d.f_at(0, g[i]);
    if (d.f_at(0, gamma(g)) != gamma(fg)) report.add(prefix + "5", g);
  });
  // 6: Gamma(g) (x) h = Gamma(g1 (x) h, ..., gn (x) h).
  for (int h = 0; h < ng; ++h)
    for_each_tuple(n, ng, [&](const std::vector<int>& g) {
      std::vector<int> gh(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) gh[i] = o(g[i], h);
      if (o(gamma(g), h) != gamma(gh)) {
        std::vector<int> w = g;
        w.push_back(h);
        report.add(prefix + "6", w);
      }
    });
  // 7: with g_{n+1} = Gamma(g_1..g_n), for i = 0..n-1,
  //    rho_x(g_{n-i}) = Gamma(g_{n-i+1}, ..., g_n, rho_x(g_{n+1}),
  //                           g_1, ..., g_{n-i-1}).
  for (int x = 0; x < nx; ++x)
    for_each_tuple(n, ng, [&](const std::vector<int>& g) {
      const int top = d.rho_at(x, gamma(g));
      for (int i = 0; i < n; ++i) {
        std::vector<int> args;
        for (int k = n - i; k < n; ++k) args.push_back(g[k]);
        args.push_back(top);
        for (int k = 0; k < n - i - 1; ++k) args.push_back(g[k]);
        if (d.rho_at(x, g[n - i - 1]) != gamma(args)) {
          std::vector<int> w = concat({x}, g);
          w.push_back(i);
          report.add(prefix + "7", w);
        }
      }
    });
}

AxiomReport validate_n_compatible(const SystemData& d,
                                  const std::vector<int>& arities) {
  require_field(d.has_rho(), "the involution rho");
  require_field(!arities.empty(), "an arity list");
  for (int n : arities) {
    require_field(n >= 2, "arity >= 2");
    require_field(d.has_gamma(n), "Gamma table of arity " + std::to_string(n));
  }
  AxiomReport report;
  check_fw_axioms(d, report);
  const AssociatedResult assoc = associated_quandle(d);
  report.merge(validate_involution(assoc.quandle.table, flattened_rho(d)),
               "good-involution.");
  for (int n : arities) check_n_conditions(d, n, report);
  return report;
}

}  // namespace

bool SystemData::has_gamma(int arity) const {
  return gamma.count(arity) > 0 || (arity == 2 && oplus.has_value());
}

int SystemData::gamma_at(std::span<const int> args) const {
  const int k = static_cast<int>(args.size());
  auto it = gamma.find(k);
  if (it != gamma.end()) {
    std::size_t index = 0;
    for (int a : args) index = index * g_size + a;
    return it->second[index];
  }
  if (k == 2 && oplus) return (*oplus)(args[0], args[1]);
  throw MissingFieldError("system lacks a Gamma table of arity " +
                          std::to_string(k));
}

void SystemData::check_shape() const {
  auto fail = [](const std::string& m) { throw PreconditionError(m); };
  if (x_size <= 0 || g_size <= 0) fail("system carriers must be non-empty");
  if (static_cast<int>(star.size()) != g_size)
    fail("system needs one operation on X per element of G");
  for (const auto& t : star)
    if (t.size() != x_size) fail("operation on X has the wrong size");
  if (f.size() != static_cast<std::size_t>(g_size) * g_size)
    fail("f must be a g_size x g_size matrix");
  for (int v : f)
    if (v < 0 || v >= g_size) fail("f value out of range");
  if (otimes.size() != g_size) fail("otimes has the wrong size");
  if (oplus && oplus->size() != g_size) fail("oplus has the wrong size");
  if (group && group->size() != g_size) fail("group has the wrong size");
  if (has_rho()) {
    if (static_cast<int>(rho.size()) != x_size)
      fail("rho needs one permutation per element of X");
    for (const auto& r : rho)
      if (!is_permutation(r, g_size)) fail("rho_x must permute G");
  }
  for (const auto& [k, table] : gamma) {
    if (k < 2 || k > 4) fail("Gamma arity must be between 2 and 4");
    std::size_t expected = 1;
    for (int i = 0; i < k; ++i) expected *= g_size;
    if (table.size() != expected) fail("Gamma table has the wrong size");
    for (int v : table)
      if (v < 0 || v >= g_size) fail("Gamma value out of range");
    if (k == 2 && oplus && table != oplus->entries())
      fail("Gamma of arity 2 disagrees with oplus");
  }
}

SystemData g_family_system(const GroupTable& group,
                           std::vector<OperationTable> star) {
  SystemData d;
  d.g_size = group.size();
  d.x_size = star.empty() ? 0 : star[0].size();
  d.group = group;
  d.star = std::move(star);
  d.f.resize(static_cast<std::size_t>(d.g_size) * d.g_size);
  for (int g = 0; g < d.g_size; ++g)
    for (int h = 0; h < d.g_size; ++h) d.f[g * d.g_size + h] = h;
  d.otimes = conjugation_quandle(group, 1);
  d.oplus = group.table();
  d.rho.assign(d.x_size, group.inverse());
  d.check_shape();
  return d;
}

SystemData q_family_system(const OperationTable& q,
                           std::vector<OperationTable> star) {
  SystemData d;
  d.g_size = q.size();
  d.x_size = star.empty() ? 0 : star[0].size();
  d.star = std::move(star);
  d.f.resize(static_cast<std::size_t>(d.g_size) * d.g_size);
  for (int g = 0; g < d.g_size; ++g)
    for (int h = 0; h < d.g_size; ++h) d.f[g * d.g_size + h] = h;
  d.otimes = q;
  d.check_shape();
  return d;
}

SystemData quandle_system(const OperationTable& q) {
  SystemData d = g_family_system(cyclic_group(1), {q});
  return d;
}

FamilySpec parse_family_kind(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '-', '_');
  std::vector<int> arities;
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string list = s.substr(colon + 1);
    s.resize(colon);
    std::replace(list.begin(), list.end(), ',', ' ');
    std::istringstream in(list);
    int n;
    while (in >> n) arities.push_back(n);
    if (!in.eof() || arities.empty())
      throw PreconditionError("malformed arity list in '" +
                              std::string(text) + "'");
  }
  static const std::pair<const char*, FamilyKind> kinds[] = {
      {"g_family", FamilyKind::g_family},
      {"gsf_family", FamilyKind::gsf_family},
      {"q_family", FamilyKind::q_family},
      {"fw_system", FamilyKind::fw_system},
      {"trivalent_compatible", FamilyKind::trivalent_compatible},
      {"associative_composition", FamilyKind::associative_composition},
      {"n_compatible", FamilyKind::n_compatible},
  };
  for (const auto& [name, kind] : kinds) {
    if (s != name) continue;
    if (kind == FamilyKind::n_compatible && arities.empty())
      throw PreconditionError("n_compatible needs arities, e.g. n_compatible:3");
    if (kind != FamilyKind::n_compatible && !arities.empty())
      throw PreconditionError("only n_compatible takes arities");
    return FamilySpec(kind, arities);
  }
  throw PreconditionError("unknown family kind '" + std::string(text) + "'");
}

std::string to_string(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::g_family: return "g_family";
    case FamilyKind::gsf_family: return "gsf_family";
    case FamilyKind::q_family: return "q_family";
    case FamilyKind::fw_system: return "fw_system";
    case FamilyKind::trivalent_compatible: return "trivalent_compatible";
    case FamilyKind::associative_composition: return "associative_composition";
    case FamilyKind::n_compatible: {
      std::string s = "n_compatible:";
      for (std::size_t i = 0; i < spec.arities.size(); ++i)
        s += (i ? "," : "") + std::to_string(spec.arities[i]);
      return s;
    }
  }
  return "unknown";
}

AxiomReport validate_family(const SystemData& data, const FamilySpec& spec) {
  data.check_shape();
  switch (spec.kind) {
    case FamilyKind::g_family: return validate_g_family(data);
    case FamilyKind::gsf_family: return validate_gsf_family(data);
    case FamilyKind::q_family: return validate_q_family(data);
    case FamilyKind::fw_system: {
      AxiomReport report;
      check_fw_axioms(data, report);
      return report;
    }
    case FamilyKind::trivalent_compatible: return validate_trivalent(data);
    case FamilyKind::associative_composition:
      return validate_associative(data);
    case FamilyKind::n_compatible:
      return validate_n_compatible(data, spec.arities);
  }
  return {};
}

AxiomReport check_lemma_for(const SystemData& d, bool require_valid) {
  require_field(d.group.has_value(), "a group table");
  if (require_valid && !validate_family(d, FamilyKind::gsf_family).valid())
    throw PreconditionError("system is not a valid (G,*,f)-family");
  const GroupTable& G = *d.group;
  const OperationTable& o = d.otimes;
  AxiomReport report;
  for (int x = 0; x < d.x_size; ++x)
    for (int y = 0; y < d.x_size; ++y)
      for (int g = 0; g < d.g_size; ++g)
        for (int h = 0; h < d.g_size; ++h)
          for (int q = 0; q < d.g_size; ++q) {
            const int left = G.mul(d.f_at(g, h), d.f_at(o(g, h), q));
            const int right = G.mul(d.f_at(g, q), d.f_at(o(g, q), o(h, q)));
            if (d.apply(left, x, y) != d.apply(right, x, y))
              report.add("lemma", {x, y, g, h, q});
          }
  return report;
}

AssociatedResult associated_quandle(const SystemData& d) {
  d.check_shape();
  AssociatedQuandle a;
  a.x_size = d.x_size;
  a.g_size = d.g_size;
  a.table = OperationTable(d.x_size * d.g_size);
  for (int x = 0; x < d.x_size; ++x)
    for (int g = 0; g < d.g_size; ++g)
      for (int y = 0; y < d.x_size; ++y)
        for (int h = 0; h < d.g_size; ++h)
          a.table.set(a.index(x, g), a.index(y, h),
                      a.index(d.apply(d.f_at(g, h), x, y), d.otimes(g, h)));
  AxiomReport report = validate_axioms(a.table, Profile::quandle);
  return {std::move(a), std::move(report)};
}

std::vector<int> flattened_rho(const SystemData& d) {
  require_field(d.has_rho(), "the involution rho");
  std::vector<int> out(static_cast<std::size_t>(d.x_size) * d.g_size);
  for (int x = 0; x < d.x_size; ++x)
    for (int g = 0; g < d.g_size; ++g)
      out[x * d.g_size + g] = x * d.g_size + d.rho_at(x, g);
  return out;
}

AssociatedResult general_product_quandle(
    const std::vector<OperationTable>& f_maps,
    const std::vector<OperationTable>& g_maps) {
  if (f_maps.empty() || g_maps.empty())
    throw PreconditionError("product quandle needs component maps");
  const int nx = f_maps[0].size();
  const int ns = g_maps[0].size();
  if (static_cast<int>(f_maps.size()) != ns * ns ||
      static_cast<int>(g_maps.size()) != nx * nx)
    throw PreconditionError("product quandle component counts do not match");
  for (const auto& t : f_maps)
    if (t.size() != nx) throw PreconditionError("f map has the wrong size");
  for (const auto& t : g_maps)
    if (t.size() != ns) throw PreconditionError("g map has the wrong size");

  auto F = [&](int s, int t, int x, int y) { return f_maps[s * ns + t](x, y); };
  auto G = [&](int x, int y, int s, int t) { return g_maps[x * nx + y](s, t); };

  AssociatedQuandle a;
  a.x_size = nx;
  a.g_size = ns;
  a.table = OperationTable(nx * ns);
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s)
      for (int y = 0; y < nx; ++y)
        for (int t = 0; t < ns; ++t)
          a.table.set(a.index(x, s), a.index(y, t),
                      a.index(F(s, t, x, y), G(x, y, s, t)));

  AxiomReport report;
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < ns; ++s)
      if (F(s, s, x, x) != x || G(x, x, s, s) != s)
        report.add("condition-1", {x, s});
  std::vector<bool> hit(static_cast<std::size_t>(nx) * ns);
  for (int y = 0; y < nx; ++y)
    for (int t = 0; t < ns; ++t) {
      std::fill(hit.begin(), hit.end(), false);
      bool bijective = true;
      for (int u = 0; u < nx * ns; ++u) {
        const int v = a.table(u, a.index(y, t));
        if (hit[v]) bijective = false;
        hit[v] = true;
      }
      if (!bijective) report.add("condition-2", {y, t});
    }
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      for (int z = 0; z < nx; ++z)
        for (int s = 0; s < ns; ++s)
          for (int t = 0; t < ns; ++t)
            for (int u = 0; u < ns; ++u) {
              const int fst = F(s, t, x, y), gst = G(x, y, s, t);
              const int fsu = F(s, u, x, z), ftu = F(t, u, y, z);
              const int gsu = G(x, z, s, u), gtu = G(y, z, t, u);
              const bool first = F(gst, u, fst, z) == F(gsu, gtu, fsu, ftu);
              const bool second = G(fst, z, gst, u) == G(fsu, ftu, gsu, gtu);
              if (!first || !second)
                report.add("condition-3", {x, y, z, s, t, u});
            }
  return {std::move(a), std::move(report)};
}

AssociatedResult specialised_product_quandle(
    const OperationTable& q, const std::vector<OperationTable>& f_maps) {
  if (f_maps.empty()) throw PreconditionError("product quandle needs f maps");
  const int nx = f_maps[0].size();
  std::vector<OperationTable> g_maps(static_cast<std::size_t>(nx) * nx, q);
  return general_product_quandle(f_maps, g_maps);
}

InvolutionVerdicts involution_verdicts(const OperationTable& q,
                                       const std::vector<int>& rho) {
  if (!is_permutation(rho, q.size()))
    throw PreconditionError("rho must be a permutation of the carrier");
  const int n = q.size();
  bool involutive = true, axiom2 = true, axiom3 = true, alternative = true;
  for (int u = 0; u < n; ++u) involutive &= rho[rho[u]] == u;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      axiom2 &= q(q(u, v), rho[v]) == u;
      axiom3 &= q(rho[u], v) == rho[q(u, v)];
    }
  if (q.right_invertible()) {
    const OperationTable dual = dual_operation(q);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) alternative &= q(u, rho[v]) == dual(u, v);
  } else {
    // The alternative axiom needs a right division; without one it fails.
    alternative = false;
  }
  return {involutive && axiom2 && axiom3, involutive && alternative && axiom3};
}

AxiomReport validate_involution(const OperationTable& q,
                                const std::vector<int>& rho) {
  const InvolutionVerdicts verdicts = involution_verdicts(q, rho);
  AxiomReport report;
  const int n = q.size();
  for (int u = 0; u < n; ++u)
    if (rho[rho[u]] != u) report.add("involution", {u});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (q(q(u, v), rho[v]) != u) report.add("axiom-2", {u, v});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (q(rho[u], v) != rho[q(u, v)]) report.add("axiom-3", {u, v});
  if (verdicts.with_axiom_2 != verdicts.with_alternative)
    report.add("verdict-disagreement", {});
  return report;
}

std::vector<std::vector<int>> search_involutions(const OperationTable& q) {
  const int n = q.size();
  std::vector<std::vector<int>> found;
  std::vector<int> rho(n, -1);
  // Axiom 2 only involves rho(v); check it as soon as rho(v) is fixed.
  auto axiom2_holds = [&](int v) {
    for (int u = 0; u < n; ++u)
      if (q(q(u, v), rho[v]) != u) return false;
    return true;
  };
  auto recurse = [&](auto&& self) -> void {
    int i = 0;
    while (i < n && rho[i] >= 0) ++i;
    if (i == n) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (q(rho[u], v) != rho[q(u, v)]) return;
      found.push_back(rho);
      return;
    }
    for (int j = i; j < n; ++j) {
      if (rho[j] >= 0) continue;
      rho[i] = j;
      rho[j] = i;
      if (axiom2_holds(i) && axiom2_holds(j)) self(self);
      rho[i] = -1;
      rho[j] = -1;
    }
  };
  recurse(recurse);
  std::sort(found.begin(), found.end());
  return found;
}

AxiomReport validate_axet(const AxetData& a) {
  const GroupTable& S = a.s_group;
  const GroupTable& G = a.g_group;
  if (static_cast<int>(a.action.size()) != G.size())
    throw PreconditionError("axet needs one permutation of X per element of G");
  for (const auto& p : a.action)
    if (!is_permutation(p, a.x_size))
      throw PreconditionError("axet action entries must permute X");
  if (static_cast<int>(a.tau.size()) != a.x_size)
    throw PreconditionError("axet tau needs one row per element of X");
  for (const auto& row : a.tau) {
    if (static_cast<int>(row.size()) != S.size())
      throw PreconditionError("axet tau rows need one entry per element of S");
    for (int g : row)
      if (g < 0 || g >= G.size())
        throw PreconditionError("axet tau value out of range");
  }
  AxiomReport report;
  for (int x = 0; x < a.x_size; ++x)
    if (a.action[G.identity()][x] != x)
      report.add("action", {G.identity(), G.identity(), x});
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h)
      for (int x = 0; x < a.x_size; ++x)
        if (a.action[G.mul(g, h)][x] != a.action[g][a.action[h][x]])
          report.add("action", {g, h, x});
  for (int x = 0; x < a.x_size; ++x)
    for (int s = 0; s < S.size(); ++s)
      if (a.action[a.tau[x][s]][x] != x) report.add("axiom-1", {x, s});
  for (int x = 0; x < a.x_size; ++x)
    for (int s = 0; s < S.size(); ++s)
      for (int t = 0; t < S.size(); ++t)
        if (G.mul(a.tau[x][s], a.tau[x][t]) != a.tau[x][S.mul(s, t)])
          report.add("axiom-2", {x, s, t});
  for (int g = 0; g < G.size(); ++g)
    for (int x = 0; x < a.x_size; ++x)
      for (int s = 0; s < S.size(); ++s) {
        const int conj = G.mul(G.mul(g, a.tau[x][s]), G.inv(g));
        if (a.tau[a.action[g][x]][s] != conj) report.add("axiom-3", {g, x, s});
      }
  return report;
}

AxetConversion axet_to_system(const AxetData& a) {
  AxetConversion out;
  out.report = validate_axet(a);
  if (!out.report.valid()) return out;

  const GroupTable& S = a.s_group;
  SystemData d;
  d.x_size = a.x_size;
  d.g_size = S.size();
  for (int s = 0; s < S.size(); ++s)
    d.star.push_back(OperationTable::from_function(
        a.x_size, [&](int x, int y) { return a.action[a.tau[y][s]][x]; }));
  d.f.resize(static_cast<std::size_t>(d.g_size) * d.g_size);
  for (int s = 0; s < d.g_size; ++s)
    for (int t = 0; t < d.g_size; ++t) d.f[s * d.g_size + t] = t;
  d.otimes = trivial_quandle(d.g_size);

  bool unit_trivial = true;
  for (int x = 0; x < a.x_size; ++x)
    for (int y = 0; y < a.x_size; ++y)
      unit_trivial &= a.action[a.tau[x][S.identity()]][y] == y;
  if (S.is_abelian() && unit_trivial) {
    d.oplus = OperationTable::from_function(
        d.g_size, [&](int s, int t) { return S.mul(t, s); });
    d.rho.assign(d.x_size, S.inverse());
    out.has_composition = true;
  }

  out.report.merge(validate_family(d, FamilyKind::fw_system), "fw_system.");
  if (out.has_composition) {
    out.report.merge(validate_family(d, FamilyKind::trivalent_compatible),
                     "trivalent_compatible.");
    out.report.merge(validate_family(d, FamilyKind::associative_composition),
                     "associative_composition.");
  }
  out.system = std::move(d);
  return out;
}

GammaResult gamma_from_oplus(const SystemData& data, int arity) {
  if (arity < 2 || arity > 4)
    throw PreconditionError("Gamma arity must be between 2 and 4");
  if (!validate_family(data, FamilyKind::trivalent_compatible).valid() ||
      !validate_family(data, FamilyKind::associative_composition).valid())
    throw PreconditionError(
        "Gamma from oplus needs a trivalent-compatible system with "
        "associative composition");
  SystemData d = data;
  const OperationTable& p = *d.oplus;
  std::vector<int> table;
  for_each_tuple(arity, d.g_size, [&](const std::vector<int>& g) {
    int v = g[0];
    for (std::size_t i = 1; i < g.size(); ++i) v = p(v, g[i]);
    table.push_back(v);
  });
  d.gamma[arity] = std::move(table);
  AxiomReport report =
      validate_family(d, FamilySpec(FamilyKind::n_compatible, {arity}));
  return {std::move(d), std::move(report)};
}

}  // namespace qsys
