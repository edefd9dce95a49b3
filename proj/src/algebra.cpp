#include "qsys/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace qsys {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace

bool is_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

OperationTable::OperationTable(int size)
    : size_(size), entries_(static_cast<std::size_t>(size) * size, 0) {
  require(size > 0, "operation table size must be positive");
}

OperationTable::OperationTable(int size, std::vector<int> entries)
    : size_(size), entries_(std::move(entries)) {
  require(size > 0, "operation table size must be positive");
  require(entries_.size() == static_cast<std::size_t>(size) * size,
          "operation table needs size*size entries");
  for (int v : entries_)
    require(v >= 0 && v < size, "operation table entry out of range");
}

void OperationTable::set(int i, int j, int value) {
  require(value >= 0 && value < size_, "operation table entry out of range");
  entries_[static_cast<std::size_t>(i) * size_ + j] = value;
}

bool OperationTable::right_invertible() const {
  std::vector<int> seen(size_);
  for (int j = 0; j < size_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < size_; ++i) {
      if (seen[(*this)(i, j)]++) return false;
    }
  }
  return true;
}

GroupTable::GroupTable(OperationTable table, int identity)
    : table_(std::move(table)), identity_(identity) {
  require(identity >= 0 && identity < table_.size(),
          "group identity out of range");
  const AxiomReport report = validate_axioms(table_, Profile::group, identity);
  require(report.valid(), "table is not a group: " + report.to_text());
  const int n = table_.size();
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_(a, b) == identity_) inverse_[a] = b;
}

GroupTable GroupTable::from_table(OperationTable table) {
  const int n = table.size();
  for (int e = 0; e < n; ++e) {
    bool unit = true;
    for (int a = 0; a < n && unit; ++a)
      unit = table(e, a) == a && table(a, e) == a;
    if (unit) return GroupTable(std::move(table), e);
  }
  throw PreconditionError("table has no identity element");
}

int GroupTable::power(int g, long long n) const {
  if (n < 0) {
    g = inv(g);
    n = -n;
  }
  int result = identity_;
  for (long long k = 0; k < n; ++k) result = mul(result, g);
  return result;
}

int GroupTable::order_of(int g) const {
  int k = 1;
  for (int x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int g = 0; g < size(); ++g) e = std::lcm(e, order_of(g));
  return e;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable cyclic_group(int n) {
  return GroupTable(
      OperationTable::from_function(n, [n](int a, int b) { return (a + b) % n; }),
      0);
}

std::vector<int> symmetric_group_permutation(int n, int g) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int k = 0; k < g; ++k) std::next_permutation(p.begin(), p.end());
  return p;
}

int symmetric_group_element(const std::vector<int>& permutation) {
  std::vector<int> p(permutation.size());
  std::iota(p.begin(), p.end(), 0);
  int index = 0;
  while (p != permutation) {
    if (!std::next_permutation(p.begin(), p.end()))
      throw PreconditionError("not a permutation");
    ++index;
  }
  return index;
}

GroupTable symmetric_group(int n) {
  require(n >= 1 && n <= 6, "symmetric_group supports 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < static_cast<int>(perms.size()); ++k) index[perms[k]] = k;
  const int order = static_cast<int>(perms.size());
  OperationTable t(order);
  std::vector<int> composed(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) composed[x] = perms[b][perms[a][x]];
      t.set(a, b, index.at(composed));
    }
  }
  return GroupTable(std::move(t), 0);
}

GroupTable dihedral_group(int n) {
  require(n >= 1, "dihedral_group needs n >= 1");
  auto op = [n](int a, int b) {
    const bool ra = a < n, rb = b < n;
    const int ka = a % n, kb = b % n;
    if (ra && rb) return (ka + kb) % n;
    if (ra && !rb) return n + ((kb - ka) % n + n) % n;
    if (!ra && rb) return n + (ka + kb) % n;
    return ((kb - ka) % n + n) % n;
  };
  return GroupTable(OperationTable::from_function(2 * n, op), 0);
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int m = b.size();
  auto op = [&](int x, int y) {
    return a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  };
  return GroupTable(OperationTable::from_function(a.size() * m, op),
                    a.identity() * m + b.identity());
}

AxiomReport validate_axioms(const OperationTable& t, Profile profile,
                            int identity) {
  AxiomReport report;
  const int n = t.size();
  if (profile == Profile::group) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t(t(a, b), c) != t(a, t(b, c)))
            report.add("associativity", {a, b, c});
    if (identity < 0 || identity >= n) {
      report.add("identity", {identity});
      return report;
    }
    for (int a = 0; a < n; ++a)
      if (t(identity, a) != a || t(a, identity) != a)
        report.add("identity", {a});
    for (int a = 0; a < n; ++a) {
      bool found = false;
      for (int b = 0; b < n && !found; ++b)
        found = t(a, b) == identity && t(b, a) == identity;
      if (!found) report.add("inverses", {a});
    }
    return report;
  }

  if (profile != Profile::rack) {
    for (int i = 0; i < n; ++i)
      if (t(i, i) != i) report.add("idempotency", {i});
  }
  std::vector<int> first(n);
  for (int j = 0; j < n; ++j) {
    std::fill(first.begin(), first.end(), -1);
    for (int i = 0; i < n; ++i) {
      int& slot = first[t(i, j)];
      if (slot >= 0) {
        report.add("right-invertibility", {j, slot, i});
      } else {
        slot = i;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t(t(i, j), k) != t(t(i, k), t(j, k)))
          report.add("self-distributivity", {i, j, k});
  if (profile == Profile::kei) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (t(t(i, j), j) != i) report.add("involutory", {i, j});
  }
  return report;
}

OperationTable trivial_quandle(int n) {
  return OperationTable::from_function(n, [](int i, int) { return i; });
}

OperationTable dihedral_quandle(int n) {
  return OperationTable::from_function(
      n, [n](int i, int j) { return ((2 * j - i) % n + n) % n; });
}

OperationTable conjugation_quandle(const GroupTable& g, long long n) {
  const long long e = g.exponent();
  const long long k = ((n % e) + e) % e;
  return OperationTable::from_function(g.size(), [&](int a, int b) {
    const int hk = g.power(b, k);
    return g.mul(g.mul(g.inv(hk), a), hk);
  });
}

OperationTable takasaki_quandle(const GroupTable& g) {
  require(g.is_abelian(), "takasaki quandle needs an abelian group");
  return OperationTable::from_function(g.size(), [&](int a, int b) {
    return g.mul(g.mul(b, g.inv(a)), b);
  });
}

OperationTable alexander_quandle(const GroupTable& g,
                                 const std::vector<int>& phi) {
  require(is_permutation(phi, g.size()),
          "alexander quandle map must be a permutation");
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      require(phi[g.mul(a, b)] == g.mul(phi[a], phi[b]),
              "alexander quandle map must be a group automorphism");
  return OperationTable::from_function(g.size(), [&](int a, int b) {
    return g.mul(phi[g.mul(a, g.inv(b))], b);
  });
}

OperationTable dual_operation(const OperationTable& t) {
  require(t.right_invertible(),
          "dual operation needs every right translation to be a bijection");
  OperationTable dual(t.size());
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) dual.set(t(i, j), j, i);
  return dual;
}

std::vector<int> generated_subalgebra(const OperationTable& t,
                                      const std::vector<int>& seeds) {
  const OperationTable dual = dual_operation(t);
  const int n = t.size();
  std::vector<bool> member(n, false);
  for (int s : seeds) {
    require(s >= 0 && s < n, "seed out of range");
    member[s] = true;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < n; ++a) {
      if (!member[a]) continue;
      for (int b = 0; b < n; ++b) {
        if (!member[b]) continue;
        for (int c : {t(a, b), dual(a, b)}) {
          if (!member[c]) {
            member[c] = true;
            grew = true;
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < n; ++a)
    if (member[a]) out.push_back(a);
  return out;
}

namespace {

struct HomSearch {
  const OperationTable& src;
  const OperationTable& dst;
  bool surjective_only;
  // checks[k]: products (a, b, a*b) whose largest index is k.
  std::vector<std::vector<std::array<int, 3>>> checks;
  std::vector<int> phi;
  std::vector<int> image_count;
  int image_size = 0;
  std::uint64_t count = 0;

  void run(int k) {
    const int n = src.size();
    const int m = dst.size();
    if (k == n) {
      if (!surjective_only || image_size == m) ++count;
      return;
    }
    if (surjective_only && image_size + (n - k) < m) return;
    for (int v = 0; v < m; ++v) {
      phi[k] = v;
      bool ok = true;
      for (const auto& [a, b, c] : checks[k]) {
        if (phi[c] != dst(phi[a], phi[b])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (image_count[v]++ == 0) ++image_size;
      run(k + 1);
      if (--image_count[v] == 0) --image_size;
    }
  }
};

}  // namespace

std::uint64_t hom_count(const OperationTable& source,
                        const OperationTable& target, bool surjective_only) {
  HomSearch search{source, target, surjective_only, {}, {}, {}, 0, 0};
  const int n = source.size();
  search.checks.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = source(a, b);
      search.checks[std::max({a, b, c})].push_back({a, b, c});
    }
  search.phi.assign(n, 0);
  search.image_count.assign(target.size(), 0);
  search.run(0);
  return search.count;
}

}  // namespace qsys
