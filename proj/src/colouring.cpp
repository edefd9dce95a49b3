#include "qsys/colouring.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <thread>

namespace qsys {

namespace {

// Everything the search needs about a system, precomputed once.
struct Context {
  const SystemData& sys;
  OperationTable q;                 // associated quandle
  std::optional<OperationTable> d;  // its right division, when it exists
  int g_size;

  explicit Context(const SystemData& s)
      : sys(s), q(associated_quandle(s).quandle.table), g_size(s.g_size) {
    if (q.right_invertible()) d = dual_operation(q);
  }

  void require_vertex_support(const Diagram& dg) const {
    for (const Vertex& v : dg.vertices) {
      if (!sys.has_rho())
        throw MissingFieldError("system lacks the involution rho");
      if (!sys.has_gamma(v.valence() - 1))
        throw MissingFieldError("system lacks a Gamma table of arity " +
                                std::to_string(v.valence() - 1));
    }
  }

  // h_i: the colour's G-part read as if the end pointed into the vertex.
  int inward(int x, Direction dir, int g) const {
    return dir == Direction::in ? g : sys.rho_at(x, g);
  }

  bool vertex_holds(const std::vector<Direction>& dirs,
                    const std::vector<int>& colours) const {
    const int x = colours[0] / g_size;
    for (int c : colours)
      if (c / g_size != x) return false;
    const std::size_t k = colours.size();
    std::vector<int> args(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i)
      args[i] = inward(x, dirs[i], colours[i] % g_size);
    const int last = inward(x, dirs[k - 1], colours[k - 1] % g_size);
    return sys.gamma_at(args) == sys.rho_at(x, last);
  }

  // The colour of the last end forced by the others.
  int vertex_last(const std::vector<Direction>& dirs,
                  const std::vector<int>& colours) const {
    const int x = colours[0] / g_size;
    const std::size_t k = colours.size();
    std::vector<int> args(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i)
      args[i] = inward(x, dirs[i], colours[i] % g_size);
    const int h_last = sys.rho_at(x, sys.gamma_at(args));
    const int g_last = dirs[k - 1] == Direction::in ? h_last
                                                    : sys.rho_at(x, h_last);
    return x * g_size + g_last;
  }

  bool crossing_holds(const Crossing& c, int over, int in, int out) const {
    return c.sign > 0 ? q(in, over) == out : q(out, over) == in;
  }

  bool generates(const std::vector<int>& colours) const {
    const int n = q.size();
    std::vector<char> member(n, 0);
    std::vector<int> items;
    for (int c : colours)
      if (!member[c]) {
        member[c] = 1;
        items.push_back(c);
      }
    // Closure under * and its dual: process pairs until no new element.
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const int a = items[i], b = items[j];
        int products[4] = {q(a, b), q(b, a), d ? (*d)(a, b) : a,
                           d ? (*d)(b, a) : b};
        for (int p : products)
          if (!member[p]) {
            member[p] = 1;
            items.push_back(p);
          }
      }
    }
    return static_cast<int>(items.size()) == n;
  }
};

class Solver {
 public:
  Solver(const Diagram& dg, const Context& ctx) : dg_(dg), ctx_(ctx) {
    const int n = dg.arc_count;
    crossings_of_.assign(n, {});
    vertices_of_.assign(n, {});
    for (int c = 0; c < static_cast<int>(dg.crossings.size()); ++c) {
      const Crossing& x = dg.crossings[c];
      for (int a : {x.over, x.under_in, x.under_out}) {
        auto& list = crossings_of_[a];
        if (list.empty() || list.back() != c) list.push_back(c);
      }
    }
    for (int v = 0; v < static_cast<int>(dg.vertices.size()); ++v) {
      dirs_.emplace_back();
      for (const VertexEnd& e : dg.vertices[v].ends) {
        dirs_.back().push_back(e.dir);
        auto& list = vertices_of_[e.arc];
        if (list.empty() || list.back() != v) list.push_back(v);
      }
    }
    order_.resize(n);
    for (int a = 0; a < n; ++a) order_[a] = a;
    auto weight = [&](int a) {
      return crossings_of_[a].size() + vertices_of_[a].size();
    };
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return weight(a) > weight(b);
    });
    colour_.assign(n, -1);
  }

  const std::vector<int>& order() const { return order_; }

  // Assigns and propagates; on conflict returns false (caller rewinds).
  bool assign(int arc, int value) {
    queue_.clear();
    if (!set(arc, value)) return false;
    while (!queue_.empty()) {
      const int a = queue_.back();
      queue_.pop_back();
      for (int c : crossings_of_[a])
        if (!visit_crossing(c)) return false;
      for (int v : vertices_of_[a])
        if (!visit_vertex(v)) return false;
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }
  void rewind(std::size_t mark) {
    while (trail_.size() > mark) {
      colour_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Depth-first search from the first unassigned arc in `order_` at or
  // after `from`; `leaf` returns false to stop.
  bool search(std::size_t from, const std::function<bool(const std::vector<int>&)>& leaf) {
    while (from < order_.size() && colour_[order_[from]] >= 0) ++from;
    if (from == order_.size()) return leaf(colour_);
    const int arc = order_[from];
    const int n = ctx_.q.size();
    for (int value = 0; value < n; ++value) {
      const std::size_t m = mark();
      if (assign(arc, value) && !search(from + 1, leaf)) {
        rewind(m);
        return false;
      }
      rewind(m);
    }
    return true;
  }

 private:
  bool set(int arc, int value) {
    if (colour_[arc] >= 0) return colour_[arc] == value;
    colour_[arc] = value;
    trail_.push_back(arc);
    queue_.push_back(arc);
    return true;
  }

  bool visit_crossing(int index) {
    const Crossing& c = dg_.crossings[index];
    const int o = colour_[c.over];
    if (o < 0) return true;
    const int i = colour_[c.under_in];
    const int u = colour_[c.under_out];
    const OperationTable& q = ctx_.q;
    const auto& d = ctx_.d;
    if (c.sign > 0) {
      if (i >= 0) return set(c.under_out, q(i, o));
      if (u >= 0 && d) return set(c.under_in, (*d)(u, o));
    } else {
      if (u >= 0) return set(c.under_in, q(u, o));
      if (i >= 0 && d) return set(c.under_out, (*d)(i, o));
    }
    if (i >= 0 && u >= 0) return ctx_.crossing_holds(c, o, i, u);
    return true;
  }

  bool visit_vertex(int index) {
    const auto& ends = dg_.vertices[index].ends;
    const int g = ctx_.g_size;
    int x = -1;
    int missing = 0;
    bool last_only = true;
    const int last_arc = ends.back().arc;
    for (std::size_t p = 0; p < ends.size(); ++p) {
      const VertexEnd& e = ends[p];
      const int c = colour_[e.arc];
      if (c < 0) {
        ++missing;
        // The last arc may also occupy an earlier end (a loop at the
        // vertex); it can then not be solved for.
        if (p + 1 != ends.size()) last_only = false;
        continue;
      }
      if (x < 0) x = c / g;
      else if (c / g != x) return false;
    }
    if (missing == 0) {
      scratch_.clear();
      for (const VertexEnd& e : ends) scratch_.push_back(colour_[e.arc]);
      return ctx_.vertex_holds(dirs_[index], scratch_);
    }
    // The rule solves for the last end once every other end is coloured.
    const bool last_missing = colour_[last_arc] < 0;
    if (last_missing && last_only) {
      scratch_.clear();
      for (std::size_t p = 0; p + 1 < ends.size(); ++p)
        scratch_.push_back(colour_[ends[p].arc]);
      scratch_.push_back(0);
      return set(last_arc, ctx_.vertex_last(dirs_[index], scratch_));
    }
    return true;
  }

  const Diagram& dg_;
  const Context& ctx_;
  std::vector<std::vector<int>> crossings_of_;
  std::vector<std::vector<int>> vertices_of_;
  std::vector<std::vector<Direction>> dirs_;
  std::vector<int> order_;
  std::vector<int> colour_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<int> scratch_;
};

void require_valid(const Diagram& d) {
  const AxiomReport report = validate_diagram(d);
  if (!report.valid())
    throw PreconditionError("invalid diagram:\n" + report.to_text());
}

}  // namespace

bool vertex_rule_holds(const SystemData& sys,
                       const std::vector<Direction>& dirs,
                       const std::vector<int>& colours) {
  if (dirs.size() != colours.size() || dirs.size() < 2)
    throw PreconditionError("vertex rule needs matching ends and colours");
  if (!sys.has_rho()) throw MissingFieldError("system lacks the involution rho");
  Context ctx(sys);
  return ctx.vertex_holds(dirs, colours);
}

AxiomReport verify_colouring(const Diagram& d, const SystemData& sys,
                             const Colouring& c) {
  require_valid(d);
  Context ctx(sys);
  ctx.require_vertex_support(d);
  AxiomReport report;
  const int n = ctx.q.size();
  if (static_cast<int>(c.assignment.size()) != d.arc_count)
    throw PreconditionError("colouring must assign every arc");
  bool in_range = true;
  for (int a = 0; a < d.arc_count; ++a)
    if (c.assignment[a] < 0 || c.assignment[a] >= n) {
      report.add("range", {a});
      in_range = false;
    }
  if (!in_range) return report;
  const auto& col = c.assignment;
  for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
    const Crossing& x = d.crossings[i];
    if (!ctx.crossing_holds(x, col[x.over], col[x.under_in], col[x.under_out]))
      report.add("crossing", {i});
  }
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    std::vector<Direction> dirs;
    std::vector<int> colours;
    for (const VertexEnd& e : d.vertices[v].ends) {
      dirs.push_back(e.dir);
      colours.push_back(col[e.arc]);
    }
    bool same_x = true;
    for (int k : colours) same_x &= k / sys.g_size == colours[0] / sys.g_size;
    if (!same_x) report.add("vertex-x", {v});
    else if (!ctx.vertex_holds(dirs, colours)) report.add("vertex", {v});
  }
  return report;
}

bool colouring_generates(const SystemData& sys, const Colouring& c) {
  Context ctx(sys);
  return ctx.generates(c.assignment);
}

std::uint64_t count_colourings(const Diagram& d, const SystemData& sys,
                               CountMode mode, int jobs) {
  require_valid(d);
  const Context ctx(sys);
  ctx.require_vertex_support(d);
  if (d.arc_count == 0) return mode == CountMode::all ? 1 : 0;

  auto leaf_counter = [&](std::uint64_t& count) {
    return [&ctx, &count, mode](const std::vector<int>& colours) {
      if (mode == CountMode::all || ctx.generates(colours)) ++count;
      return true;
    };
  };

  const int n = ctx.q.size();
  jobs = std::clamp(jobs, 1, n);
  if (jobs == 1) {
    Solver solver(d, ctx);
    std::uint64_t count = 0;
    solver.search(0, leaf_counter(count));
    return count;
  }

  // Split by the colour of the first branching arc.
  std::vector<std::uint64_t> counts(jobs, 0);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      Solver solver(d, ctx);
      const int first = solver.order()[0];
      auto leaf = leaf_counter(counts[w]);
      for (int value = w; value < n; value += jobs) {
        const std::size_t m = solver.mark();
        if (solver.assign(first, value)) solver.search(1, leaf);
        solver.rewind(m);
      }
    });
  }
  for (auto& t : workers) t.join();
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<Colouring> enumerate_colourings(const Diagram& d,
                                            const SystemData& sys,
                                            std::size_t cap) {
  require_valid(d);
  const Context ctx(sys);
  ctx.require_vertex_support(d);
  std::vector<Colouring> out;
  if (cap == 0) return out;
  if (d.arc_count == 0) {
    out.push_back({});
    return out;
  }
  Solver solver(d, ctx);
  solver.search(0, [&](const std::vector<int>& colours) {
    out.push_back({colours});
    return out.size() < cap;
  });
  return out;
}

}  // namespace qsys
