#include "flownet/gadgets.hpp"

#include <algorithm>
#include <map>

#include "flownet/error.hpp"

namespace flownet {

VertexId GadgetOutput::vertex(const std::string& label) const {
  const auto it = labels.find(label);
  if (it == labels.end()) throw InputError("gadget has no vertex labelled " + label);
  return it->second;
}

nlohmann::json gadget_to_json(const GadgetOutput& g) {
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [name, v] : g.labels) labels[name] = v;
  return {{"name", g.name}, {"labels", labels}, {"metadata", g.metadata}};
}

namespace {

class Builder {
 public:
  VertexId add(const std::string& label) {
    labels_[label] = next_;
    return next_++;
  }
  VertexId add() { return next_++; }
  void alias(const std::string& label, VertexId v) { labels_[label] = v; }
  VertexId operator[](const std::string& label) const { return labels_.at(label); }

  ArcId arc(VertexId u, VertexId v, Capacity c) {
    arcs_.push_back({u, v});
    caps_.push_back(c);
    return static_cast<ArcId>(arcs_.size() - 1);
  }

  GadgetOutput build(std::string name, nlohmann::json metadata) {
    GadgetOutput out{std::move(name),
                     Network(Digraph(next_, std::move(arcs_)), labels_.at("s"), labels_.at("t"),
                             std::move(caps_)),
                     std::move(labels_), std::move(metadata)};
    return out;
  }

 private:
  VertexId next_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Capacity> caps_;
  std::map<std::string, VertexId> labels_;
};

// Adds `amount` to the first arc u->v.
class FlowBuilder {
 public:
  explicit FlowBuilder(const Network& net) : net_(net), x_(static_cast<std::size_t>(net.arc_count()), 0) {}

  void add(VertexId u, VertexId v, Capacity amount) {
    for (ArcId a : net_.digraph().out_arcs(u)) {
      if (net_.arc(a).head == v) {
        x_[static_cast<std::size_t>(a)] += amount;
        return;
      }
    }
    throw std::logic_error("gadget has no arc " + std::to_string(u) + "->" + std::to_string(v));
  }
  void path(const std::vector<VertexId>& vertices, Capacity amount) {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) add(vertices[i], vertices[i + 1], amount);
  }
  Flow flow() const { return make_flow(net_, x_); }

 private:
  const Network& net_;
  std::vector<Capacity> x_;
};

std::string num(int i) { return std::to_string(i); }

// Position of each literal among the occurrences of its variable with the
// same sign, counted in clause order (1-based).
struct Occurrence {
  int var = 0;
  bool positive = true;
  int r = 0;
};

std::vector<std::array<Occurrence, 3>> occurrence_table(const CnfFormula& f) {
  std::vector<int> pos(static_cast<std::size_t>(f.variable_count) + 1, 0);
  std::vector<int> neg(pos.size(), 0);
  std::vector<std::array<Occurrence, 3>> out;
  for (const Clause& c : f.clauses) {
    std::array<Occurrence, 3> row;
    for (std::size_t k = 0; k < 3; ++k) {
      const int var = std::abs(c[k]);
      const bool positive = c[k] > 0;
      int& count = positive ? pos[static_cast<std::size_t>(var)] : neg[static_cast<std::size_t>(var)];
      row[k] = {var, positive, ++count};
    }
    out.push_back(row);
  }
  return out;
}

std::string occurrence_label(const Occurrence& o) {
  return (o.positive ? "y" : "z") + num(o.var) + "," + num(o.r);
}

void check_assignment(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(f.variable_count) + 1) {
    throw InputError("assignment must have one entry per variable (index 1..n)");
  }
  if (!f.satisfied_by(assignment)) throw InputError("assignment does not satisfy the formula");
}

// Index in the clause of its first literal made true by the assignment.
std::size_t first_true(const Clause& c, const std::vector<bool>& assignment) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (assignment[static_cast<std::size_t>(std::abs(c[k]))] == (c[k] > 0)) return k;
  }
  throw InputError("clause not satisfied");
}

// Adds u1..u(n+1) with aliases v1..vn and the occurrence paths of every
// variable; returns nothing, labels live in the builder.
void add_variable_vertices(Builder& b, const CnfFormula& f) {
  const int n = f.variable_count;
  for (int i = 1; i <= n + 1; ++i) b.add("u" + num(i));
  for (int i = 1; i <= n; ++i) b.alias("v" + num(i), b["u" + num(i + 1)]);
  for (int i = 1; i <= n; ++i) {
    for (int r = 1; r <= f.occurrences(i); ++r) b.add("y" + num(i) + "," + num(r));
    for (int r = 1; r <= f.occurrences(-i); ++r) b.add("z" + num(i) + "," + num(r));
  }
}

// The two (u_i, v_i)-paths through the positive and negative occurrences.
std::vector<VertexId> occurrence_path(const Builder& b, const CnfFormula& f, int i, bool positive) {
  std::vector<VertexId> path{b["u" + num(i)]};
  const int count = f.occurrences(positive ? i : -i);
  for (int r = 1; r <= count; ++r) path.push_back(b[(positive ? "y" : "z") + num(i) + "," + num(r)]);
  path.push_back(b["v" + num(i)]);
  return path;
}

std::vector<VertexId> occurrence_path(const GadgetOutput& g, const CnfFormula& f, int i, bool positive) {
  std::vector<VertexId> path{g.vertex("u" + num(i))};
  const int count = f.occurrences(positive ? i : -i);
  for (int r = 1; r <= count; ++r) path.push_back(g.vertex((positive ? "y" : "z") + num(i) + "," + num(r)));
  path.push_back(g.vertex("v" + num(i)));
  return path;
}

void add_path(Builder& b, const std::vector<VertexId>& path, Capacity c) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) b.arc(path[i], path[i + 1], c);
}

nlohmann::json formula_json(const CnfFormula& f) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const Clause& c : f.clauses) clauses.push_back({c[0], c[1], c[2]});
  return {{"variables", f.variable_count}, {"clauses", clauses}};
}

void check_name(const GadgetOutput& g, const std::string& name) {
  if (g.name != name) throw InputError("expected a " + name + " gadget, got " + g.name);
}

}  // namespace

CnfFormula pad_both_polarities(const CnfFormula& f) {
  f.validate();
  CnfFormula out = f;
  for (int i = 1; i <= f.variable_count; ++i) {
    if (f.occurrences(i) == 0 || f.occurrences(-i) == 0) out.clauses.push_back({i, -i, i});
  }
  return out;
}

GadgetOutput gen_sat_deg_network(const CnfFormula& input, int k) {
  if (k < 2) throw InputError("sat_deg gadget needs k >= 2");
  if (input.variable_count < 1) throw InputError("formula has no variables");
  const CnfFormula f = pad_both_polarities(input);
  const int n = f.variable_count;
  const auto m = static_cast<Capacity>(f.clauses.size());
  const Capacity spine = 2 * m + 1;
  const Capacity target = m + (k - 1) * spine;

  Builder b;
  const VertexId s = b.add("s");
  add_variable_vertices(b, f);
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) b.add("y" + num(static_cast<int>(j)));
  const VertexId t = b.add("t");
  if (k >= 3) {
    for (int i = 1; i <= n; ++i) {
      for (int l = 1; l < k; ++l) b.add("r" + num(i) + "," + num(l));
    }
  }

  b.arc(s, b["u1"], target);
  for (int i = 1; i <= n; ++i) {
    const VertexId u = b["u" + num(i)];
    const VertexId v = b["v" + num(i)];
    if (k == 2) {
      b.arc(u, v, spine);
    } else {
      for (int l = 1; l < k; ++l) {
        const VertexId r = b["r" + num(i) + "," + num(l)];
        b.arc(u, r, spine);
        b.arc(r, v, spine);
      }
    }
    add_path(b, occurrence_path(b, f, i, true), m);
    add_path(b, occurrence_path(b, f, i, false), m);
  }
  const auto table = occurrence_table(f);
  for (std::size_t j = 0; j < table.size(); ++j) {
    const VertexId y = b["y" + num(static_cast<int>(j + 1))];
    for (const Occurrence& o : table[j]) b.arc(b[occurrence_label(o)], y, 1);
    b.arc(y, t, 1);
  }
  b.arc(b["v" + num(n)], t, (k - 1) * spine);

  nlohmann::json meta = {{"k", k},
                         {"n", n},
                         {"m", m},
                         {"target_value", target},
                         {"target", "flow of value " + std::to_string(target) +
                                        " with out-degree <= " + std::to_string(k) +
                                        " in its support iff the formula is satisfiable"},
                         {"acyclic", true},
                         {"formula", formula_json(f)}};
  return b.build("sat_deg", std::move(meta));
}

Flow sat_deg_witness(const GadgetOutput& g, const CnfFormula& input, const std::vector<bool>& assignment) {
  check_name(g, "sat_deg");
  const CnfFormula f = pad_both_polarities(input);
  check_assignment(f, assignment);
  const int n = f.variable_count;
  const int k = g.metadata.at("k").get<int>();
  const auto m = static_cast<Capacity>(f.clauses.size());
  const Capacity spine = 2 * m + 1;
  FlowBuilder x(g.network);
  x.add(g.vertex("s"), g.vertex("u1"), m + (k - 1) * spine);
  for (int i = 1; i <= n; ++i) {
    if (k == 2) {
      x.add(g.vertex("u" + num(i)), g.vertex("v" + num(i)), spine);
    } else {
      for (int l = 1; l < k; ++l) {
        x.path({g.vertex("u" + num(i)), g.vertex("r" + num(i) + "," + num(l)), g.vertex("v" + num(i))}, spine);
      }
    }
  }
  x.add(g.vertex("v" + num(n)), g.vertex("t"), (k - 1) * spine);

  // Each clause sheds one unit at the occurrence of its first true literal;
  // P runs through the occurrences made true.
  const auto table = occurrence_table(f);
  std::map<VertexId, VertexId> shed;  // occurrence vertex -> clause vertex
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Occurrence& o = table[j][first_true(f.clauses[j], assignment)];
    shed[g.vertex(occurrence_label(o))] = g.vertex("y" + num(static_cast<int>(j + 1)));
  }
  Capacity carried = m;
  for (int i = 1; i <= n; ++i) {
    const std::vector<VertexId> path = occurrence_path(g, f, i, assignment[static_cast<std::size_t>(i)]);
    for (std::size_t h = 0; h + 1 < path.size(); ++h) {
      if (const auto it = shed.find(path[h]); it != shed.end()) {
        x.path({path[h], it->second, g.vertex("t")}, 1);
        --carried;
      }
      if (carried > 0) x.add(path[h], path[h + 1], carried);
    }
  }
  return x.flow();
}

bool is_3b2(const CnfFormula& f) {
  f.validate();
  for (int i = 1; i <= f.variable_count; ++i) {
    if (f.occurrences(i) != 2 || f.occurrences(-i) != 2) return false;
  }
  return true;
}

namespace {

std::string gv(const std::string& w, int i) { return w + "^" + num(i); }

// The vertex q_j enters for an occurrence: the first positive occurrence
// enters y4 (leaving by y5), the second y1 (leaving by y2); likewise z.
std::pair<std::string, std::string> clause_entry(const Occurrence& o) {
  const std::string side = o.positive ? "y" : "z";
  return o.r == 1 ? std::make_pair(side + "4", side + "5") : std::make_pair(side + "1", side + "2");
}

}  // namespace

GadgetOutput gen_b2sat_value9_network(const CnfFormula& f) {
  if (!is_3b2(f)) throw InputError("formula is not (3,B2): every variable must occur twice in each polarity");
  const int n = f.variable_count;
  const int m = static_cast<int>(f.clauses.size());
  Builder b;
  const VertexId s = b.add("s");
  for (int i = 1; i <= n; ++i) {
    b.add(gv("u", i));
    for (int h = 1; h <= 7; ++h) b.add(gv("y" + num(h), i));
    for (int h = 1; h <= 7; ++h) b.add(gv("z" + num(h), i));
    b.add(gv("v", i));
  }
  for (int j = 1; j <= m; ++j) {
    b.add("q" + num(j));
    b.add("r" + num(j));
  }
  const VertexId t = b.add("t");

  b.arc(s, b[gv("u", 1)], 8);
  for (int i = 1; i <= n; ++i) {
    auto at = [&](const std::string& w) { return b[gv(w, i)]; };
    b.arc(at("u"), at("v"), 4);
    for (const std::string side : {"y", "z"}) {
      auto p = [&](int h) { return at(side + num(h)); };
      b.arc(at("u"), p(1), 4);
      b.arc(p(1), p(2), 4);
      b.arc(p(2), p(3), 2);
      b.arc(p(3), p(4), 2);
      b.arc(p(2), p(4), 2);
      b.arc(p(4), p(5), 4);
      b.arc(p(5), p(6), 2);
      b.arc(p(6), p(7), 2);
      b.arc(p(5), p(7), 2);
      b.arc(p(7), at("v"), 4);
    }
    if (i < n) b.arc(at("v"), b[gv("u", i + 1)], 8);
  }
  b.arc(b[gv("v", n)], t, 8);
  b.arc(s, b["q1"], 1);
  for (int j = 1; j < m; ++j) b.arc(b["r" + num(j)], b["q" + num(j + 1)], 1);
  b.arc(b["r" + num(m)], t, 1);
  const auto table = occurrence_table(f);
  for (int var = 1; var <= n; ++var) {
    for (const bool positive : {true, false}) {
      for (int r = 1; r <= 2; ++r) {
        for (std::size_t j = 0; j < table.size(); ++j) {
          for (const Occurrence& o : table[j]) {
            if (o.var != var || o.positive != positive || o.r != r) continue;
            const auto [in, out] = clause_entry(o);
            b.arc(b["q" + num(static_cast<int>(j + 1))], b[gv(in, var)], 1);
            b.arc(b[gv(out, var)], b["r" + num(static_cast<int>(j + 1))], 1);
          }
        }
      }
    }
  }
  nlohmann::json meta = {{"n", n},
                         {"m", m},
                         {"target_value", 9},
                         {"target", "flow of value 9 with out-degree <= 2 in its support iff the formula is satisfiable"},
                         {"acyclic", false},
                         {"formula", formula_json(f)}};
  return b.build("b2sat_value9", std::move(meta));
}

Flow b2sat_value9_witness(const GadgetOutput& g, const CnfFormula& f, const std::vector<bool>& assignment) {
  check_name(g, "b2sat_value9");
  check_assignment(f, assignment);
  const int n = f.variable_count;
  const int m = static_cast<int>(f.clauses.size());
  FlowBuilder x(g.network);
  x.add(g.vertex("s"), g.vertex(gv("u", 1)), 8);
  x.add(g.vertex(gv("v", n)), g.vertex("t"), 8);
  x.add(g.vertex("s"), g.vertex("q1"), 1);
  x.add(g.vertex("r" + num(m)), g.vertex("t"), 1);
  for (int j = 1; j < m; ++j) x.add(g.vertex("r" + num(j)), g.vertex("q" + num(j + 1)), 1);
  for (int i = 1; i <= n; ++i) {
    auto at = [&](const std::string& w) { return g.vertex(gv(w, i)); };
    x.add(at("u"), at("v"), 4);
    if (i < n) x.add(at("v"), g.vertex(gv("u", i + 1)), 8);
    // A true variable routes 4 units through the z side, a false one
    // through the y side.
    const std::string side = assignment[static_cast<std::size_t>(i)] ? "z" : "y";
    auto p = [&](int h) { return at(side + num(h)); };
    x.path({at("u"), p(1), p(2)}, 4);
    x.path({p(2), p(3), p(4)}, 2);
    x.add(p(2), p(4), 2);
    x.add(p(4), p(5), 4);
    x.path({p(5), p(6), p(7)}, 2);
    x.add(p(5), p(7), 2);
    x.add(p(7), at("v"), 4);
  }
  const auto table = occurrence_table(f);
  for (int j = 1; j <= m; ++j) {
    const Occurrence& o = table[static_cast<std::size_t>(j - 1)][first_true(f.clauses[static_cast<std::size_t>(j - 1)], assignment)];
    const auto [in, out] = clause_entry(o);
    x.path({g.vertex("q" + num(j)), g.vertex(gv(in, o.var)), g.vertex(gv(out, o.var)), g.vertex("r" + num(j))}, 1);
  }
  return x.flow();
}

GadgetOutput gen_lambda_counterexample(int lambda) {
  if (lambda < 3) throw InputError("lambda counterexample needs lambda >= 3");
  Builder b;
  const VertexId s = b.add("s");
  for (int i = 1; i <= lambda - 2; ++i) {
    b.add("u" + num(i));
    b.add("v" + num(i));
  }
  const VertexId y = b.add("y");
  const VertexId z = b.add("z");
  const VertexId t = b.add("t");
  for (int i = 1; i <= lambda - 2; ++i) {
    b.arc(s, b["u" + num(i)], 1);
    b.arc(b["u" + num(i)], b["v" + num(i)], 1);
    b.arc(b["v" + num(i)], t, 1);
  }
  b.arc(s, y, 1);
  b.arc(y, t, lambda - 1);
  b.arc(s, z, lambda - 1);
  b.arc(z, t, 1);
  for (int i = 1; i <= lambda - 2; ++i) {
    b.arc(b["u" + num(i)], y, 1);
    b.arc(z, b["v" + num(i)], 1);
  }
  nlohmann::json meta = {{"lambda", lambda},
                         {"max_flow", 2 * lambda - 2},
                         {"target_value", 2 * lambda - 2},
                         {"max_support_lambda", 2},
                         {"target", "arc connectivity lambda, yet every maximum flow has a support with arc connectivity <= 2"}};
  return b.build("lambda", std::move(meta));
}

LinkageInstance toy_linkage(bool positive) {
  // Vertices s1=0, s2=1, t1=2, t2=3.
  if (positive) return {Digraph(4, {{0, 2}, {1, 3}}), 0, 1, 2, 3};
  return {Digraph(4, {{1, 0}, {0, 2}, {2, 3}}), 0, 1, 2, 3};
}

GadgetOutput gen_psplit_hard(int p, const LinkageInstance& inst, PSplitFamily family) {
  if (p < 2) throw InputError("psplit gadget needs p >= 2");
  const Digraph& d = inst.d;
  const std::vector<VertexId> ends{inst.s1, inst.s2, inst.t1, inst.t2};
  for (VertexId v : ends) {
    if (!d.valid_vertex(v)) throw InputError("linkage terminal out of range");
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (ends[i] == ends[j]) throw InputError("linkage terminals must be distinct");
    }
  }
  if (!reachable_from(d, inst.s2)[static_cast<std::size_t>(inst.t2)]) {
    throw InputError("linkage instance has no s2-t2 path");
  }

  int copies = 0;
  bool direct = false;
  Capacity o_plus = 0;
  Capacity o_minus = 0;
  Capacity inner = 0;
  Capacity first = 0;
  int q = 0;
  if (family == PSplitFamily::kRho1) {
    q = p / 4;
    const int rest = p % 4;
    copies = rest <= 1 ? 2 * q : 2 * q + 1;
    direct = rest % 2 == 1;
    const Capacity plus[] = {6LL * q, 6LL * q + 1, 6LL * q + 3, 6LL * q + 4};
    const Capacity minus[] = {5LL * q, 5LL * q + 1, 5LL * q + 2, 5LL * q + 3};
    o_plus = plus[rest];
    o_minus = minus[rest];
    inner = 2;
    first = 1;
  } else {
    q = p / 2;
    copies = q;
    direct = p % 2 == 1;
    o_plus = 5LL * q + (direct ? 1 : 0);
    o_minus = 4LL * q + (direct ? 1 : 0);
    inner = 3;
    first = 2;
  }

  Builder b;
  const VertexId s = b.add("s");
  nlohmann::json layout = nlohmann::json::array();
  std::vector<VertexId> base;
  for (int i = 1; i <= copies; ++i) {
    base.push_back(b.add());
    for (VertexId v = 1; v < d.vertex_count(); ++v) b.add();
    b.alias("s1^" + num(i), base.back() + inst.s1);
    b.alias("s2^" + num(i), base.back() + inst.s2);
    b.alias("t1^" + num(i), base.back() + inst.t1);
    b.alias("t2^" + num(i), base.back() + inst.t2);
  }
  const VertexId t = b.add("t");
  for (int i = 0; i < copies; ++i) {
    const VertexId off = base[static_cast<std::size_t>(i)];
    ArcId arc_offset = -1;
    for (ArcId a = 0; a < d.arc_count(); ++a) {
      const ArcId id = b.arc(off + d.arc(a).tail, off + d.arc(a).head, inner);
      if (a == 0) arc_offset = id;
    }
    b.arc(s, off + inst.s1, first);
    b.arc(s, off + inst.s2, inner);
    b.arc(off + inst.t1, t, first);
    b.arc(off + inst.t2, t, inner);
    layout.push_back({{"vertex_offset", off}, {"arc_offset", arc_offset}});
  }
  if (direct) b.arc(s, t, 1);
  nlohmann::json meta = {{"p", p},
                         {"family", family == PSplitFamily::kRho1 ? "rho1" : "rho2"},
                         {"q", q},
                         {"copies", layout},
                         {"direct_arc", direct},
                         {"o_plus", o_plus},
                         {"o_minus", o_minus},
                         {"target_value", o_plus},
                         {"target", "p-decomposable optimum >= o_plus for a positive linkage instance, <= o_minus for a negative one"}};
  return b.build("psplit_hard", std::move(meta));
}

Flow psplit_hard_witness(const GadgetOutput& g, const LinkageInstance& inst,
                         const std::vector<ArcId>& p1, const std::vector<ArcId>& p2) {
  check_name(g, "psplit_hard");
  const Digraph& d = inst.d;
  auto check_path = [&](const std::vector<ArcId>& path, VertexId from, VertexId to) {
    VertexId at = from;
    for (ArcId a : path) {
      if (a < 0 || a >= d.arc_count() || d.arc(a).tail != at) throw InputError("linkage path is not a walk");
      at = d.arc(a).head;
    }
    if (at != to) throw InputError("linkage path has the wrong end");
  };
  check_path(p1, inst.s1, inst.t1);
  check_path(p2, inst.s2, inst.t2);
  for (ArcId a : p1) {
    if (std::find(p2.begin(), p2.end(), a) != p2.end()) throw InputError("linkage paths share an arc");
  }
  const bool rho1 = g.metadata.at("family") == "rho1";
  const Capacity small = rho1 ? 1 : 2;
  const Capacity large = rho1 ? 2 : 3;
  std::vector<Capacity> x(static_cast<std::size_t>(g.network.arc_count()), 0);
  const VertexId s = g.network.source();
  const VertexId t = g.network.sink();
  for (const auto& copy : g.metadata.at("copies")) {
    const auto off = copy.at("vertex_offset").get<VertexId>();
    const auto arc_off = copy.at("arc_offset").get<ArcId>();
    for (ArcId a : p1) x[static_cast<std::size_t>(arc_off + a)] += small;
    for (ArcId a : p2) x[static_cast<std::size_t>(arc_off + a)] += large;
    // The four terminal arcs follow the copy's arcs in construction order.
    const ArcId term = arc_off + d.arc_count();
    x[static_cast<std::size_t>(term)] += small;
    x[static_cast<std::size_t>(term + 1)] += large;
    x[static_cast<std::size_t>(term + 2)] += small;
    x[static_cast<std::size_t>(term + 3)] += large;
    (void)off;
  }
  if (g.metadata.at("direct_arc").get<bool>()) {
    for (ArcId a : g.network.digraph().out_arcs(s)) {
      if (g.network.arc(a).head == t) x[static_cast<std::size_t>(a)] += 1;
    }
  }
  return make_flow(g.network, std::move(x));
}

GadgetOutput gen_vertex_disjoint_hard(const CnfFormula& input) {
  if (input.variable_count < 1) throw InputError("formula has no variables");
  const CnfFormula f = pad_both_polarities(input);
  const int n = f.variable_count;
  const int m = static_cast<int>(f.clauses.size());
  Builder b;
  const VertexId s = b.add("s");
  add_variable_vertices(b, f);
  for (int j = 1; j <= m; ++j) {
    b.add("y'" + num(j));
    b.add("y" + num(j));
  }
  const VertexId t = b.add("t");
  b.arc(s, b["u1"], 1);
  for (int i = 1; i <= n; ++i) {
    add_path(b, occurrence_path(b, f, i, true), 1);
    add_path(b, occurrence_path(b, f, i, false), 1);
  }
  const auto table = occurrence_table(f);
  for (int j = 1; j <= m; ++j) {
    const VertexId yp = b["y'" + num(j)];
    const VertexId y = b["y" + num(j)];
    b.arc(s, yp, 2);
    for (const Occurrence& o : table[static_cast<std::size_t>(j - 1)]) b.arc(yp, b[occurrence_label(o)], 2);
    for (const Occurrence& o : table[static_cast<std::size_t>(j - 1)]) b.arc(b[occurrence_label(o)], y, 2);
    b.arc(y, t, 2);
  }
  b.arc(b["v" + num(n)], t, 1);
  nlohmann::json meta = {{"n", n},
                         {"m", m},
                         {"p", m + 1},
                         {"target_value", 2 * m + 1},
                         {"target", "flow of value 2m+1 made of m+1 internally vertex-disjoint path-flows iff the formula is satisfiable"},
                         {"acyclic", true},
                         {"formula", formula_json(f)}};
  return b.build("vertex_disjoint_hard", std::move(meta));
}

Flow vertex_disjoint_witness(const GadgetOutput& g, const CnfFormula& input,
                             const std::vector<bool>& assignment) {
  check_name(g, "vertex_disjoint_hard");
  const CnfFormula f = pad_both_polarities(input);
  check_assignment(f, assignment);
  FlowBuilder x(g.network);
  const VertexId s = g.vertex("s");
  const VertexId t = g.vertex("t");
  const auto table = occurrence_table(f);
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Occurrence& o = table[j][first_true(f.clauses[j], assignment)];
    const std::string c = num(static_cast<int>(j + 1));
    x.path({s, g.vertex("y'" + c), g.vertex(occurrence_label(o)), g.vertex("y" + c), t}, 2);
  }
  // The unit path avoids the true literals: it takes the negative side of a
  // true variable.
  std::vector<VertexId> path{s};
  for (int i = 1; i <= f.variable_count; ++i) {
    const auto side = occurrence_path(g, f, i, !assignment[static_cast<std::size_t>(i)]);
    path.insert(path.end(), side.begin() + 1, side.end());
  }
  path.insert(path.begin() + 1, g.vertex("u1"));
  path.push_back(t);
  x.path(path, 1);
  return x.flow();
}

GadgetOutput gen_separable_hard(const Network& net, int q) {
  if (q < 1) throw InputError("q must be >= 1");
  if (!is_acyclic(net.digraph())) throw PreconditionError("separable gadget needs an acyclic network");
  for (Capacity c : net.capacities()) {
    if (c != 1 && c != 2) throw PreconditionError("separable gadget needs capacities in {1, 2}");
  }
  Builder b;
  const VertexId s = net.source();
  const VertexId t = net.sink();
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v == s) {
      b.add("s");
    } else if (v == t) {
      b.add("t");
    } else {
      b.add("v" + num(v));
    }
  }
  for (ArcId a = 0; a < net.arc_count(); ++a) b.arc(net.arc(a).tail, net.arc(a).head, net.capacity(a));
  int inner = 0;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v == s || v == t) continue;
    ++inner;
    for (int i = 1; i < q; ++i) {
      const VertexId minus = b.add("v" + num(v) + "-" + num(i));
      const VertexId plus = b.add("v" + num(v) + "+" + num(i));
      b.arc(s, minus, 2);
      b.arc(minus, v, 2);
      b.arc(v, plus, 2);
      b.arc(plus, t, 2);
    }
  }
  const auto offset = static_cast<Capacity>(2) * inner * (q - 1);
  nlohmann::json meta = {{"q", q},
                         {"p", net.digraph().out_degree(s)},
                         {"inner_vertices", inner},
                         {"offset", offset},
                         {"target", "q-vertex-separable optimum = vertex-disjoint optimum (p = d+(s)) of the input + offset"},
                         {"acyclic", true}};
  return b.build("separable_hard", std::move(meta));
}

GadgetOutput gen_inout_tail(const GadgetOutput& g) {
  check_name(g, "sat_deg");
  if (g.metadata.at("k").get<int>() != 2) throw InputError("in/out tail needs the k = 2 sat_deg gadget");
  const int m = g.metadata.at("m").get<int>();
  const Network& net = g.network;
  const VertexId t = net.sink();
  GadgetOutput out;
  out.name = "inout_tail";
  out.labels = g.labels;
  out.metadata = g.metadata;
  out.metadata["in_degree_bound"] = 2;
  std::map<VertexId, int> clause_of;
  for (int j = 1; j <= m; ++j) clause_of[g.vertex("y" + num(j))] = j;
  VertexId next = net.vertex_count();
  std::vector<VertexId> chain(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m; ++j) {
    chain[static_cast<std::size_t>(j)] = next;
    out.labels["t" + num(j)] = next++;
  }
  std::vector<Arc> arcs;
  std::vector<Capacity> caps;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    Arc e = net.arc(a);
    if (e.head == t && clause_of.count(e.tail)) e.head = chain[static_cast<std::size_t>(clause_of[e.tail])];
    arcs.push_back(e);
    caps.push_back(net.capacity(a));
  }
  for (int j = 1; j < m; ++j) {
    arcs.push_back({chain[static_cast<std::size_t>(j)], chain[static_cast<std::size_t>(j + 1)]});
    caps.push_back(j);
  }
  arcs.push_back({chain[static_cast<std::size_t>(m)], t});
  caps.push_back(m);
  out.network = Network(Digraph(next, std::move(arcs)), net.source(), t, std::move(caps));
  return out;
}

}  // namespace flownet
