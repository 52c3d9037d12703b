#include "ftc/blueprint.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ftc/steane.hpp"

namespace ftc {

const char* node_role_name(NodeRole role) {
  switch (role) {
    case NodeRole::Input: return "input";
    case NodeRole::EncodeZero: return "encode_zero";
    case NodeRole::EncodePlus: return "encode_plus";
    case NodeRole::Output: return "output";
    case NodeRole::Internal: return "internal";
  }
  throw std::invalid_argument("bad node role");
}

NodeRole node_role_from_name(const std::string& name) {
  if (name == "input") return NodeRole::Input;
  if (name == "encode_zero") return NodeRole::EncodeZero;
  if (name == "encode_plus") return NodeRole::EncodePlus;
  if (name == "output") return NodeRole::Output;
  if (name == "internal") return NodeRole::Internal;
  throw std::invalid_argument("unknown node role: " + name);
}

const BlueprintNode* GadgetBlueprint::find_node(int id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize_blueprint(const GadgetBlueprint& bp) {
  std::ostringstream out;
  out << "# " << bp.name << " level " << bp.level << "\n";
  for (const auto& n : bp.nodes)
    out << "NODE " << n.id << ' ' << node_role_name(n.role) << ' ' << n.level << "\n";
  for (const auto& s : bp.schedule) {
    switch (s.kind) {
      case StepKind::Gate:
        out << "GATE " << gate_name(s.gate);
        for (int id : s.a) out << ' ' << id;
        for (int id : s.b) out << ' ' << id;
        break;
      case StepKind::BareCz:
        out << "BARECZ " << s.a.at(0) << ' ' << s.b.at(0);
        break;
      case StepKind::Measure:
        out << "MEASURE " << s.basis;
        for (int id : s.a) out << ' ' << id;
        break;
      case StepKind::Check:
        out << "CHECK " << s.name;
        for (int id : s.a) out << ' ' << id;
        break;
    }
    out << "\n";
  }
  return out.str();
}

GadgetBlueprint parse_blueprint(const std::string& text, const std::string& name, int level) {
  GadgetBlueprint bp;
  bp.name = name;
  bp.level = level;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("blueprint line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string record;
    if (!(fields >> record)) continue;  // blank
    if (record[0] == '#') continue;     // comment
    auto read_int = [&](const char* what) {
      long long v;
      if (!(fields >> v)) fail(std::string("missing ") + what);
      return static_cast<int>(v);
    };
    auto read_ids = [&] {
      std::vector<int> ids;
      long long v;
      while (fields >> v) ids.push_back(static_cast<int>(v));
      if (ids.empty()) fail("expected node ids");
      return ids;
    };
    if (record == "NODE") {
      BlueprintNode n;
      n.id = read_int("node id");
      std::string role;
      if (!(fields >> role)) fail("missing role");
      n.role = node_role_from_name(role);
      n.level = read_int("node level");
      bp.nodes.push_back(n);
    } else if (record == "GATE") {
      BlueprintStep s;
      s.kind = StepKind::Gate;
      std::string kind;
      if (!(fields >> kind)) fail("missing gate kind");
      s.gate = gate_from_name(kind);
      auto ids = read_ids();
      if (gate_is_two_qubit(s.gate)) {
        if (ids.size() % 2 != 0) fail("two-qubit gate needs an even id list");
        s.a.assign(ids.begin(), ids.begin() + ids.size() / 2);
        s.b.assign(ids.begin() + ids.size() / 2, ids.end());
      } else {
        s.a = ids;
      }
      bp.schedule.push_back(std::move(s));
    } else if (record == "BARECZ") {
      BlueprintStep s;
      s.kind = StepKind::BareCz;
      s.gate = Gate::CZ;
      s.a.push_back(read_int("first node"));
      s.b.push_back(read_int("second node"));
      int extra;
      if (fields >> extra) fail("BARECZ takes exactly two ids");
      bp.schedule.push_back(std::move(s));
    } else if (record == "MEASURE") {
      BlueprintStep s;
      s.kind = StepKind::Measure;
      std::string basis;
      if (!(fields >> basis)) fail("missing basis");
      if (basis != "X" && basis != "Z") fail("basis must be X or Z");
      s.basis = basis[0];
      s.a = read_ids();
      bp.schedule.push_back(std::move(s));
    } else if (record == "CHECK") {
      BlueprintStep s;
      s.kind = StepKind::Check;
      if (!(fields >> s.name)) fail("missing checkpoint name");
      s.a = read_ids();
      bp.schedule.push_back(std::move(s));
    } else {
      fail("unknown record " + record);
    }
    if (!fields.eof()) {
      std::string trailing;
      if (fields >> trailing) fail("trailing fields");
    }
  }
  // Outputs: surviving (never measured) nodes, one group each.
  std::set<int> measured;
  for (const auto& s : bp.schedule)
    if (s.kind == StepKind::Measure) measured.insert(s.a.begin(), s.a.end());
  for (const auto& n : bp.nodes)
    if (!measured.count(n.id)) bp.outputs.push_back({n.id});
  return bp;
}

// ---------------------------------------------------------------------------
// Lint

std::vector<std::string> lint_blueprint(const GadgetBlueprint& bp) {
  std::vector<std::string> problems;
  auto complain = [&](const std::string& msg) { problems.push_back(bp.name + ": " + msg); };

  std::set<int> ids;
  for (const auto& n : bp.nodes) {
    if (!ids.insert(n.id).second) complain("duplicate node id " + std::to_string(n.id));
    if (n.level < 1) complain("node level < 1");
  }
  auto known = [&](int id) { return ids.count(id) != 0; };

  std::map<int, int> bare_degree;
  std::set<int> measured;
  // For the output-verification rule: which nodes each node was directly
  // coupled to by a two-qubit step, and which checks gate which nodes.
  std::map<int, std::set<int>> coupled;

  for (std::size_t si = 0; si < bp.schedule.size(); ++si) {
    const auto& s = bp.schedule[si];
    const std::string where = "step " + std::to_string(si);
    auto check_known = [&](const std::vector<int>& v) {
      for (int id : v)
        if (!known(id)) complain(where + ": unknown node " + std::to_string(id));
    };
    check_known(s.a);
    check_known(s.b);
    switch (s.kind) {
      case StepKind::Gate:
      case StepKind::BareCz: {
        const bool two = s.kind == StepKind::BareCz || gate_is_two_qubit(s.gate);
        if (two) {
          if (s.a.size() != s.b.size() || s.a.empty())
            complain(where + ": operand lists must pair up");
          for (std::size_t i = 0; i < std::min(s.a.size(), s.b.size()); ++i) {
            if (s.a[i] == s.b[i]) complain(where + ": node coupled to itself");
            coupled[s.a[i]].insert(s.b[i]);
            coupled[s.b[i]].insert(s.a[i]);
            if (s.kind == StepKind::BareCz) {
              ++bare_degree[s.a[i]];
              ++bare_degree[s.b[i]];
            }
          }
        } else if (!s.b.empty()) {
          complain(where + ": single-qubit gate with paired operands");
        }
        for (int id : s.a)
          if (measured.count(id)) complain(where + ": gate on measured node " + std::to_string(id));
        for (int id : s.b)
          if (measured.count(id)) complain(where + ": gate on measured node " + std::to_string(id));
        break;
      }
      case StepKind::Measure:
        for (int id : s.a) {
          if (measured.count(id)) complain(where + ": node measured twice");
          measured.insert(id);
        }
        break;
      case StepKind::Check:
        if (s.name.empty()) complain(where + ": unnamed checkpoint");
        for (int id : s.a)
          if (!measured.count(id))
            complain(where + ": check reads unmeasured node " + std::to_string(id));
        if (s.a.size() != 1 && s.a.size() != steane::kBlock)
          complain(where + ": checks read 1 or 7 syndrome sources");
        break;
    }
  }

  for (const auto& [id, deg] : bare_degree)
    if (deg > 1)
      complain("node " + std::to_string(id) + " has " + std::to_string(deg) + " bare-CZ edges");

  // Every output node downstream of >= 2 checkpoints over directly coupled,
  // measured nodes.
  for (const auto& group : bp.outputs) {
    for (int out : group) {
      const auto* node = bp.find_node(out);
      if (!node) continue;
      if (node->role != NodeRole::Output) continue;
      if (measured.count(out)) complain("output node " + std::to_string(out) + " was measured");
      int guards = 0;
      for (const auto& s : bp.schedule) {
        if (s.kind != StepKind::Check) continue;
        bool touches = false;
        for (int src : s.a)
          if (coupled[out].count(src)) touches = true;
        if (touches) ++guards;
      }
      if (guards < 2)
        complain("output node " + std::to_string(out) + " has only " + std::to_string(guards) +
                 " verification checkpoints");
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

/// Incrementally assembled blueprint with helpers shared by the builders.
struct Builder {
  GadgetBlueprint bp;
  int next_id = 0;
  int next_check = 0;

  int node(NodeRole role, int level = 1) {
    bp.nodes.push_back({next_id, role, level});
    return next_id++;
  }
  std::vector<int> group(NodeRole role, int level = 1) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < steane::kBlock; ++i) ids.push_back(node(role, level));
    return ids;
  }
  void gate(Gate g, std::vector<int> a, std::vector<int> b = {}) {
    bp.schedule.push_back({StepKind::Gate, g, 'X', "", std::move(a), std::move(b)});
  }
  void bare_cz(int a, int b) {
    bp.schedule.push_back({StepKind::BareCz, Gate::CZ, 'X', "", {a}, {b}});
  }
  void bare_cz(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) bare_cz(a[i], b[i]);
  }
  void measure(char basis, std::vector<int> ids) {
    bp.schedule.push_back({StepKind::Measure, Gate::CZ, basis, "", std::move(ids), {}});
  }
  void check(const std::string& name, std::vector<int> ids) {
    bp.schedule.push_back(
        {StepKind::Check, Gate::CZ, 'X', name + "_" + std::to_string(next_check++),
         std::move(ids), {}});
  }

  /// One Steane extraction detecting Z errors on `data`: a verified |0bar>
  /// ancilla couples through CNOT(anc -> data) and is read out in X.
  void z_round(const std::vector<int>& data, const std::string& tag) {
    auto anc = many(NodeRole::EncodeZero, data.size());
    gate(Gate::CNOT, anc, data);
    measure('X', anc);
    check(tag, anc);
  }
  /// One extraction detecting X errors on `data`: a verified |+bar> ancilla
  /// is written through CNOT(data -> anc) and read out in Z.
  void x_round(const std::vector<int>& data, const std::string& tag) {
    auto anc = many(NodeRole::EncodePlus, data.size());
    gate(Gate::CNOT, data, anc);
    measure('Z', anc);
    check(tag, anc);
  }
  std::vector<int> many(NodeRole role, std::size_t count) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < count; ++i) ids.push_back(node(role));
    return ids;
  }
};

std::vector<int> as_group(int id) { return {id}; }

/// Verification half of the single-verified CZ: one syndrome round per data
/// block, extracted through the gate (Z errors on one side flag the X errors
/// that crossed from the other).
void append_single_verification(Builder& b, const std::vector<int>& qa,
                                const std::vector<int>& qb) {
  b.z_round(qa, "vz_a");
  b.z_round(qb, "vz_b");
}

/// Verification half of the double-verified CZ: per block a Z round and an X
/// round, each ancilla itself cross-checked by a checker block before (or
/// after) it touches the data, so ancilla errors "are even detected".
void append_double_verification(Builder& b, const std::vector<int>& qa,
                                const std::vector<int>& qb) {
  for (const auto* data : {&qa, &qb}) {
    // Z round, ancilla |0bar> X-checked by a |+bar> checker first.
    auto anc1 = b.many(NodeRole::EncodeZero, data->size());
    auto c1 = b.many(NodeRole::EncodePlus, data->size());
    b.gate(Gate::CNOT, anc1, c1);
    b.measure('Z', c1);
    b.check("va_x", c1);
    b.gate(Gate::CNOT, anc1, *data);
    b.measure('X', anc1);
    b.check("vz", anc1);
    // X round, ancilla |+bar> Z-checked by a |0bar> checker first.
    auto anc2 = b.many(NodeRole::EncodePlus, data->size());
    auto c2 = b.many(NodeRole::EncodeZero, data->size());
    b.gate(Gate::CNOT, c2, anc2);
    b.measure('X', c2);
    b.check("va_z", c2);
    b.gate(Gate::CNOT, *data, anc2);
    b.measure('Z', anc2);
    b.check("vx", anc2);
  }
}

GadgetBlueprint make_cz(bool double_verified, int level) {
  if (level != 1 && level != 2)
    throw std::invalid_argument("verified CZ supported at levels 1 and 2");
  Builder b;
  b.bp.name = double_verified ? "cz_double" : "cz_single";
  b.bp.level = level;
  if (level == 1) {
    const int qa = b.node(NodeRole::Input);
    const int qb = b.node(NodeRole::Input);
    b.bare_cz(qa, qb);
    if (double_verified)
      append_double_verification(b, as_group(qa), as_group(qb));
    else
      append_single_verification(b, as_group(qa), as_group(qb));
    b.bp.outputs = {{qa}, {qb}};
  } else {
    // Level-2 blocks are groups of seven level-1 blocks; every verified
    // preparation (inputs and ancilla groups alike) is a composite encode
    // sub-run, marked for the executor via prep groups.
    const auto qa = b.group(NodeRole::Input);
    const auto qb = b.group(NodeRole::Input);
    b.bp.prep_groups.push_back({true, qa});
    b.bp.prep_groups.push_back({true, qb});
    b.bare_cz(qa, qb);
    // The extraction rounds create encode-role groups below; collect them
    // afterwards into prep groups so they are built as verified level-2
    // ancillas rather than independent level-1 blocks.
    const std::size_t first_anc_node = b.bp.nodes.size();
    if (double_verified)
      append_double_verification(b, qa, qb);
    else
      append_single_verification(b, qa, qb);
    for (std::size_t i = first_anc_node; i + steane::kBlock <= b.bp.nodes.size();
         i += steane::kBlock) {
      GadgetBlueprint::PrepGroup g;
      g.plus = b.bp.nodes[i].role == NodeRole::EncodePlus;
      for (std::size_t k = 0; k < steane::kBlock; ++k)
        g.nodes.push_back(b.bp.nodes[i + k].id);
      b.bp.prep_groups.push_back(std::move(g));
    }
    b.bp.outputs = {qa, qb};
  }
  b.bp.output_stabilizers = {"XZ", "ZX"};
  return b.bp;
}

}  // namespace

GadgetBlueprint make_cz_single(int level) { return make_cz(false, level); }
GadgetBlueprint make_cz_double(int level) { return make_cz(true, level); }

GadgetBlueprint make_hexa(int node_level) {
  if (node_level != 1)
    throw std::invalid_argument("hexa construction simulated with level-1 blocks only");
  Builder b;
  b.bp.name = "hexa";
  b.bp.level = node_level + 1;

  // Chain carriers. Interior positions are teleported twice between their
  // two chain edges so every block instance touches at most one bare CZ
  // (and the double hop cancels the teleportation H exactly).
  std::array<int, 6> carrier{};
  carrier[0] = b.node(NodeRole::Output);
  for (int pos = 1; pos < 5; ++pos) carrier[pos] = b.node(NodeRole::Internal);
  carrier[5] = b.node(NodeRole::Output);

  auto hop = [&](int pos, NodeRole target_role) {
    const int src = carrier[std::size_t(pos)];
    const int dst = b.node(target_role);
    b.gate(Gate::CZ, {src}, {dst});
    b.measure('X', {src});
    b.check("tp", {src});
    carrier[std::size_t(pos)] = dst;
  };
  auto edge = [&](int left, int right, bool double_verified) {
    b.bare_cz(carrier[std::size_t(left)], carrier[std::size_t(right)]);
    if (double_verified)
      append_double_verification(b, as_group(carrier[std::size_t(left)]),
                                 as_group(carrier[std::size_t(right)]));
    else
      append_single_verification(b, as_group(carrier[std::size_t(left)]),
                                 as_group(carrier[std::size_t(right)]));
  };

  // Edge pattern D S D S D: ends doubly verified directly, interior outputs
  // doubly guarded by their own edge round plus the incoming teleport check.
  edge(0, 1, true);
  hop(1, NodeRole::Internal);
  hop(1, NodeRole::Output);
  edge(1, 2, false);
  hop(2, NodeRole::Internal);
  hop(2, NodeRole::Output);
  edge(2, 3, true);
  hop(3, NodeRole::Internal);
  hop(3, NodeRole::Output);
  edge(3, 4, false);
  hop(4, NodeRole::Internal);
  hop(4, NodeRole::Output);
  edge(4, 5, true);

  for (int pos = 0; pos < 6; ++pos) b.bp.outputs.push_back({carrier[std::size_t(pos)]});
  // K_i = Z_{i-1} X_i Z_{i+1} of the 6-qubit linear cluster.
  b.bp.output_stabilizers = {"XZIIII", "ZXZIII", "IZXZII", "IIZXZI", "IIIZXZ", "IIIIZX"};
  return b.bp;
}

GadgetBlueprint make_encode(bool plus, int node_level) {
  if (node_level != 1)
    throw std::invalid_argument("code-ancilla construction simulated with level-1 blocks only");
  Builder b;
  b.bp.name = plus ? "encode_plus" : "encode_zero";
  b.bp.level = node_level + 1;

  // Data blocks: the logical |0> encoder one level up, with verified level-1
  // preparations at the pivots (|+bar>) and elsewhere (|0bar>).
  std::vector<int> data;
  for (std::size_t k = 0; k < steane::kBlock; ++k)
    data.push_back(b.node(k == 0 || k == 1 || k == 3 ? NodeRole::EncodePlus : NodeRole::EncodeZero));
  for (const auto& op : steane::encoder_ops()) {
    if (op.is_h) continue;  // pivots start as |+bar> directly
    b.gate(Gate::CNOT, {data[op.a]}, {data[op.b]});
  }
  if (plus) b.gate(Gate::H, data);

  // Level-2 verification: one Z round and one X round against bare level-2
  // code ancillas; the group checks read corrected level-1 logical outcomes.
  auto bare_block = [&](bool anc_plus) {
    std::vector<int> blk;
    for (std::size_t k = 0; k < steane::kBlock; ++k)
      blk.push_back(b.node(k == 0 || k == 1 || k == 3 ? NodeRole::EncodePlus : NodeRole::EncodeZero));
    for (const auto& op : steane::encoder_ops()) {
      if (op.is_h) continue;
      b.gate(Gate::CNOT, {blk[op.a]}, {blk[op.b]});
    }
    if (anc_plus) b.gate(Gate::H, blk);
    return blk;
  };
  auto az = bare_block(false);
  b.gate(Gate::CNOT, az, data);
  b.measure('X', az);
  b.check("z2", az);
  auto ax = bare_block(true);
  b.gate(Gate::CNOT, data, ax);
  b.measure('Z', ax);
  b.check("x2", ax);

  b.bp.outputs = {data};
  b.bp.output_stabilizers = {plus ? "X" : "Z"};
  return b.bp;
}

const std::vector<GadgetBlueprint>& shipped_blueprints() {
  static const std::vector<GadgetBlueprint> all = {
      make_cz_single(1), make_cz_double(1), make_cz_single(2), make_cz_double(2),
      make_hexa(1),      make_encode(false, 1), make_encode(true, 1),
  };
  return all;
}

GadgetBlueprint blueprint_for(const std::string& gadget, int level) {
  if (gadget == "cz_single") return make_cz_single(level);
  if (gadget == "cz_double") return make_cz_double(level);
  if (gadget == "hexa") return make_hexa(level - 1);
  if (gadget == "encode_zero") return make_encode(false, level - 1);
  if (gadget == "encode_plus") return make_encode(true, level - 1);
  throw std::invalid_argument("unknown gadget: " + gadget);
}

}  // namespace ftc
