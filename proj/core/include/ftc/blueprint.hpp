#pragma once

#include <string>
#include <vector>

#include "ftc/tableau.hpp"

namespace ftc {

/// Preparation/role marker of one 7-qubit code block inside a gadget.
///  - input:        supplied by the caller (standalone runs prepare |+bar>)
///  - encode_zero:  verified |0bar> preparation, retried until its internal
///                  checks pass
///  - encode_plus:  verified |+bar> preparation, retried likewise
///  - internal:     verified |+bar> used as a teleportation hop, measured
///  - output:       verified |+bar> that survives as part of the product
enum class NodeRole { Input, EncodeZero, EncodePlus, Output, Internal };

const char* node_role_name(NodeRole role);
NodeRole node_role_from_name(const std::string& name);

struct BlueprintNode {
  int id = 0;
  NodeRole role = NodeRole::Internal;
  int level = 1;  // concatenation level this block represents
};

enum class StepKind { Gate, BareCz, Measure, Check };

/// One schedule entry. Gates act transversally: operand lists `a` (and `b`
/// for two-qubit kinds) hold node ids paired elementwise.
struct BlueprintStep {
  StepKind kind = StepKind::Gate;
  Gate gate = Gate::CZ;    // Gate steps
  char basis = 'X';        // Measure steps, 'X' or 'Z'
  std::string name;        // Check steps: checkpoint id
  std::vector<int> a;
  std::vector<int> b;
};

/// Declarative gadget description: blocks, transversal gate schedule,
/// bare-CZ edges and verification checkpoints. Checkpoints are evaluated in
/// schedule order; a CHECK over one node demands its raw (detect-only)
/// syndrome be clean, a CHECK over seven nodes demands the level-(l+1)
/// syndrome computed from their corrected logical outcomes be clean.
struct GadgetBlueprint {
  std::string name;
  int level = 1;  // level of the gadget's logical product/operation
  std::vector<BlueprintNode> nodes;
  std::vector<BlueprintStep> schedule;
  /// Groups of surviving nodes, one group per output logical qubit
  /// (7 nodes per group when the output sits one level above the nodes).
  std::vector<std::vector<int>> outputs;

  /// Composite verified preparations: each listed 7-node group is built by a
  /// retried encode sub-run (a verified block one level above the nodes)
  /// instead of independent per-node preparations. Execution metadata, not
  /// part of the serialized record stream.
  struct PrepGroup {
    bool plus = false;
    std::vector<int> nodes;
  };
  std::vector<PrepGroup> prep_groups;

  /// Logical stabilizer generators of the ideal output, one character per
  /// output group ('I','X','Y','Z'). A residual frame whose per-group
  /// logical classes lie in the span of these generators leaves the
  /// post-selected state untouched (e.g. XZ/ZX for the CZ cluster, the K_i
  /// for |h>). Execution metadata, not serialized.
  std::vector<std::string> output_stabilizers;

  const BlueprintNode* find_node(int id) const;
};

/// Line-oriented text form with records
///   NODE <id> <role> <level>
///   GATE <kind> <ids...>          (two-qubit kinds: first half controls)
///   BARECZ <id> <id>
///   MEASURE <basis> <ids...>
///   CHECK <name> <ids...>
/// Blank lines and lines starting with '#' are ignored. Unknown records or
/// malformed fields raise std::invalid_argument. Outputs are the nodes never
/// measured; `name`/`level`/output grouping are supplied by the caller.
std::string serialize_blueprint(const GadgetBlueprint& bp);
GadgetBlueprint parse_blueprint(const std::string& text, const std::string& name, int level);

/// Structural legality: returns human-readable violations (empty == legal).
/// Enforced rules:
///   - operand node ids exist, two-qubit steps pair equal-length disjoint
///     lists, no node is gated after it was measured, checks only reference
///     measured nodes, no node measured twice;
///   - every node has at most one bare-CZ edge;
///   - every output node is downstream of at least two verification
///     checkpoints (checkpoints whose measured nodes were directly coupled
///     to it by an earlier two-qubit step).
std::vector<std::string> lint_blueprint(const GadgetBlueprint& bp);

/// Builders for the shipped gadget wirings (circuit form of the verified
/// CZ gates and of the level-(n+1) cluster constructions).
GadgetBlueprint make_cz_single(int level);
GadgetBlueprint make_cz_double(int level);
GadgetBlueprint make_hexa(int node_level);               // gadget level = node_level+1
GadgetBlueprint make_encode(bool plus, int node_level);  // gadget level = node_level+1

/// All blueprints shipped with the library (used by the lint property test).
const std::vector<GadgetBlueprint>& shipped_blueprints();

/// Dispatch by gadget name in {cz_single, cz_double, hexa, encode_zero,
/// encode_plus} and gadget level. Throws std::invalid_argument for unknown
/// names or unsupported levels.
GadgetBlueprint blueprint_for(const std::string& gadget, int level);

}  // namespace ftc
