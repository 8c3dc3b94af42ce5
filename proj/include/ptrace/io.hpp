#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ptrace/group.hpp"
#include "ptrace/hp0.hpp"
#include "ptrace/leaves.hpp"

namespace ptrace {

using Json = nlohmann::ordered_json;

enum class BracketKind { Matrix, Jacobian, Symplectic };
enum class MorphismKind { Identity, Images, Invariants };

/// A presentation file: the Poisson variety, optionally a group acting on it
/// and the morphism to use for relative computations.
struct Document {
  std::string name;
  int field_order = 1;
  PresentationPtr presentation;
  BracketKind bracket_kind = BracketKind::Matrix;
  std::vector<DenseMatrix> group_generators;
  std::optional<FiniteMatrixGroup> group;
  MorphismKind morphism = MorphismKind::Identity;
  std::vector<Poly> images;  // for MorphismKind::Images
};

/// Parses and validates (Jacobi identity, Poisson ideal, group closure).
/// Throws ValidationError / ParseError.
Document parse_document(const Json& j);
Document parse_document_text(const std::string& text);
Document load_document(const std::string& path);

/// Canonical JSON; parse_document(to_json(d)) reproduces d.
Json to_json(const Document& d);

/// phi^* images for relative computations (invariant generators for
/// MorphismKind::Invariants, variables for Identity).
MorphismPresentation morphism_of(const Document& d, const Budget& budget = Budget::unlimited());

Json to_json(const HP0Report& r, std::uint64_t seed);
Json to_json(const BoundReport& r);
Json to_json(const LeafReport& r);
Json to_json(const SingularSupportReport& r);
Json to_json(const GroebnerBasis& gb);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace ptrace
