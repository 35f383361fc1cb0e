#pragma once

// JSON document holding an alphabet, named systems, morphisms, pointed
// systems and cellular decompositions. Emission is canonical: keys sorted,
// states, actions and transitions in lexicographic order, two-space indent.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hdts/core.hpp"
#include "hdts/model.hpp"
#include "hdts/subcats.hpp"

namespace hdts {

/// Syntax errors carry a 1-based position; structural errors have line 0.
class ParseError : public StructuralError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : StructuralError(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

struct MorphismEntry {
  std::string source;
  std::string target;
  Morphism map;
};

struct PointedEntry {
  std::string system;
  std::string base;
};

// Attaching maps are given by name against the stage they attach to.
// Stage names follow `attach`: old names are kept, the k-th cell adds
// "k:name".
struct CellEntry {
  std::string generator;  // morphism name
  std::map<std::string, std::string> states;
  std::map<std::string, std::string> actions;
};

struct DecompositionEntry {
  std::string base;  // system name
  Family family = Family::I;
  std::vector<CellEntry> cells;
};

struct Document {
  std::string version = "1";
  Alphabet sigma;
  std::map<std::string, TransitionSystem> systems;
  std::map<std::string, MorphismEntry> morphisms;
  std::map<std::string, PointedEntry> pointed;
  std::map<std::string, DecompositionEntry> decompositions;

  const TransitionSystem& system(const std::string& name) const;
  const MorphismEntry& morphism(const std::string& name) const;
  PointedSystem pointed_system(const std::string& name) const;

  /// Adds a system; StructuralError if its alphabet differs.
  void put(const std::string& name, const TransitionSystem& x);
  /// Adds a morphism between systems already present under these names.
  void put(const std::string& name, const std::string& source, const std::string& target, const Morphism& f);
};

Document parse_document(std::string_view text);
std::string emit_document(const Document& doc);

/// Resolves every cell against its stage; ArgumentError on a bad cell.
CellularDecomposition resolve_decomposition(const Document& doc, const std::string& name);

}  // namespace hdts
