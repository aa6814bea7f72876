#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bdg/compatible.hpp"
#include "bdg/graph.hpp"
#include "bdg/matching.hpp"

namespace bdg {

/// full               pair condition quantified over both orientations.
/// one_sided_forward  standing assumption: a complete X->Y matching exists;
///                    the pair condition only covers (u in Y, v in X).
/// one_sided_reverse  mirror image: Y->X matching, pairs (u in X, v in Y).
enum class EngineMode { full, one_sided_forward, one_sided_reverse };

const char* engine_mode_name(EngineMode m);

enum class WitnessKind { hall_pair, degree_pair };

/// Certificate that the sufficient condition fails: a non-adjacent ordered
/// pair with degree sum below the bound (a for hall_pair, a + 2 for
/// degree_pair).  Says nothing about non-Hamiltonicity.
struct Witness {
  WitnessKind kind{WitnessKind::degree_pair};
  Vertex u, v;
  int sum{0};
  int bound{0};
};

struct Outcome {
  std::variant<std::vector<Vertex>, Witness> value;

  bool is_cycle() const { return value.index() == 0; }
  const std::vector<Vertex>& cycle() const { return std::get<0>(value); }
  const Witness& witness() const { return std::get<1>(value); }
};

/// Everything the engine did: the outcome, the matching it fixed, one record
/// per applied move, and (when it stalled before spanning) the final cycle
/// and the maximal structure grown outside it.  A one_sided_reverse run works
/// on the arc-reversed digraph; only the outcome is mapped back, the other
/// fields stay in the reversed frame.
struct EngineRun {
  Outcome outcome;
  std::optional<Matching> matching;
  std::vector<MoveRecord> trace;
  std::optional<CompatibleCycle> stalled_cycle;
  std::optional<std::variant<CompatiblePath, CompatibleCycle>> stalled_outside;
};

/// Constructive decision procedure: either a verified Hamiltonian cycle or a
/// witness pair showing the mode's degree hypothesis fails.  Balanced input
/// required.  In the one-sided modes a missing matching raises
/// matching_absent; a stall with no witness raises theorem_violation.
Outcome find_hamiltonian(const BipartiteDigraph& d, EngineMode mode);
EngineRun run_engine(const BipartiteDigraph& d, EngineMode mode);

/// First non-adjacent ordered pair (mode-restricted orientation set, X->Y
/// then Y->X, each lexicographic) with degree sum <= a + 1.
std::optional<Witness> scan_witness(const BipartiteDigraph& d, EngineMode mode);

/// True when the mode's standing hypothesis holds at level k: for full, the
/// two-orientation pair bound a + k; for the one-sided modes, the matching
/// in the assumed direction plus the one-orientation pair bound.
bool mode_hypothesis_holds(const BipartiteDigraph& d, int k, EngineMode mode);

/// seq must list 2a distinct vertices alternating between the classes,
/// covering all of V(D), with every consecutive arc (wrap included) present.
bool verify_hamiltonian_cycle(const BipartiteDigraph& d, std::span<const Vertex> seq);

}  // namespace bdg
