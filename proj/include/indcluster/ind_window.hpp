#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indcluster/directed_system.hpp"

namespace indcluster {

// Classes are named by their representative at the probe bound K.

enum class AttainmentStatus { Zero, Attained, UnstableUpToBound };

struct AttainmentCertificate {
  VarId row, col;
  AttainmentStatus status = AttainmentStatus::UnstableUpToBound;
  int value = 0;            // signed entry of the window matrix
  int magnitude = 0;
  int attained_at = -1;     // first level of the stable run ending at K
  int aligned_from = -1;    // first level from which the sign relative to the component's choice is constant
  std::vector<std::pair<VarId, VarId>> witnesses;  // (x_k, y_k) for k = attained_at .. K
};

// The magnitude of b~_xy together with its witnesses; needs agreement on at least two levels.
AttainmentCertificate attained_entry(const DirectedSystem& sys, VarId x, VarId y, int bound);

struct SignChoice {
  std::vector<VarId> component;  // exchangeable classes
  VarId row, col;                // entry oriented positive
};

struct IndSeedWindow {
  Seed window;
  std::vector<AttainmentCertificate> certificates;  // nonzero entries
  std::vector<SignChoice> sign_choices;
  std::optional<int> uniform_level;                  // whole submatrix attained uniformly
  std::map<VarId, int> column_uniform_level;         // per column class
  int bound = 0;
};

// UnstableWindow if an entry is not certified by the bound.
IndSeedWindow ind_seed_window(const DirectedSystem& sys, const std::vector<VarId>& classes, int bound);

struct MutationCommuteReport {
  bool similar = false;
  bool expressions_equal = false;
  std::vector<int> signs;
  int lift_from = -1;
  Seed direct;  // mutated window
  Seed lifted;  // window of the mutated system
  std::string detail;
  bool passed() const { return similar && expressions_equal; }
};

// Mutates the window directly and, separately, every level from the uniform attainment level on,
// then compares the two windows and the new expressions. seq holds variables of the successive
// mutated windows. LiftFailed if a step has no unique exchangeable preimage.
MutationCommuteReport verify_mutation_commutes(const DirectedSystem& sys, const std::vector<VarId>& classes,
                                               const std::vector<VarId>& seq, int bound);

}  // namespace indcluster
