#pragma once

#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "indcluster/seed.hpp"

namespace indcluster {

// Image of a source variable: a target variable or an integer.
using MorphismImage = std::variant<VarId, long>;

struct MeltingMorphismSpec {
  std::unordered_map<VarId, MorphismImage> image;

  static MeltingMorphismSpec identity(const Seed& s);
  // Source variable -> image as a Laurent polynomial in the target's initial variables.
  Substitution as_substitution() const;
  std::string describe(VarId v) const;
};

struct MorphismReport {
  bool cm1 = true;
  bool mcm = true;
  bool imcm = true;
  bool specialisation = true;
  bool cm2 = true;
  bool cm2_checked = false;
  int depth = 0;
  std::size_t sequences_checked = 0;
  std::string failed_axiom;                 // first failing axiom, empty when everything passes
  std::vector<std::string> failing_sequence;  // source display names of the first CM2 failure
  std::string detail;

  bool passed() const { return failed_axiom.empty(); }
};

// Axioms in order CM1, MCM, iMCM, specialisation, CM2; CM2 is exhaustive over all
// f-biadmissible sequences of length <= depth and is skipped when iMCM fails.
MorphismReport check_melting_morphism(const MeltingMorphismSpec& f, const Seed& src, const Seed& dst,
                                      int depth = 3);

// JSON object {source name: target name | integer}.
MeltingMorphismSpec morphism_from_json(const nlohmann::json& j);

}  // namespace indcluster
