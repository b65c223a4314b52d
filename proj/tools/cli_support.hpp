#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "indcluster/seed.hpp"

namespace indcluster::cli {

// Whitespace- or semicolon-separated tokens; brackets keep "(1, 1)" together.
std::vector<std::string> split_tokens(const std::string& text);

// A partition literal selects the labelled variable, anything else a display or registry name.
// InvalidArgument if nothing matches.
VarId resolve_var(const Seed& s, const std::string& token);

// Variables and arrows, one per line.
void print_seed(std::ostream& out, const Seed& s);

// Quadratic relation "... = 0" equivalent to the exchange relation, empty unless both sides are
// products of two labelled variables.
std::string exchange_as_relation(const ExchangeRelation& rel, const Seed& before, const Seed& after);

// Text REPL over a seed: show, labels, mutate <label|name>, undo, dot <file>, quit.
int run_explore(std::istream& in, std::ostream& out, Seed seed, bool prompt);

}  // namespace indcluster::cli
