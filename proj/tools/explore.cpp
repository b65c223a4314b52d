#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_support.hpp"
#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"

namespace indcluster::cli {

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    bool sep = depth == 0 && (c == ';' || std::isspace(static_cast<unsigned char>(c)));
    if (sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (depth > 0 && std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

VarId resolve_var(const Seed& s, const std::string& token) {
  if (!token.empty() && (token.front() == '(' || token.front() == '[')) {
    if (auto v = s.find_label(parse_partition(token))) return *v;
    throw Error(ErrorCode::InvalidArgument, "no variable labelled " + token);
  }
  if (auto v = s.find(token)) return *v;
  throw Error(ErrorCode::InvalidArgument, "no variable named " + token);
}

void print_seed(std::ostream& out, const Seed& s) {
  out << "variables: " << s.size() << " (" << s.exchangeables().size() << " exchangeable)\n";
  for (const auto& cv : s.vars()) {
    out << "  " << s.display_name(cv.id);
    if (cv.frozen) {
      out << " frozen";
    } else if (s.locked().count(cv.id)) {
      out << " locked";
    }
    if (!cv.label && *cv.expr != LaurentPoly::variable(cv.id)) out << " = " << lp_to_fraction_string(*cv.expr);
    out << "\n";
  }
  out << "arrows:\n";
  for (const auto& u : s.vars())
    for (const auto& v : s.vars()) {
      if (!s.is_exchangeable(u.id) && !s.is_exchangeable(v.id)) continue;
      int b = s.entry(u.id, v.id);
      if (b <= 0) continue;
      out << "  " << s.display_name(u.id) << " -> " << s.display_name(v.id);
      if (b != 1) out << " x" << b;
      out << "\n";
    }
}

std::string exchange_as_relation(const ExchangeRelation& rel, const Seed& before, const Seed& after) {
  auto pair_of = [&](const std::vector<std::pair<VarId, int>>& factors) -> std::optional<std::pair<Partition, Partition>> {
    std::vector<Partition> labels;
    for (const auto& [v, e] : factors) {
      const Seed& home = after.contains(v) ? after : before;
      if (!home.contains(v) || !home.var(v).label) return std::nullopt;
      for (int k = 0; k < e; ++k) labels.push_back(*home.var(v).label);
    }
    if (labels.size() != 2) return std::nullopt;
    return std::make_pair(std::max(labels[0], labels[1]), std::min(labels[0], labels[1]));
  };
  auto lhs = pair_of({{rel.new_var, 1}, {rel.old_var, 1}});
  auto pos = pair_of(rel.positive);
  auto neg = pair_of(rel.negative);
  if (!after.var(rel.new_var).label || !lhs || !pos || !neg) return "";
  return relation_to_string(normalize_relation(
      {{1, lhs->first, lhs->second}, {-1, pos->first, pos->second}, {-1, neg->first, neg->second}}));
}

namespace {

void help(std::ostream& out) {
  out << "commands: show | labels | mutate <label|name> | undo | dot <file> | quit\n";
}

}  // namespace

int run_explore(std::istream& in, std::ostream& out, Seed seed, bool prompt) {
  std::vector<Seed> undo;
  std::string line;
  help(out);
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    std::string rest;
    std::getline(words, rest);
    auto args = split_tokens(rest);
    try {
      if (cmd.empty()) {
        continue;
      } else if (cmd == "quit" || cmd == "exit") {
        break;
      } else if (cmd == "show") {
        print_seed(out, seed);
      } else if (cmd == "labels") {
        for (const auto& cv : seed.vars())
          if (cv.label) out << cv.label->to_string() << (cv.frozen ? " frozen" : "") << "\n";
      } else if (cmd == "mutate") {
        if (args.size() != 1) {
          out << "usage: mutate <label|name>\n";
          continue;
        }
        VarId x = resolve_var(seed, args[0]);
        if (!seed.is_exchangeable(x)) {
          out << "refused: " << seed.display_name(x) << " is frozen\n";
          continue;
        }
        if (!seed.is_mutable(x)) {
          out << "refused: " << seed.display_name(x) << " lies on the window boundary\n";
          continue;
        }
        Seed next = seed.var(x).label ? mutate_label(seed, *seed.var(x).label) : mutate(seed, x);
        VarId fresh = next.at(seed.index_of(x)).id;
        out << exchange_relation_string(exchange_relation(seed, x, fresh), seed, next) << "\n";
        undo.push_back(seed);
        seed = next;
      } else if (cmd == "undo") {
        if (undo.empty()) {
          out << "nothing to undo\n";
          continue;
        }
        seed = undo.back();
        undo.pop_back();
        out << "restored\n";
      } else if (cmd == "dot") {
        if (args.size() != 1) {
          out << "usage: dot <file>\n";
          continue;
        }
        std::ofstream f(args[0]);
        if (!f) {
          out << "cannot write " << args[0] << "\n";
          continue;
        }
        f << quiver_to_dot(seed);
        out << "wrote " << args[0] << "\n";
      } else {
        out << "unknown command '" << cmd << "'\n";
        help(out);
      }
    } catch (const Error& e) {
      out << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace indcluster::cli
