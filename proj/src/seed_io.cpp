#include <sstream>

#include "indcluster/error.hpp"
#include "indcluster/seed.hpp"

namespace indcluster {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string quiver_to_dot(const Seed& s) {
  for (VarId u : s.exchangeables())
    for (const auto& [v, b] : s.neighbours(u))
      if (s.is_exchangeable(v) && s.matrix().get(v, u) != -b)
        throw Error(ErrorCode::NotSkewSymmetric,
                    "b('" + s.display_name(u) + "','" + s.display_name(v) + "') has no opposite entry");
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (const auto& cv : s.vars()) {
    out << "  " << dot_quote(s.display_name(cv.id));
    if (cv.frozen) out << " [shape=box]";
    out << ";\n";
  }
  auto edge = [&](VarId t, VarId h, int mult) {
    out << "  " << dot_quote(s.display_name(t)) << " -> " << dot_quote(s.display_name(h));
    if (mult != 1) out << " [label=\"" << mult << "\"]";
    out << ";\n";
  };
  for (const auto& cv : s.vars()) {
    if (cv.frozen) continue;
    for (const auto& [v, b] : s.neighbours(cv.id)) {
      if (b > 0) edge(cv.id, v, b);
      // Arrows into an exchangeable from a frozen vertex are only stored on the exchangeable row.
      if (b < 0 && !s.is_exchangeable(v)) edge(v, cv.id, -b);
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json seed_to_json(const Seed& s) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& cv : s.vars()) {
    nlohmann::json v = {{"name", var_name(cv.id)}, {"frozen", cv.frozen}};
    if (cv.label) v["label"] = cv.label->to_string();
    if (*cv.expr != LaurentPoly::variable(cv.id)) v["expr"] = lp_to_json(*cv.expr);
    vars.push_back(v);
  }
  nlohmann::json ex = nlohmann::json::array();
  nlohmann::json b = nlohmann::json::array();
  for (const auto& cv : s.vars()) {
    if (cv.frozen) continue;
    ex.push_back(var_name(cv.id));
    for (const auto& [col, val] : s.neighbours(cv.id)) b.push_back({var_name(cv.id), var_name(col), val});
  }
  nlohmann::json out = {{"vars", vars}, {"ex", ex}, {"B", b}};
  if (!s.history().empty()) {
    nlohmann::json h = nlohmann::json::array();
    for (VarId v : s.history()) h.push_back(var_name(v));
    out["history"] = h;
  }
  if (!s.locked().empty()) {
    nlohmann::json l = nlohmann::json::array();
    for (VarId v : s.locked()) l.push_back(var_name(v));
    out["locked"] = l;
  }
  return out;
}

Seed seed_from_json(const nlohmann::json& j) {
  try {
    std::set<std::string> ex_names;
    if (j.contains("ex"))
      for (const auto& e : j.at("ex")) ex_names.insert(e.get<std::string>());
    std::vector<ClusterVar> vars;
    std::set<std::string> names;
    for (const auto& v : j.at("vars")) {
      std::string name = v.at("name").get<std::string>();
      names.insert(name);
      bool frozen = v.contains("frozen") ? v.at("frozen").get<bool>() : !ex_names.count(name);
      if (j.contains("ex") && frozen == static_cast<bool>(ex_names.count(name)))
        throw Error(ErrorCode::InvalidSeed, "'" + name + "': 'frozen' disagrees with 'ex'");
      ClusterVar cv{var(name), frozen, std::nullopt, nullptr};
      if (v.contains("label")) cv.label = parse_partition(v.at("label").get<std::string>());
      if (v.contains("expr")) cv.expr = std::make_shared<const LaurentPoly>(lp_from_json(v.at("expr")));
      vars.push_back(std::move(cv));
    }
    for (const auto& n : ex_names)
      if (!names.count(n)) throw Error(ErrorCode::InvalidSeed, "ex lists unknown variable '" + n + "'");
    ExchangeMatrix b;
    if (j.contains("B")) {
      for (const auto& e : j.at("B")) {
        if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::ParseError, "B entries are [row, col, int]");
        b.set(var(e[0].get<std::string>()), var(e[1].get<std::string>()), e[2].get<int>());
      }
    }
    Seed s(std::move(vars), std::move(b));
    if (j.contains("locked")) {
      std::set<VarId> locked;
      for (const auto& l : j.at("locked")) locked.insert(var(l.get<std::string>()));
      s = s.with_locked(std::move(locked));
    }
    if (j.contains("history")) {
      std::vector<VarId> h;
      for (const auto& v : j.at("history")) h.push_back(var(v.get<std::string>()));
      s = s.with_history(std::move(h));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("seed JSON: ") + e.what());
  }
}

}  // namespace indcluster
