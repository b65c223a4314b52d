#include "indcluster/morphism.hpp"

#include <functional>
#include <optional>

#include "indcluster/error.hpp"

namespace indcluster {

MeltingMorphismSpec MeltingMorphismSpec::identity(const Seed& s) {
  MeltingMorphismSpec f;
  for (const auto& cv : s.vars()) f.image[cv.id] = cv.id;
  return f;
}

Substitution MeltingMorphismSpec::as_substitution() const {
  Substitution sub;
  for (const auto& [v, img] : image) {
    if (const auto* t = std::get_if<VarId>(&img)) {
      sub[v] = LaurentPoly::variable(*t);
    } else {
      sub[v] = LaurentPoly(std::get<long>(img));
    }
  }
  return sub;
}

std::string MeltingMorphismSpec::describe(VarId v) const {
  auto it = image.find(v);
  if (it == image.end()) return "<none>";
  if (const auto* t = std::get_if<VarId>(&it->second)) return var_name(*t);
  return std::to_string(std::get<long>(it->second));
}

namespace {

void fail(MorphismReport& rep, const std::string& axiom, const std::string& detail) {
  if (rep.failed_axiom.empty()) {
    rep.failed_axiom = axiom;
    rep.detail = detail;
  }
}

}  // namespace

MorphismReport check_melting_morphism(const MeltingMorphismSpec& f, const Seed& src, const Seed& dst, int depth) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be nonnegative");
  MorphismReport rep;
  rep.depth = depth;
  std::string cm1_detail, mcm_detail, imcm_detail, spec_detail;

  for (const auto& cv : src.vars()) {
    auto it = f.image.find(cv.id);
    if (it == f.image.end()) {
      rep.cm1 = false;
      if (cm1_detail.empty()) cm1_detail = "no image for '" + src.display_name(cv.id) + "'";
      continue;
    }
    const auto* t = std::get_if<VarId>(&it->second);
    if (t && !dst.contains(*t)) {
      rep.cm1 = false;
      if (cm1_detail.empty())
        cm1_detail = "'" + src.display_name(cv.id) + "' maps to '" + var_name(*t) + "', not a target variable";
      continue;
    }
    if (cv.frozen) continue;
    if (t && !dst.is_exchangeable(*t)) {
      rep.mcm = rep.imcm = false;
      if (mcm_detail.empty())
        mcm_detail = "exchangeable '" + src.display_name(cv.id) + "' maps to frozen '" + dst.display_name(*t) + "'";
    }
    if (!t && std::get<long>(it->second) == 0) {
      rep.imcm = false;
      if (imcm_detail.empty()) imcm_detail = "exchangeable '" + src.display_name(cv.id) + "' maps to 0";
    }
  }
  if (!rep.cm1) fail(rep, "CM1", cm1_detail);
  if (!rep.mcm) fail(rep, "MCM", mcm_detail);
  if (!rep.imcm) fail(rep, "iMCM", imcm_detail.empty() ? mcm_detail : imcm_detail);
  if (!rep.cm1 || !rep.imcm) return rep;

  // Neighbours specialised to integers multiply to 1 on each side of a surviving exchangeable.
  for (VarId x : src.exchangeables()) {
    const auto* fx = std::get_if<VarId>(&f.image.at(x));
    if (!fx || !dst.is_exchangeable(*fx)) continue;
    Rational pos = 1, neg = 1;
    for (const auto& [y, b] : src.neighbours(x)) {
      const auto* n = std::get_if<long>(&f.image.at(y));
      if (!n) continue;
      Rational val(*n);
      Rational& acc = b > 0 ? pos : neg;
      for (int k = 0; k < std::abs(b); ++k) acc *= val;
    }
    if (pos != 1 || neg != 1) {
      rep.specialisation = false;
      if (spec_detail.empty())
        spec_detail = "specialised neighbours of '" + src.display_name(x) + "' multiply to " +
                      rational_to_string(pos) + " and " + rational_to_string(neg);
    }
  }
  if (!rep.specialisation) fail(rep, "specialisation", spec_detail);

  // CM2: follow both seeds slot by slot; initial slot p of src corresponds to the slot of f(x_p).
  rep.cm2_checked = true;
  Substitution sub = f.as_substitution();
  std::vector<std::optional<std::size_t>> corr(src.size());
  for (std::size_t p = 0; p < src.size(); ++p) {
    if (const auto* t = std::get_if<VarId>(&f.image.at(src.at(p).id))) corr[p] = dst.index_of(*t);
  }
  std::vector<std::string> path;
  std::function<bool(const Seed&, const Seed&)> dfs = [&](const Seed& s, const Seed& d) -> bool {
    if (static_cast<int>(path.size()) == depth) return true;
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (!corr[p] || !s.is_mutable(s.at(p).id)) continue;
      std::size_t q = *corr[p];
      if (!d.is_mutable(d.at(q).id)) continue;
      path.push_back(s.display_name(s.at(p).id));
      Seed s2 = mutate(s, s.at(p).id);
      Seed d2 = mutate(d, d.at(q).id);
      ++rep.sequences_checked;
      LaurentPoly lhs = lp_substitute(*s2.at(p).expr, sub);
      if (lhs != *d2.at(q).expr) {
        rep.cm2 = false;
        rep.failing_sequence = path;
        fail(rep, "CM2",
             "f(mu(" + path.back() + ")) = " + lp_to_string(lhs) + " but mu(f(" + path.back() +
                 ")) = " + lp_to_string(*d2.at(q).expr));
        return false;
      }
      if (!dfs(s2, d2)) return false;
      path.pop_back();
    }
    return true;
  };
  dfs(src, dst);
  return rep;
}

MeltingMorphismSpec morphism_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "morphism JSON must be an object");
  MeltingMorphismSpec f;
  for (const auto& [k, v] : j.items()) {
    if (v.is_number_integer()) {
      f.image[var(k)] = v.get<long>();
    } else if (v.is_string()) {
      f.image[var(k)] = var(v.get<std::string>());
    } else {
      throw Error(ErrorCode::ParseError, "image of '" + k + "' must be a name or an integer");
    }
  }
  return f;
}

}  // namespace indcluster
