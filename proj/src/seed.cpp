#include "indcluster/seed.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>

#include "indcluster/error.hpp"

namespace indcluster {

namespace {
const ExchangeMatrix::Row kEmptyRow;
}

int ExchangeMatrix::get(VarId row, VarId col) const {
  auto r = rows_.find(row);
  if (r == rows_.end()) return 0;
  auto c = r->second.find(col);
  return c == r->second.end() ? 0 : c->second;
}

void ExchangeMatrix::set(VarId row, VarId col, int value) {
  if (value == 0) {
    auto r = rows_.find(row);
    if (r != rows_.end()) r->second.erase(col);
    return;
  }
  rows_[row][col] = value;
}

const ExchangeMatrix::Row& ExchangeMatrix::row(VarId r) const {
  auto it = rows_.find(r);
  return it == rows_.end() ? kEmptyRow : it->second;
}

Seed::Seed(std::vector<ClusterVar> vars, ExchangeMatrix matrix) : vars_(std::move(vars)), matrix_(std::move(matrix)) {
  for (auto& v : vars_) {
    if (!v.expr) v.expr = std::make_shared<const LaurentPoly>(LaurentPoly::variable(v.id));
    if (!v.frozen) matrix_.ensure_row(v.id);
  }
  reindex();
}

void Seed::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!index_.emplace(vars_[i].id, i).second)
      throw Error(ErrorCode::InvalidSeed, "duplicate variable '" + var_name(vars_[i].id) + "'");
  }
}

std::size_t Seed::index_of(VarId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "'" + var_name(v) + "' is not in the seed");
  return it->second;
}

bool Seed::is_exchangeable(VarId v) const {
  auto it = index_.find(v);
  return it != index_.end() && !vars_[it->second].frozen;
}

std::vector<VarId> Seed::exchangeables() const {
  std::vector<VarId> out;
  for (const auto& v : vars_)
    if (!v.frozen) out.push_back(v.id);
  return out;
}

std::vector<VarId> Seed::ids() const {
  std::vector<VarId> out;
  for (const auto& v : vars_) out.push_back(v.id);
  return out;
}

int Seed::entry(VarId u, VarId v) const {
  if (is_exchangeable(u)) return matrix_.get(u, v);
  if (is_exchangeable(v)) return -matrix_.get(v, u);
  return 0;
}

Seed Seed::with_locked(std::set<VarId> locked) const {
  Seed out = *this;
  out.locked_ = std::move(locked);
  return out;
}

Seed Seed::with_label(VarId v, std::optional<Partition> label) const {
  Seed out = *this;
  out.vars_[index_of(v)].label = std::move(label);
  return out;
}

Seed Seed::with_history(std::vector<VarId> history) const {
  Seed out = *this;
  out.history_ = std::move(history);
  return out;
}

std::string Seed::display_name(VarId v) const {
  auto it = index_.find(v);
  if (it != index_.end() && vars_[it->second].label) return vars_[it->second].label->label_name();
  return var_name(v);
}

VarNamer Seed::namer() const {
  return [this](VarId v) { return display_name(v); };
}

std::optional<VarId> Seed::find(const std::string& name) const {
  for (const auto& v : vars_)
    if (display_name(v.id) == name || var_name(v.id) == name) return v.id;
  return std::nullopt;
}

std::optional<VarId> Seed::find_label(const Partition& p) const {
  for (const auto& v : vars_)
    if (v.label && *v.label == p) return v.id;
  return std::nullopt;
}

Seed seed_from_quiver(const std::vector<std::string>& exchangeable, const std::vector<std::string>& frozen,
                      const std::vector<QuiverArrow>& arrows) {
  std::vector<ClusterVar> vars;
  for (const auto& n : exchangeable) vars.push_back({var(n), false, std::nullopt, nullptr});
  for (const auto& n : frozen) vars.push_back({var(n), true, std::nullopt, nullptr});
  std::set<std::string> ex(exchangeable.begin(), exchangeable.end());
  ExchangeMatrix b;
  for (const auto& a : arrows) {
    VarId t = var(a.tail), h = var(a.head);
    if (ex.count(a.tail)) b.add(t, h, a.multiplicity);
    if (ex.count(a.head)) b.add(h, t, -a.multiplicity);
  }
  return Seed(std::move(vars), std::move(b));
}

ValidationReport seed_validate(const Seed& s) {
  ValidationReport rep;
  std::set<VarId> present;
  for (const auto& v : s.vars()) present.insert(v.id);
  auto name = [](VarId v) { return var_name(v); };
  for (const auto& [r, row] : s.matrix().rows()) {
    if (!present.count(r)) {
      rep.violations.push_back({"dangling-id", "row '" + name(r) + "' is not a variable of the seed"});
      continue;
    }
    bool row_frozen = !s.is_exchangeable(r);
    for (const auto& [c, val] : row) {
      if (!present.count(c)) {
        rep.violations.push_back({"dangling-id", "column '" + name(c) + "' in row '" + name(r) + "'"});
        continue;
      }
      bool col_frozen = !s.is_exchangeable(c);
      if (row_frozen && col_frozen) {
        rep.violations.push_back({"frozen-frozen-entry", "'" + name(r) + "' -> '" + name(c) + "'"});
      } else if (row_frozen && s.matrix().get(c, r) != -val) {
        rep.violations.push_back(
            {"not-skew-symmetric", "frozen row '" + name(r) + "' disagrees with row '" + name(c) + "'"});
      }
    }
  }
  for (const auto& v : s.vars()) {
    if (!v.frozen && !s.matrix().has_row(v.id))
      rep.violations.push_back({"missing-row", "exchangeable '" + name(v.id) + "' has no row"});
    if (!v.expr) rep.violations.push_back({"missing-expression", name(v.id)});
  }
  // Skew-symmetrizable: sign-skew, and a consistent positive scaling d on each connected ex-part.
  std::vector<VarId> ex = s.exchangeables();
  for (VarId u : ex) {
    for (const auto& [v, buv] : s.matrix().row(u)) {
      if (!s.is_exchangeable(v)) continue;
      int bvu = s.matrix().get(v, u);
      if (bvu != -buv) rep.skew_symmetric = false;
      if (bvu == 0 || (bvu > 0) == (buv > 0))
        rep.violations.push_back({"not-skew-symmetrizable",
                                  "b('" + name(u) + "','" + name(v) + "')=" + std::to_string(buv) + " but b('" +
                                      name(v) + "','" + name(u) + "')=" + std::to_string(bvu)});
    }
  }
  if (!rep.skew_symmetric && rep.valid()) {
    std::map<VarId, Rational> d;
    for (VarId start : ex) {
      if (d.count(start)) continue;
      d[start] = 1;
      std::deque<VarId> queue{start};
      while (!queue.empty()) {
        VarId u = queue.front();
        queue.pop_front();
        for (const auto& [v, buv] : s.matrix().row(u)) {
          if (!s.is_exchangeable(v)) continue;
          // d_u b_uv = -d_v b_vu
          Rational want = -d[u] * buv / s.matrix().get(v, u);
          auto it = d.find(v);
          if (it == d.end()) {
            d[v] = want;
            queue.push_back(v);
          } else if (it->second != want) {
            rep.violations.push_back({"not-skew-symmetrizable", "inconsistent symmetrizer at '" + name(v) + "'"});
          }
        }
      }
    }
  }
  return rep;
}

ExchangeRelation exchange_relation(const Seed& before, VarId x, VarId new_var) {
  ExchangeRelation rel{x, new_var, {}, {}};
  for (const auto& [u, b] : before.neighbours(x)) {
    if (b > 0) rel.positive.emplace_back(u, b);
    if (b < 0) rel.negative.emplace_back(u, -b);
  }
  return rel;
}

std::string exchange_relation_string(const ExchangeRelation& rel, const Seed& before, const Seed& after) {
  auto product = [&](const std::vector<std::pair<VarId, int>>& fs) {
    if (fs.empty()) return std::string("1");
    std::string out;
    for (const auto& [v, e] : fs) {
      if (!out.empty()) out += '*';
      out += before.display_name(v);
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  };
  return after.display_name(rel.new_var) + "*" + before.display_name(rel.old_var) + " = " + product(rel.positive) +
         " + " + product(rel.negative);
}

namespace {

std::string history_tag(const Seed& s, VarId x) {
  // FNV-1a over the display names of the history followed by x.
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& str) {
    for (unsigned char c : str) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (VarId v : s.history()) feed(var_name(v));
  feed(var_name(x));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%08llx", static_cast<unsigned long long>(h & 0xffffffffULL));
  return buf;
}

}  // namespace

Seed mutate(const Seed& s, VarId x) {
  if (!s.is_exchangeable(x))
    throw Error(ErrorCode::NotExchangeable, "'" + s.display_name(x) + "' is not exchangeable");
  if (s.locked().count(x))
    throw Error(ErrorCode::WindowBoundary, "'" + s.display_name(x) + "' lies on the window boundary");

  VarId fresh = var("mu[" + s.display_name(x) + ";" + history_tag(s, x) + "]");
  if (s.contains(fresh)) throw Error(ErrorCode::InvalidSeed, "mutated name collides with an existing variable");

  const auto& row_x = s.neighbours(x);
  LaurentPoly pos(1), neg(1);
  for (const auto& [u, b] : row_x) {
    if (b > 0) pos *= s.expr(u).pow(b);
    if (b < 0) neg *= s.expr(u).pow(-b);
  }
  auto new_expr = std::make_shared<const LaurentPoly>(lp_div_exact(pos + neg, s.expr(x)));

  Seed out;
  out.vars_ = s.vars_;
  std::size_t slot = s.index_of(x);
  out.vars_[slot].id = fresh;
  out.vars_[slot].label.reset();
  out.vars_[slot].expr = new_expr;
  out.locked_ = s.locked_;
  out.history_ = s.history_;
  out.history_.push_back(x);
  out.reindex();

  auto rename = [&](VarId v) { return v == x ? fresh : v; };
  ExchangeMatrix& nb = out.matrix_;
  for (const auto& cv : s.vars()) {
    if (cv.frozen) continue;
    VarId u = cv.id;
    VarId nu = rename(u);
    nb.ensure_row(nu);
    if (u == x) {
      for (const auto& [v, b] : row_x) nb.set(nu, rename(v), -b);
      continue;
    }
    int bux = s.matrix().get(u, x);
    for (const auto& [v, b] : s.matrix().row(u)) {
      if (v == x) continue;
      nb.set(nu, rename(v), b);
    }
    nb.set(nu, fresh, -bux);
    if (bux != 0) {
      for (const auto& [v, bxv] : row_x) {
        if (v == u) continue;
        int delta = (std::abs(bux) * bxv + bux * std::abs(bxv)) / 2;
        if (delta != 0) nb.add(nu, rename(v), delta);
      }
    }
  }
  return out;
}

Seed mutate_seq(const Seed& s, const std::vector<VarId>& seq) {
  Seed cur = s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      cur = mutate(cur, seq[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + ": " + e.what());
    }
  }
  return cur;
}

ComponentDecomposition exchangeable_components(const Seed& s) {
  ComponentDecomposition out;
  std::set<VarId> seen_ex;
  std::set<VarId> covered;
  for (const auto& cv : s.vars()) {
    if (cv.frozen || seen_ex.count(cv.id)) continue;
    Component comp;
    std::set<VarId> vars;
    std::deque<VarId> queue{cv.id};
    seen_ex.insert(cv.id);
    while (!queue.empty()) {
      VarId u = queue.front();
      queue.pop_front();
      comp.exchangeable.push_back(u);
      vars.insert(u);
      for (const auto& [v, b] : s.neighbours(u)) {
        vars.insert(v);
        if (s.is_exchangeable(v) && !seen_ex.count(v)) {
          seen_ex.insert(v);
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.exchangeable.begin(), comp.exchangeable.end());
    comp.vars.assign(vars.begin(), vars.end());
    covered.insert(vars.begin(), vars.end());
    out.components.push_back(std::move(comp));
  }
  for (const auto& cv : s.vars())
    if (!covered.count(cv.id)) out.isolated.push_back(cv.id);
  return out;
}

Seed restrict_seed(const Seed& s, const std::vector<VarId>& keep) {
  std::set<VarId> kept(keep.begin(), keep.end());
  std::vector<ClusterVar> vars;
  for (const auto& cv : s.vars())
    if (kept.count(cv.id)) vars.push_back(cv);
  ExchangeMatrix b;
  for (const auto& cv : vars) {
    if (cv.frozen) continue;
    b.ensure_row(cv.id);
    for (const auto& [v, val] : s.neighbours(cv.id))
      if (kept.count(v)) b.set(cv.id, v, val);
  }
  std::set<VarId> locked;
  for (VarId v : s.locked())
    if (kept.count(v)) locked.insert(v);
  return Seed(std::move(vars), std::move(b)).with_locked(std::move(locked));
}

Seed freeze_vars(const Seed& s, const std::set<VarId>& to_freeze) {
  std::vector<ClusterVar> vars = s.vars();
  for (auto& cv : vars)
    if (to_freeze.count(cv.id)) cv.frozen = true;
  ExchangeMatrix b;
  for (const auto& cv : vars) {
    if (cv.frozen) continue;
    b.ensure_row(cv.id);
    for (const auto& [v, val] : s.neighbours(cv.id)) b.set(cv.id, v, val);
  }
  std::set<VarId> locked;
  for (VarId v : s.locked())
    if (!to_freeze.count(v)) locked.insert(v);
  return Seed(std::move(vars), std::move(b)).with_locked(std::move(locked)).with_history(s.history());
}

bool seeds_equal_up_to_renaming(const Seed& a, const Seed& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.at(i).frozen != b.at(i).frozen) return false;
    if (*a.at(i).expr != *b.at(i).expr) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.at(i).frozen) continue;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.entry(a.at(i).id, a.at(j).id) != b.entry(b.at(i).id, b.at(j).id)) return false;
  }
  return true;
}

}  // namespace indcluster
