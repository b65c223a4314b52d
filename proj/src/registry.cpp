#include "indcluster/registry.hpp"

#include <mutex>
#include <stdexcept>

#include "indcluster/error.hpp"
#include "indcluster/rational.hpp"

namespace indcluster {

VarRegistry& VarRegistry::global() {
  static VarRegistry registry;
  return registry;
}

VarId VarRegistry::intern(std::string_view name) {
  std::string key(name);
  {
    std::shared_lock lock(mutex_);
    auto it = index_.find(key);
    if (it != index_.end()) return VarId{it->second};
  }
  std::unique_lock lock(mutex_);
  auto it = index_.find(key);
  if (it != index_.end()) return VarId{it->second};
  auto id = static_cast<std::uint32_t>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return VarId{id};
}

std::optional<VarId> VarRegistry::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return VarId{it->second};
}

const std::string& VarRegistry::name(VarId id) const {
  std::shared_lock lock(mutex_);
  if (id.index >= names_.size()) throw std::out_of_range("unknown variable id");
  return names_[id.index];
}

std::size_t VarRegistry::size() const {
  std::shared_lock lock(mutex_);
  return names_.size();
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n), d);
  q.canonicalize();
  return q;
}

std::string rational_to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace indcluster
