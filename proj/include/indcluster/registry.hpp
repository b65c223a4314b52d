#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace indcluster {

// Identifier of a symbol in the process-wide registry. Ordering is registration order.
struct VarId {
  std::uint32_t index = 0;
  auto operator<=>(const VarId&) const = default;
};

// Append-only name table; ids are never reused or removed, so references stay valid.
class VarRegistry {
 public:
  static VarRegistry& global();

  VarId intern(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId id) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

inline VarId var(std::string_view name) { return VarRegistry::global().intern(name); }
inline const std::string& var_name(VarId id) { return VarRegistry::global().name(id); }

}  // namespace indcluster

template <>
struct std::hash<indcluster::VarId> {
  std::size_t operator()(const indcluster::VarId& v) const noexcept { return v.index; }
};
