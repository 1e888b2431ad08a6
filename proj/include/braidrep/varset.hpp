// Named variable sets. A VarSet fixes the variable order of a Laurent
// polynomial ring for the lifetime of a computation.
#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidrep {

struct VarSet {
  std::vector<std::string> names;

  explicit VarSet(std::vector<std::string> n) : names(std::move(n)) {
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw std::invalid_argument("VarSet: duplicate variable " + names[i]);
  }

  size_t size() const { return names.size(); }

  int index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw std::invalid_argument("VarSet: unknown variable " + name);
    return static_cast<int>(it - names.begin());
  }

  bool operator==(const VarSet& other) const { return names == other.names; }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

// Indexed families: prefix 1..n, e.g. indexed_vars("t", 3) -> {t1, t2, t3}.
inline std::vector<std::string> indexed_names(const std::string& prefix, int n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

inline VarSetPtr indexed_varset(const std::string& prefix, int n) {
  return make_varset(indexed_names(prefix, n));
}

// {prefix1..prefixn, extra}; used for the q1..qn,t and s1..sn,t rings.
inline VarSetPtr indexed_varset_plus(const std::string& prefix, int n,
                                     const std::string& extra) {
  auto names = indexed_names(prefix, n);
  names.push_back(extra);
  return make_varset(std::move(names));
}

}  // namespace braidrep
