#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sqas/catalog.hpp"

namespace sqas::testing {

// Smallest truncation that makes every F_{g,n} with 1 <= 2g+n-2 <= level exact.
inline int certified_truncation(const std::string& id, const Params& p, int level) {
  int t = 1;
  for (int g = 0; 2 * g - 1 <= level; ++g)
    for (int n = 1; 2 * g + n - 2 <= level; ++n)
      if (2 * g + n - 2 >= 1) t = std::max(t, support_bound(id, p, g, n));
  return t;
}

struct FamilyCase {
  std::string id;
  Params params;
};

inline bool has_class_param(const CatalogInfo& c) {
  return std::any_of(c.params.begin(), c.params.end(), [](const ParamSpec& s) { return s.name == "class"; });
}

// Every (family, class) at its `count` smallest admissible N.
inline std::vector<FamilyCase> family_grid(int count = 2) {
  std::vector<FamilyCase> out;
  for (const CatalogInfo& c : catalog_list()) {
    if (!c.infinite) continue;
    const int classes = has_class_param(c) ? 3 : 1;
    for (int klass = 1; klass <= classes; ++klass) {
      int found = 0;
      for (int N = -1; N <= 4 && found < count; ++N) {
        Params p{{"N", Scalar(N)}};
        if (has_class_param(c)) p["class"] = Scalar(klass);
        try {
          instantiate(c.id, p, 4);
        } catch (const std::invalid_argument&) {
          continue;
        }
        out.push_back({c.id, p});
        ++found;
      }
    }
  }
  return out;
}

inline std::string describe(const FamilyCase& f) {
  std::string s = f.id;
  for (const auto& [k, v] : f.params) s += " " + k + "=" + v.to_string();
  return s;
}

}  // namespace sqas::testing
