#include "encode.hpp"

namespace cwb::wb {

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& r : m.to_strings()) rows.push_back(r);
  return rows;
}

json length_json(std::optional<std::size_t> n) { return n ? json(*n) : json("infinite"); }

json opt_json(const std::optional<std::size_t>& n) { return n ? json(*n) : json(nullptr); }

json module_json(const PresentedModule& m) {
  const PresentedModule s = simplify(m).module;
  return {{"describe", describe(m)},
          {"generators", s.generators()},
          {"relations", matrix_json(s.relations())},
          {"length", length_json(length(m))}};
}

json morphism_json(const ModuleMorphism& f) {
  return {{"source", describe(f.source())}, {"target", describe(f.target())}, {"matrix", matrix_json(f.matrix())}};
}

json complex_json(const Complex& x) {
  json out;
  out["ring"] = x.ring().name();
  if (x.empty()) {
    out["lo"] = nullptr;
    out["ranks"] = json::array();
    out["differentials"] = json::array();
    out["homology"] = json::object();
    return out;
  }
  out["lo"] = x.lo();
  json ranks = json::array(), diffs = json::array(), hom = json::object();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    ranks.push_back(x.rank(n));
    if (n < x.hi()) diffs.push_back(matrix_json(x.d(n)));
    const PresentedModule h = homology(x, n);
    if (!is_zero_module(h)) hom[std::to_string(n)] = describe(h);
  }
  out["ranks"] = ranks;
  out["differentials"] = diffs;
  out["homology"] = hom;
  return out;
}

json chain_map_json(const ChainMap& f) {
  json comps = json::object();
  const Complex &s = f.source(), &t = f.target();
  if (!s.empty() && !t.empty())
    for (int n = std::max(s.lo(), t.lo()); n <= std::min(s.hi(), t.hi()); ++n)
      comps[std::to_string(n)] = matrix_json(f.component(n));
  return {{"components", comps}};
}

json object_json(const Object& x) {
  if (auto m = std::get_if<PresentedModule>(&x)) return module_json(*m);
  return complex_json(std::get<Complex>(x));
}

json arrow_json(const Arrow& f) {
  if (auto m = std::get_if<ModuleMorphism>(&f)) return morphism_json(*m);
  return chain_map_json(std::get<ChainMap>(f));
}

}  // namespace cwb::wb
