#include "scenario.hpp"

#include <cstdio>
#include <regex>
#include <set>

#include "ops.hpp"

namespace cwb::wb {

Kind kind_of(const Value& v) { return static_cast<Kind>(v.index()); }

std::string kind_name(Kind k) {
  static const char* names[] = {"module", "morphism",  "matrix",   "ideal",     "complex",         "chain_map",
                                "bounded_above", "sequence", "tower", "test_set", "formal_morphism", "fd_subgroup"};
  return names[static_cast<int>(k)];
}

namespace {

std::string at(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ScenarioError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(at(where, key), "missing field");
  return *it;
}

std::string text_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ScenarioError(where, "expected a string or an integer");
}

long long int_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ScenarioError(where, "expected an integer");
  return v.get<long long>();
}

std::size_t count_of(const json& v, const std::string& where) {
  const long long n = int_of(v, where);
  if (n < 0) throw ScenarioError(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(n);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) throw ScenarioError(at(where, it.key()), "unknown field");
}

Elem parse_elem(const Ring& ring, const json& v, const std::string& where) {
  const std::string s = text_of(v, where);
  try {
    return ring.parse(s);
  } catch (const std::exception& e) {
    throw ScenarioError(where, "cannot parse \"" + s + "\" over " + ring.name() + ": " + e.what());
  }
}

mpz_class parse_mpz(const json& v, const std::string& where) {
  const std::string s = text_of(v, where);
  mpz_class out;
  if (out.set_str(s, 10) != 0) throw ScenarioError(where, "not an integer: \"" + s + "\"");
  return out;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class ObjectBuilder {
 public:
  ObjectBuilder(const Ring& ring, const json& defs, std::map<std::string, Value>& out)
      : ring_(ring), defs_(defs), out_(out) {}

  void build_all() {
    for (auto it = defs_.begin(); it != defs_.end(); ++it) resolve(it.key(), "objects");
  }

 private:
  const Value& resolve(const std::string& name, const std::string& from) {
    if (auto it = out_.find(name); it != out_.end()) return it->second;
    if (!defs_.contains(name)) throw ScenarioError(from, "undefined name \"" + name + "\"");
    if (!visiting_.insert(name).second) throw ScenarioError(from, "cyclic definition through \"" + name + "\"");
    const std::string where = "objects." + name;
    Value v = build(defs_.at(name), where);
    visiting_.erase(name);
    return out_.emplace(name, std::move(v)).first->second;
  }

  template <class T>
  const T& get(const json& ref, const std::string& where) {
    if (!ref.is_string()) throw ScenarioError(where, "expected an object name");
    const Value& v = resolve(ref.get<std::string>(), where);
    if (!std::holds_alternative<T>(v))
      throw ScenarioError(where, "\"" + ref.get<std::string>() + "\" is a " + kind_name(kind_of(v)) + ", expected a " +
                                     kind_name(kind_for<T>()));
    return std::get<T>(v);
  }

  Object get_object(const json& ref, const std::string& where) {
    if (!ref.is_string()) throw ScenarioError(where, "expected an object name");
    const Value& v = resolve(ref.get<std::string>(), where);
    if (auto m = std::get_if<PresentedModule>(&v)) return *m;
    if (auto c = std::get_if<Complex>(&v)) return *c;
    throw ScenarioError(where, "\"" + ref.get<std::string>() + "\" is a " + kind_name(kind_of(v)) +
                                   ", expected a module or a complex");
  }

  Arrow get_arrow(const json& ref, const std::string& where) {
    if (!ref.is_string()) throw ScenarioError(where, "expected an object name");
    const Value& v = resolve(ref.get<std::string>(), where);
    if (auto m = std::get_if<ModuleMorphism>(&v)) return *m;
    if (auto c = std::get_if<ChainMap>(&v)) return *c;
    throw ScenarioError(where, "\"" + ref.get<std::string>() + "\" is a " + kind_name(kind_of(v)) +
                                   ", expected a morphism or a chain map");
  }

  Value build(const json& def, const std::string& where) {
    const std::string type = require(def, "type", where).is_string() ? def["type"].get<std::string>() : "";
    if (def.contains("ring")) {
      const Ring r = parse_ring(def["ring"], at(where, "ring"));
      if (r != ring_) throw ScenarioError(at(where, "ring"), "ring mismatch: " + r.name() + " vs scenario ring " + ring_.name());
    }
    try {
      if (type == "module") return module(def, where);
      if (type == "morphism") return morphism(def, where);
      if (type == "matrix") return matrix(def, where);
      if (type == "ideal") return ideal(def, where);
      if (type == "complex") return complex(def, where);
      if (type == "chain_map") return chain_map(def, where);
      if (type == "bounded_above") return bounded_above(def, where);
      if (type == "sequence") return sequence(def, where);
      if (type == "tower") return tower(def, where);
      if (type == "test_set") return test_set(def, where);
      if (type == "formal_morphism") return formal(def, where);
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      throw ScenarioError(where, e.what());
    }
    throw ScenarioError(at(where, "type"), "unknown object type \"" + type + "\"");
  }

  Value module(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "free", "cyclic", "diagonal", "generators", "relations"}, where);
    if (def.contains("free")) return PresentedModule::free(ring_, count_of(def["free"], at(where, "free")));
    if (def.contains("cyclic")) return PresentedModule::cyclic(ring_, parse_elem(ring_, def["cyclic"], at(where, "cyclic")));
    if (def.contains("diagonal")) {
      const json& d = def["diagonal"];
      if (!d.is_array()) throw ScenarioError(at(where, "diagonal"), "expected a list");
      std::vector<Elem> ds;
      for (std::size_t i = 0; i < d.size(); ++i) ds.push_back(parse_elem(ring_, d[i], idx(at(where, "diagonal"), i)));
      return PresentedModule::diagonal(ring_, ds);
    }
    const std::size_t g = count_of(require(def, "generators", where), at(where, "generators"));
    if (!def.contains("relations")) return PresentedModule::free(ring_, g);
    const json& rows = def["relations"];
    if (!rows.is_array() || rows.size() != g)
      throw ScenarioError(at(where, "relations"), "expected " + std::to_string(g) + " rows, one per generator");
    return PresentedModule(ring_, g, parse_matrix(ring_, rows, at(where, "relations")));
  }

  Value morphism(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "source", "target", "matrix"}, where);
    const PresentedModule s = get<PresentedModule>(require(def, "source", where), at(where, "source"));
    const PresentedModule t = get<PresentedModule>(require(def, "target", where), at(where, "target"));
    const Matrix m = shaped(require(def, "matrix", where), at(where, "matrix"), t.generators(), s.generators());
    return ModuleMorphism(s, t, m);
  }

  Matrix shaped(const json& rows, const std::string& where, std::size_t r, std::size_t c) {
    if (!rows.is_array() || rows.size() != r)
      throw ScenarioError(where, "expected " + std::to_string(r) + " rows");
    return parse_matrix(ring_, rows, where, c);
  }

  Value matrix(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "rows", "cols"}, where);
    std::optional<std::size_t> cols;
    if (def.contains("cols")) cols = count_of(def["cols"], at(where, "cols"));
    return parse_matrix(ring_, require(def, "rows", where), at(where, "rows"), cols);
  }

  Value ideal(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "generators"}, where);
    const json& g = require(def, "generators", where);
    if (!g.is_array()) throw ScenarioError(at(where, "generators"), "expected a list");
    if (g.empty()) return Ideal::zero(ring_);
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(parse_elem(ring_, g[i], idx(at(where, "generators"), i)));
    return Ideal(ring_, gens);
  }

  Value complex(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "lo", "ranks", "differentials"}, where);
    const int lo = static_cast<int>(int_of(require(def, "lo", where), at(where, "lo")));
    const json& r = require(def, "ranks", where);
    if (!r.is_array()) throw ScenarioError(at(where, "ranks"), "expected a list");
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < r.size(); ++i) ranks.push_back(count_of(r[i], idx(at(where, "ranks"), i)));
    std::vector<Matrix> diffs;
    const json empty = json::array();
    const json& d = def.contains("differentials") ? def["differentials"] : empty;
    if (!d.is_array() || d.size() + 1 != std::max<std::size_t>(ranks.size(), 1))
      throw ScenarioError(at(where, "differentials"), "expected " + std::to_string(ranks.empty() ? 0 : ranks.size() - 1) +
                                                          " differentials");
    for (std::size_t k = 0; k < d.size(); ++k)
      diffs.push_back(shaped(d[k], idx(at(where, "differentials"), k), ranks[k + 1], ranks[k]));
    return Complex(ring_, lo, ranks, diffs);
  }

  Value chain_map(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "source", "target", "components"}, where);
    const Complex s = get<Complex>(require(def, "source", where), at(where, "source"));
    const Complex t = get<Complex>(require(def, "target", where), at(where, "target"));
    const json& c = require(def, "components", where);
    if (!c.is_object()) throw ScenarioError(at(where, "components"), "expected an object keyed by degree");
    std::vector<std::pair<int, Matrix>> comps;
    for (auto it = c.begin(); it != c.end(); ++it) {
      const std::string w = at(at(where, "components"), it.key());
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ScenarioError(w, "degree keys must be integers");
      }
      comps.emplace_back(n, shaped(it.value(), w, t.rank(n), s.rank(n)));
    }
    return ChainMap(s, t, comps);
  }

  Value bounded_above(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "window", "rule", "period"}, where);
    const Complex w = get<Complex>(require(def, "window", where), at(where, "window"));
    const std::string rule = text_of(require(def, "rule", where), at(where, "rule"));
    ExtensionRule r;
    if (rule == "perfect") {
      r.kind = ExtensionRule::Kind::Perfect;
    } else if (rule == "kernel_resolution") {
      r.kind = ExtensionRule::Kind::KernelResolution;
    } else if (rule == "periodic") {
      r.kind = ExtensionRule::Kind::Periodic;
      const json& p = require(def, "period", where);
      if (!p.is_array() || p.empty()) throw ScenarioError(at(where, "period"), "expected a nonempty list of matrices");
      for (std::size_t k = 0; k < p.size(); ++k) r.period.push_back(parse_matrix(ring_, p[k], idx(at(where, "period"), k)));
    } else {
      throw ScenarioError(at(where, "rule"), "unknown extension rule \"" + rule + "\"");
    }
    return BoundedAboveComplex(w, r);
  }

  Value sequence(const json& def, const std::string& where) {
    const std::string rule = text_of(require(def, "rule", where), at(where, "rule"));
    if (rule == "explicit") {
      check_keys(def, {"type", "ring", "rule", "items", "transitions"}, where);
      const json& it = require(def, "items", where);
      const json& tr = require(def, "transitions", where);
      if (!it.is_array() || it.empty()) throw ScenarioError(at(where, "items"), "expected a nonempty list");
      if (!tr.is_array() || tr.size() + 1 != it.size())
        throw ScenarioError(at(where, "transitions"), "expected " + std::to_string(it.size() - 1) + " transitions");
      std::vector<Object> items;
      std::vector<Arrow> arrows;
      for (std::size_t i = 0; i < it.size(); ++i) items.push_back(get_object(it[i], idx(at(where, "items"), i)));
      for (std::size_t i = 0; i < tr.size(); ++i) arrows.push_back(get_arrow(tr[i], idx(at(where, "transitions"), i)));
      return ObjectSequence(items, arrows);
    }
    if (rule == "constant") {
      check_keys(def, {"type", "ring", "rule", "object"}, where);
      return constant_sequence(get_object(require(def, "object", where), at(where, "object")));
    }
    if (rule == "multiplication") {
      check_keys(def, {"type", "ring", "rule", "object", "element"}, where);
      return multiplication_sequence(get_object(require(def, "object", where), at(where, "object")),
                                     parse_elem(ring_, require(def, "element", where), at(where, "element")));
    }
    if (rule == "prufer") {
      check_keys(def, {"type", "ring", "rule", "element"}, where);
      return prufer_tower(ring_, parse_elem(ring_, require(def, "element", where), at(where, "element")));
    }
    if (rule == "socle") {
      check_keys(def, {"type", "ring", "rule", "module", "ideal"}, where);
      return socle_tower(get<PresentedModule>(require(def, "module", where), at(where, "module")),
                         get<Ideal>(require(def, "ideal", where), at(where, "ideal")));
    }
    if (rule == "truncation") {
      check_keys(def, {"type", "ring", "rule", "complex"}, where);
      return truncation_tower(get<BoundedAboveComplex>(require(def, "complex", where), at(where, "complex")));
    }
    if (rule == "koszul") {
      check_keys(def, {"type", "ring", "rule", "complex", "ideal"}, where);
      return koszul_sequence(get<Complex>(require(def, "complex", where), at(where, "complex")),
                             get<Ideal>(require(def, "ideal", where), at(where, "ideal")));
    }
    throw ScenarioError(at(where, "rule"), "unknown sequence rule \"" + rule + "\"");
  }

  Value tower(const json& def, const std::string& where) {
    const std::string rule = text_of(require(def, "rule", where), at(where, "rule"));
    if (rule == "adic") {
      check_keys(def, {"type", "ring", "rule", "module", "ideal", "depth"}, where);
      return adic_tower(get<PresentedModule>(require(def, "module", where), at(where, "module")),
                        get<Ideal>(require(def, "ideal", where), at(where, "ideal")),
                        count_of(require(def, "depth", where), at(where, "depth")));
    }
    if (rule == "multiplication") {
      check_keys(def, {"type", "ring", "rule", "module", "element", "depth"}, where);
      return multiplication_tower(get<PresentedModule>(require(def, "module", where), at(where, "module")),
                                  parse_elem(ring_, require(def, "element", where), at(where, "element")),
                                  count_of(require(def, "depth", where), at(where, "depth")));
    }
    if (rule == "explicit") {
      check_keys(def, {"type", "ring", "rule", "modules", "maps"}, where);
      const json& ms = require(def, "modules", where);
      const json& fs = require(def, "maps", where);
      if (!ms.is_array() || ms.empty()) throw ScenarioError(at(where, "modules"), "expected a nonempty list");
      if (!fs.is_array() || fs.size() + 1 != ms.size())
        throw ScenarioError(at(where, "maps"), "expected " + std::to_string(ms.size() - 1) + " maps");
      InverseTower t;
      for (std::size_t i = 0; i < ms.size(); ++i) t.modules.push_back(get<PresentedModule>(ms[i], idx(at(where, "modules"), i)));
      for (std::size_t i = 0; i < fs.size(); ++i) t.maps.push_back(get<ModuleMorphism>(fs[i], idx(at(where, "maps"), i)));
      t.validate();
      return t;
    }
    throw ScenarioError(at(where, "rule"), "unknown tower rule \"" + rule + "\"");
  }

  Value test_set(const json& def, const std::string& where) {
    check_keys(def, {"type", "ring", "objects"}, where);
    const json& os = require(def, "objects", where);
    if (!os.is_array() || os.empty()) throw ScenarioError(at(where, "objects"), "expected a nonempty list");
    TestSet t;
    for (std::size_t i = 0; i < os.size(); ++i) t.objects.push_back(get_object(os[i], idx(at(where, "objects"), i)));
    t.validate();
    return t;
  }

  Value formal(const json& def, const std::string& where) {
    const std::string rule = text_of(require(def, "rule", where), at(where, "rule"));
    if (rule == "identity") {
      check_keys(def, {"type", "ring", "rule", "sequence", "depth"}, where);
      return FormalMorphism::identity(get<ObjectSequence>(require(def, "sequence", where), at(where, "sequence")),
                                      count_of(require(def, "depth", where), at(where, "depth")));
    }
    if (rule == "levelwise") {
      check_keys(def, {"type", "ring", "rule", "source", "target", "maps"}, where);
      const auto& s = get<ObjectSequence>(require(def, "source", where), at(where, "source"));
      const auto& t = get<ObjectSequence>(require(def, "target", where), at(where, "target"));
      const json& fs = require(def, "maps", where);
      if (!fs.is_array() || fs.empty()) throw ScenarioError(at(where, "maps"), "expected a nonempty list");
      std::vector<Arrow> maps;
      for (std::size_t i = 0; i < fs.size(); ++i) maps.push_back(get_arrow(fs[i], idx(at(where, "maps"), i)));
      return FormalMorphism::level(s, t, [maps](std::size_t i) { return maps.at(i); }, maps.size() - 1);
    }
    if (rule == "socle_inclusion") {
      check_keys(def, {"type", "ring", "rule", "module", "ideal", "depth"}, where);
      const auto& m = get<PresentedModule>(require(def, "module", where), at(where, "module"));
      const auto& I = get<Ideal>(require(def, "ideal", where), at(where, "ideal"));
      return FormalMorphism::level(
          socle_tower(m, I), constant_sequence(m),
          [m, I](std::size_t i) -> Arrow { return annihilator_submodule(m, I, i).inclusion; },
          count_of(require(def, "depth", where), at(where, "depth")));
    }
    throw ScenarioError(at(where, "rule"), "unknown formal morphism rule \"" + rule + "\"");
  }

  const Ring& ring_;
  const json& defs_;
  std::map<std::string, Value>& out_;
  std::set<std::string> visiting_;
};

}  // namespace

Matrix parse_matrix(const Ring& ring, const json& rows, const std::string& where, std::optional<std::size_t> cols) {
  if (!rows.is_array()) throw ScenarioError(where, "expected an array of rows");
  std::size_t n = cols.value_or(rows.empty() ? 0 : (rows[0].is_array() ? rows[0].size() : 0));
  Matrix m(ring, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string w = idx(where, i);
    if (!rows[i].is_array()) throw ScenarioError(w, "row " + std::to_string(i) + " is not an array");
    if (rows[i].size() != n)
      throw ScenarioError(w, "non-rectangular matrix: row " + std::to_string(i) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_elem(ring, rows[i][j], idx(w, j));
  }
  return m;
}

Ring parse_ring_name(const std::string& name) {
  static const std::regex field_re(R"(Z|Q|Z/(\d+)|GF\((\d+)\))");
  static const std::regex poly_re(R"((Q|GF\((\d+)\))\[([A-Za-z])\](?:/\((.+)\))?)");
  std::smatch m;
  if (std::regex_match(name, m, field_re)) {
    if (name == "Z") return Ring::integers();
    if (name == "Q") return Ring::rationals();
    if (m[1].matched) return Ring::modular(mpz_class(m[1].str()));
    return Ring::prime_field(mpz_class(m[2].str()));
  }
  if (std::regex_match(name, m, poly_re)) {
    RingSpec s;
    s.kind = m[4].matched ? RingKind::PolyQuot : RingKind::Poly;
    s.field_p = m[2].matched ? mpz_class(m[2].str()) : mpz_class(0);
    s.var = m[3].str();
    if (m[4].matched) s.poly_modulus = m[4].str();
    return make_ring(s);
  }
  throw InvalidArgument("unrecognized ring name \"" + name + "\"");
}

Ring parse_ring(const json& spec, const std::string& where) {
  try {
    if (spec.is_string()) return parse_ring_name(spec.get<std::string>());
    const std::string kind = text_of(require(spec, "kind", where), at(where, "kind"));
    RingSpec s;
    auto field = [&]() {
      if (!spec.contains("field")) return;
      const Ring f = parse_ring_name(text_of(spec["field"], at(where, "field")));
      if (f.kind() == RingKind::Rationals) return;
      if (f.kind() != RingKind::PrimeField) throw ScenarioError(at(where, "field"), "coefficient field must be Q or GF(p)");
      s.field_p = f.modulus();
    };
    if (kind == "integers") {
      check_keys(spec, {"kind"}, where);
      s.kind = RingKind::Integers;
    } else if (kind == "rationals") {
      check_keys(spec, {"kind"}, where);
      s.kind = RingKind::Rationals;
    } else if (kind == "modular") {
      check_keys(spec, {"kind", "modulus"}, where);
      s.kind = RingKind::Modular;
      s.modulus = parse_mpz(require(spec, "modulus", where), at(where, "modulus"));
    } else if (kind == "prime_field") {
      check_keys(spec, {"kind", "p"}, where);
      s.kind = RingKind::PrimeField;
      s.modulus = parse_mpz(require(spec, "p", where), at(where, "p"));
    } else if (kind == "poly" || kind == "poly_quot") {
      check_keys(spec, {"kind", "field", "var", "modulus"}, where);
      s.kind = kind == "poly" ? RingKind::Poly : RingKind::PolyQuot;
      field();
      if (spec.contains("var")) s.var = text_of(spec["var"], at(where, "var"));
      if (kind == "poly_quot") s.poly_modulus = text_of(require(spec, "modulus", where), at(where, "modulus"));
    } else if (kind == "finite_algebra") {
      check_keys(spec, {"kind", "p", "basis", "products"}, where);
      s.kind = RingKind::FiniteAlgebra;
      s.modulus = parse_mpz(require(spec, "p", where), at(where, "p"));
      const json& b = require(spec, "basis", where);
      if (!b.is_array() || b.empty()) throw ScenarioError(at(where, "basis"), "expected a nonempty list of names");
      for (std::size_t i = 0; i < b.size(); ++i) s.algebra.names.push_back(text_of(b[i], idx(at(where, "basis"), i)));
      const std::size_t d = b.size();
      auto& P = s.algebra.product;
      P.assign(d, std::vector<std::vector<long>>(d, std::vector<long>(d, 0)));
      for (std::size_t i = 0; i < d; ++i) {
        P[0][i][i] = 1;
        P[i][0][i] = 1;
      }
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < d; ++i) index[s.algebra.names[i]] = i;
      std::set<std::pair<std::size_t, std::size_t>> given;
      const json empty = json::object();
      const json& prods = spec.contains("products") ? spec["products"] : empty;
      if (!prods.is_object()) throw ScenarioError(at(where, "products"), "expected an object keyed by \"a*b\"");
      for (auto it = prods.begin(); it != prods.end(); ++it) {
        const std::string w = at(at(where, "products"), it.key());
        const auto star = it.key().find('*');
        if (star == std::string::npos) throw ScenarioError(w, "key must have the form \"a*b\"");
        const auto l = index.find(it.key().substr(0, star)), r = index.find(it.key().substr(star + 1));
        if (l == index.end() || r == index.end()) throw ScenarioError(w, "unknown basis name");
        if (l->second == 0 || r->second == 0) throw ScenarioError(w, "products with the identity are implied");
        const json& c = it.value();
        if (!c.is_array() || c.size() != d) throw ScenarioError(w, "expected " + std::to_string(d) + " coefficients");
        std::vector<long> coeffs;
        for (std::size_t k = 0; k < d; ++k) coeffs.push_back(static_cast<long>(int_of(c[k], idx(w, k))));
        const auto key = std::make_pair(l->second, r->second), rev = std::make_pair(r->second, l->second);
        if (given.count(rev) && P[r->second][l->second] != coeffs)
          throw ScenarioError(w, "product is not commutative");
        P[l->second][r->second] = coeffs;
        if (!given.count(rev)) P[r->second][l->second] = coeffs;
        given.insert(key);
      }
    } else {
      throw ScenarioError(at(where, "kind"), "unknown ring kind \"" + kind + "\"");
    }
    return make_ring(s);
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(where, e.what());
  }
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("<document>", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("<document>", "expected a JSON object");
  check_keys(doc, {"version", "description", "ring", "objects", "pipeline", "settings"}, "");

  Scenario sc;
  sc.version = static_cast<int>(int_of(require(doc, "version", "<document>"), "version"));
  if (sc.version != kSchemaVersion)
    throw ScenarioError("version", "unsupported schema version " + std::to_string(sc.version) + " (supported: " +
                                       std::to_string(kSchemaVersion) + ")");
  if (doc.contains("description")) sc.description = text_of(doc["description"], "description");
  sc.ring = parse_ring(require(doc, "ring", "<document>"), "ring");

  if (doc.contains("settings")) {
    const json& s = doc["settings"];
    check_keys(s, {"depth", "horizon", "out", "format"}, "settings");
    if (s.contains("depth")) sc.settings.depth = count_of(s["depth"], "settings.depth");
    if (s.contains("horizon")) sc.settings.horizon = count_of(s["horizon"], "settings.horizon");
    if (s.contains("out")) sc.settings.out = text_of(s["out"], "settings.out");
    if (s.contains("format")) {
      sc.settings.format = text_of(s["format"], "settings.format");
      if (sc.settings.format != "json" && sc.settings.format != "text")
        throw ScenarioError("settings.format", "unsupported format \"" + sc.settings.format + "\"");
    }
  }

  const json empty = json::object();
  const json& defs = doc.contains("objects") ? doc["objects"] : empty;
  if (!defs.is_object()) throw ScenarioError("objects", "expected an object keyed by name");
  ObjectBuilder(sc.ring, defs, sc.objects).build_all();

  std::map<std::string, Kind> names;
  for (const auto& [n, v] : sc.objects) names.emplace(n, kind_of(v));
  const json& pipe = require(doc, "pipeline", "<document>");
  if (!pipe.is_array()) throw ScenarioError("pipeline", "expected a list of steps");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < pipe.size(); ++i) {
    const std::string where = idx("pipeline", i);
    const json& st = pipe[i];
    check_keys(st, {"label", "op", "args", "as", "expect_certificate"}, where);
    Step step;
    step.op = text_of(require(st, "op", where), at(where, "op"));
    step.label = st.contains("label") ? text_of(st["label"], at(where, "label")) : step.op + "#" + std::to_string(i);
    if (!labels.insert(step.label).second) throw ScenarioError(at(where, "label"), "duplicate label \"" + step.label + "\"");
    step.args = st.contains("args") ? st["args"] : json::object();
    if (!step.args.is_object()) throw ScenarioError(at(where, "args"), "expected an object");
    if (st.contains("expect_certificate")) {
      if (!st["expect_certificate"].is_boolean()) throw ScenarioError(at(where, "expect_certificate"), "expected a boolean");
      step.expect_certificate = st["expect_certificate"].get<bool>();
    }
    const OpSpec* op = find_op(step.op);
    if (!op) throw ScenarioError(at(where, "op"), "unknown operation \"" + step.op + "\"");
    check_args(*op, step.args, names, sc.ring, at(where, "args"));
    if (st.contains("as")) {
      step.as = text_of(st["as"], at(where, "as"));
      if (!op->output) throw ScenarioError(at(where, "as"), "operation " + step.op + " produces no reusable object");
      if (names.count(*step.as)) throw ScenarioError(at(where, "as"), "name \"" + *step.as + "\" is already defined");
      names.emplace(*step.as, *op->output);
    }
    sc.pipeline.push_back(std::move(step));
  }
  sc.hash = fnv1a(doc.dump());
  return sc;
}

}  // namespace cwb::wb
