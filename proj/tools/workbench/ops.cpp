#include "ops.hpp"

#include "encode.hpp"

namespace cwb::wb {

// ---------------------------------------------------------------- argument access

const Value& Args::value(const std::string& k) const { return env_.at(j_.at(k).get<std::string>()); }

Object Args::object(const std::string& k) const {
  const Value& v = value(k);
  if (auto m = std::get_if<PresentedModule>(&v)) return *m;
  return std::get<Complex>(v);
}

Arrow Args::arrow(const std::string& k) const {
  const Value& v = value(k);
  if (auto m = std::get_if<ModuleMorphism>(&v)) return *m;
  return std::get<ChainMap>(v);
}

static std::string as_text(const json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()); }

std::vector<Elem> Args::elems(const std::string& k) const {
  std::vector<Elem> out;
  for (const auto& e : j_.at(k)) out.push_back(ring_.parse(as_text(e)));
  return out;
}

long long Args::integer(const std::string& k) const { return j_.at(k).get<long long>(); }
std::size_t Args::count(const std::string& k) const { return static_cast<std::size_t>(j_.at(k).get<long long>()); }

// ---------------------------------------------------------------- registry helpers

namespace {

using K = Kind;

ArgSpec ref(std::string n, std::vector<Kind> k, bool required = true) { return {std::move(n), ArgType::Ref, required, std::move(k), {}}; }
ArgSpec count(std::string n, bool required = true) { return {std::move(n), ArgType::Count, required, {}, {}}; }
ArgSpec integer(std::string n, bool required = true) { return {std::move(n), ArgType::Int, required, {}, {}}; }
ArgSpec choice(std::string n, std::vector<std::string> c) { return {std::move(n), ArgType::Choice, true, {}, std::move(c)}; }
ArgSpec flag(std::string n) { return {std::move(n), ArgType::Bool, false, {}, {}}; }

const std::vector<Kind> kObject{K::Module, K::Complex};
const std::vector<Kind> kArrow{K::Morphism, K::ChainMap};

json bools(const std::vector<bool>& v) {
  json out = json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

json verdicts_json(const std::vector<StabilizationVerdict>& vs, std::size_t horizon, bool& undetermined) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back(v.str(horizon));
    if (!v.stabilized_at) undetermined = true;
  }
  return out;
}

json stabilized_json(const std::vector<StabilizationVerdict>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(opt_json(v.stabilized_at));
  return out;
}

json lim_json(const LimResult& r) {
  json images = json::array();
  for (const auto& chain : r.images) {
    json row = json::array();
    for (const auto& m : chain) row.push_back(describe(m));
    images.push_back(row);
  }
  return {{"lim", module_json(r.lim)}, {"images", images}, {"verdict", r.verdict()}};
}

json lim_certificates(const LimResult& r) {
  json sf = json::array();
  for (const auto& s : r.stable_from) sf.push_back(opt_json(s));
  return {{"mittag_leffler", r.mittag_leffler}, {"depth", r.images.empty() ? 0 : r.images.size() - 1}, {"stable_from", sf}};
}

json fd_json(const FdSubgroup& u) {
  return {{"module", module_json(u.module)},
          {"ambient", describe(u.ambient->module())},
          {"inclusion", matrix_json(u.inclusion.matrix())}};
}

StepOutput module_result(const PresentedModule& m, const char* map_key = nullptr,
                         const std::optional<ModuleMorphism>& map = std::nullopt) {
  StepOutput out;
  out.result["module"] = module_json(m);
  if (map_key) out.result[map_key] = matrix_json(map->matrix());
  out.value = m;
  return out;
}

StepOutput complex_result(const Complex& x) {
  StepOutput out;
  out.result["complex"] = complex_json(x);
  out.value = x;
  return out;
}

std::vector<OpSpec> build_registry() {
  std::vector<OpSpec> ops;
  auto add = [&](std::string name, std::string module, std::vector<ArgSpec> args, std::optional<Kind> output,
                 std::function<StepOutput(const Args&)> fn) {
    ops.push_back(OpSpec{std::move(name), std::move(module), std::move(args), output, std::move(fn)});
  };

  // ------------------------------------------------------------ exact-rings
  add("ring_make", "exact-rings", {{"ring", ArgType::Json, false, {}, {}}}, std::nullopt, [](const Args& a) {
    const Ring r = a.has("ring") ? parse_ring(a.raw("ring"), "args.ring") : a.ring();
    StepOutput out;
    out.result = {{"name", r.name()},
                  {"kind", to_string(r.kind())},
                  {"characteristic", r.characteristic().get_str()},
                  {"cardinality", r.is_finite() ? json(r.cardinality().get_str()) : json("infinite")},
                  {"is_field", r.is_field()},
                  {"is_euclidean", r.is_euclidean()},
                  {"cover", r.cover().name()},
                  {"cover_rank", r.cover_rank()}};
    out.certificates["matches_scenario_ring"] = r == a.ring();
    return out;
  });

  add("smith_normal_form", "exact-rings", {ref("matrix", {K::Matrix})}, K::Matrix, [](const Args& a) {
    const Matrix& m = a.ref<Matrix>("matrix");
    const SmithForm s = smith_normal_form(m);
    StepOutput out;
    json diag = json::array();
    for (const auto& d : s.diagonal) diag.push_back(m.ring().format(d));
    out.result = {{"U", matrix_json(s.U)}, {"D", matrix_json(s.D)}, {"V", matrix_json(s.V)}, {"rank", s.rank}, {"diagonal", diag}};
    bool chain = true;
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
      chain = chain && m.ring().divide(s.diagonal[i + 1], s.diagonal[i]).has_value();
    out.certificates = {{"UMV_equals_D", s.U * m * s.V == s.D}, {"divisibility_chain", chain}};
    out.value = s.D;
    return out;
  });

  add("solve_linear", "exact-rings", {ref("a", {K::Matrix}), ref("b", {K::Matrix})}, K::Matrix, [](const Args& a) {
    const Matrix &A = a.ref<Matrix>("a"), &b = a.ref<Matrix>("b");
    const auto x = solve_linear(A, b);
    StepOutput out;
    out.result = {{"solvable", x.has_value()}, {"x", x ? matrix_json(*x) : json(nullptr)}};
    if (x) {
      out.certificates["verified"] = A * *x == b;
      out.value = *x;
    }
    return out;
  });

  // ------------------------------------------------------------ fp-modules
  add("hom_module", "fp-modules", {ref("source", {K::Module}), ref("target", {K::Module})}, K::Module, [](const Args& a) {
    const HomModule h = hom_module(a.ref<PresentedModule>("source"), a.ref<PresentedModule>("target"));
    StepOutput out = module_result(h.module);
    json basis = json::array();
    for (const auto& f : h.basis) basis.push_back(matrix_json(f.matrix()));
    out.result["basis"] = basis;
    return out;
  });

  add("kernel", "fp-modules", {ref("morphism", {K::Morphism})}, K::Module, [](const Args& a) {
    const auto r = kernel(a.ref<ModuleMorphism>("morphism"));
    return module_result(r.module, "inclusion", r.inclusion);
  });
  add("cokernel", "fp-modules", {ref("morphism", {K::Morphism})}, K::Module, [](const Args& a) {
    const auto r = cokernel(a.ref<ModuleMorphism>("morphism"));
    return module_result(r.module, "projection", r.projection);
  });
  add("image", "fp-modules", {ref("morphism", {K::Morphism})}, K::Module, [](const Args& a) {
    const auto r = image(a.ref<ModuleMorphism>("morphism"));
    StepOutput out = module_result(r.module, "inclusion", r.inclusion);
    out.result["corestriction"] = matrix_json(r.corestriction.matrix());
    return out;
  });

  add("length", "fp-modules", {ref("module", {K::Module})}, std::nullopt, [](const Args& a) {
    StepOutput out;
    out.result["length"] = length_json(length(a.ref<PresentedModule>("module")));
    return out;
  });

  add("socle", "fp-modules", {ref("module", {K::Module}), ref("ideal", {K::Ideal})}, K::Module, [](const Args& a) {
    const auto r = socle(a.ref<PresentedModule>("module"), a.ref<Ideal>("ideal"));
    return module_result(r.module, "inclusion", r.inclusion);
  });

  add("socle_series", "fp-modules", {ref("module", {K::Module}), ref("ideal", {K::Ideal}), count("n")}, std::nullopt,
      [](const Args& a) {
        StepOutput out;
        json series = json::array();
        for (const auto& s : socle_series(a.ref<PresentedModule>("module"), a.ref<Ideal>("ideal"), a.count("n")))
          series.push_back(module_json(s.module));
        out.result["series"] = series;
        return out;
      });

  add("adic_stage", "fp-modules", {ref("module", {K::Module}), ref("ideal", {K::Ideal}), count("n")}, K::Module,
      [](const Args& a) {
        const auto r = adic_stage(a.ref<PresentedModule>("module"), a.ref<Ideal>("ideal"), a.count("n"));
        StepOutput out = module_result(r.module, "projection", r.projection);
        out.result["tower"] = r.tower ? matrix_json(r.tower->matrix()) : json(nullptr);
        return out;
      });

  add("factors_through_projective", "fp-modules", {ref("morphism", {K::Morphism})}, std::nullopt, [](const Args& a) {
    const ModuleMorphism& f = a.ref<ModuleMorphism>("morphism");
    const auto r = factors_through_projective(f);
    StepOutput out;
    out.result["factors"] = r.factors;
    if (r.factors) {
      out.result["to_free"] = matrix_json(r.to_free->matrix());
      out.result["from_free"] = matrix_json(r.from_free->matrix());
      out.certificates["witness_composes_to_f"] = same_map(compose(*r.from_free, *r.to_free), f);
    }
    return out;
  });

  // ------------------------------------------------------------ chain-complexes
  add("shift", "chain-complexes", {ref("complex", {K::Complex}), integer("k")}, K::Complex, [](const Args& a) {
    return complex_result(shift(a.ref<Complex>("complex"), static_cast<int>(a.integer("k"))));
  });

  add("cone", "chain-complexes", {ref("map", {K::ChainMap})}, K::Complex, [](const Args& a) {
    const auto r = cone(a.ref<ChainMap>("map"));
    StepOutput out = complex_result(r.cone);
    out.result["inclusion"] = chain_map_json(r.inclusion);
    out.result["projection"] = chain_map_json(r.projection);
    return out;
  });

  add("tensor_complex", "chain-complexes", {ref("x", {K::Complex}), ref("y", {K::Complex})}, K::Complex,
      [](const Args& a) { return complex_result(tensor_complex(a.ref<Complex>("x"), a.ref<Complex>("y"))); });
  add("hom_complex", "chain-complexes", {ref("x", {K::Complex}), ref("y", {K::Complex})}, K::Complex,
      [](const Args& a) { return complex_result(hom_complex(a.ref<Complex>("x"), a.ref<Complex>("y"))); });

  add("homology", "chain-complexes", {ref("complex", {K::Complex}), integer("n", false)}, K::Module, [](const Args& a) {
    const Complex& x = a.ref<Complex>("complex");
    StepOutput out;
    if (a.has("n")) {
      const PresentedModule h = homology(x, static_cast<int>(a.integer("n")));
      out.result["module"] = module_json(h);
      out.value = h;
      return out;
    }
    json table = json::object();
    if (!x.empty())
      for (int n = x.lo(); n <= x.hi(); ++n) table[std::to_string(n)] = module_json(homology(x, n));
    out.result["table"] = table;
    return out;
  });

  add("homotopy_hom", "chain-complexes", {ref("x", {K::Complex}), ref("y", {K::Complex})}, K::Module, [](const Args& a) {
    const auto h = homotopy_hom(a.ref<Complex>("x"), a.ref<Complex>("y"));
    StepOutput out = module_result(h.module);
    out.result["basis_size"] = h.basis.size();
    return out;
  });

  add("truncate_ge", "chain-complexes", {ref("complex", {K::Complex}), integer("n")}, K::Complex, [](const Args& a) {
    const auto t = truncate_ge(a.ref<Complex>("complex"), static_cast<int>(a.integer("n")));
    StepOutput out = complex_result(t.complex);
    out.result["inclusion"] = chain_map_json(t.inclusion);
    return out;
  });

  add("is_acyclic", "chain-complexes", {ref("complex", {K::Complex})}, std::nullopt, [](const Args& a) {
    StepOutput out;
    out.result["acyclic"] = is_acyclic(a.ref<Complex>("complex"));
    return out;
  });

  add("quasi_iso_check", "chain-complexes", {ref("map", {K::ChainMap})}, std::nullopt, [](const Args& a) {
    StepOutput out;
    out.result["quasi_isomorphism"] = quasi_iso_check(a.ref<ChainMap>("map"));
    return out;
  });

  // ------------------------------------------------------------ koszul-local
  add("koszul", "koszul-local", {{"elements", ArgType::Elems, true, {}, {}}}, K::Complex,
      [](const Args& a) { return complex_result(koszul(a.ring(), a.elems("elements"))); });

  add("koszul_dual", "koszul-local", {ref("complex", {K::Complex})}, K::Complex,
      [](const Args& a) { return complex_result(koszul_dual(a.ref<Complex>("complex"))); });

  add("lambda_stage", "koszul-local", {ref("complex", {K::Complex}), ref("ideal", {K::Ideal}), count("t")}, K::Complex,
      [](const Args& a) {
        return complex_result(lambda_stage(a.ref<Complex>("complex"), a.ref<Ideal>("ideal"), a.count("t")));
      });
  add("gamma_stage", "koszul-local", {ref("complex", {K::Complex}), ref("ideal", {K::Ideal}), count("t")}, K::Complex,
      [](const Args& a) {
        return complex_result(gamma_stage(a.ref<Complex>("complex"), a.ref<Ideal>("ideal"), a.count("t")));
      });

  add("tower_report", "koszul-local",
      {ref("complex", {K::Complex}), ref("ideal", {K::Ideal}), count("T", false), choice("mode", {"gamma", "lambda"})},
      std::nullopt, [](const Args& a) {
        const std::size_t T = a.has("T") ? a.count("T") : a.horizon();
        const TowerMode mode = a.choice("mode") == "gamma" ? TowerMode::Gamma : TowerMode::Lambda;
        const TowerReport r = tower_report(a.ref<Complex>("complex"), a.ref<Ideal>("ideal"), T, mode);
        StepOutput out;
        json rows = json::array(), certs = json::object();
        for (const auto& row : r.rows) {
          json mods = json::array(), trans = json::array();
          for (const auto& m : row.modules) mods.push_back(describe(m));
          for (const auto& f : row.transitions)
            trans.push_back({{"injective", is_injective(f)}, {"surjective", is_surjective(f)}, {"matrix", matrix_json(f.matrix())}});
          rows.push_back({{"degree", row.degree},
                          {"modules", mods},
                          {"transitions", trans},
                          {"verdict", row.verdict.str(T)}});
          certs[std::to_string(row.degree)] = {{"stabilized_at", opt_json(row.verdict.stabilized_at)},
                                               {"essentially_zero_after", opt_json(row.verdict.essentially_zero_after)}};
          const bool adic = row.degree == 0 && r.adic_match == std::optional<bool>(true);
          if (!row.all_zero() && !row.verdict.stabilized_at && !row.verdict.essentially_zero_after && !adic)
            out.undetermined = true;
        }
        out.result = {{"mode", a.choice("mode")}, {"horizon", T}, {"rows", rows}};
        out.result["adic_match"] = r.adic_match ? json(*r.adic_match) : json(nullptr);
        out.certificates["rows"] = certs;
        return out;
      });

  add("adjunction_check", "koszul-local",
      {ref("x", {K::Complex}), ref("y", {K::Complex}), ref("ideal", {K::Ideal}), count("t")}, std::nullopt,
      [](const Args& a) {
        const auto r = adjunction_check(a.ref<Complex>("x"), a.ref<Complex>("y"), a.ref<Ideal>("ideal"), a.count("t"));
        StepOutput out;
        out.result = {{"holds", r.holds}, {"gamma_side", module_json(r.gamma_side)}, {"lambda_side", module_json(r.lambda_side)}};
        return out;
      });

  // ------------------------------------------------------------ matlis-duality
  add("injective_envelope_simple", "matlis-duality", {}, K::Module, [](const Args& a) {
    const auto e = injective_envelope_simple(a.ring());
    StepOutput out = module_result(e.module);
    out.result["self_injective_model"] = e.self_injective_model;
    out.result["socle_simple"] = e.socle_simple;
    out.certificates = {{"baer_injective", e.injective_verified}, {"ideals_tested", e.ideals_tested}};
    return out;
  });

  add("matlis_dual", "matlis-duality", {ref("module", {K::Module})}, K::Module, [](const Args& a) {
    const PresentedModule& m = a.ref<PresentedModule>("module");
    const PresentedModule d = matlis_dual(m);
    StepOutput out = module_result(d);
    out.certificates["length_preserved"] = length(d) == length(m);
    return out;
  });

  add("double_dual_check", "matlis-duality", {ref("module", {K::Module}, false), flag("all_cyclic")}, std::nullopt,
      [](const Args& a) {
        std::vector<PresentedModule> ms;
        if (a.has("module")) ms.push_back(a.ref<PresentedModule>("module"));
        if (a.flag("all_cyclic", false)) {
          const auto local = LocalArtinianRing::from(a.ring());
          for (const auto& J : all_ideals(local)) {
            Matrix rel(a.ring(), 1, J.generators.size());
            for (std::size_t i = 0; i < J.generators.size(); ++i) rel(0, i) = J.generators[i];
            ms.emplace_back(a.ring(), 1, rel);
          }
        }
        if (ms.empty()) throw InvalidArgument("double_dual_check needs \"module\" or \"all_cyclic\"");
        StepOutput out;
        json rows = json::array();
        bool all = true;
        for (const auto& m : ms) {
          const auto r = double_dual_check(m);
          rows.push_back({{"module", describe(m)}, {"length", length_json(length(m))}, {"iso", r.iso}});
          all = all && r.iso;
        }
        out.result = {{"rows", rows}, {"all", all}};
        return out;
      });

  add("E_filtration", "matlis-duality", {count("n")}, K::Module, [](const Args& a) {
    const auto r = E_filtration(a.ring(), a.count("n"));
    return module_result(r.module, "inclusion", r.inclusion);
  });

  add("end_E_compare", "matlis-duality", {count("n")}, std::nullopt, [](const Args& a) {
    const auto r = end_E_compare(a.ring(), a.count("n"));
    StepOutput out;
    out.result = {{"hom", module_json(r.hom)}, {"quotient", module_json(r.quotient)}, {"iso", r.iso}};
    return out;
  });

  // ------------------------------------------------------------ indcat
  add("hom_formal", "indcat", {ref("x", {K::Sequence}), ref("y", {K::Sequence}), count("depth", false)}, K::Module,
      [](const Args& a) {
        const auto r = hom_formal(a.ref<ObjectSequence>("x"), a.ref<ObjectSequence>("y"), a.depth());
        StepOutput out = module_result(r.approximation);
        json tower = json::array(), certs = json::array();
        for (const auto& m : r.tower.modules) tower.push_back(describe(m));
        for (const auto& c : r.certificates) certs.push_back(opt_json(c));
        out.result["tower"] = tower;
        out.result["lim_verdict"] = r.lim.verdict();
        out.certificates = {{"stabilization", certs}, {"mittag_leffler", r.lim.mittag_leffler}};
        out.undetermined = !r.all_stabilized() || !r.lim.mittag_leffler;
        return out;
      });

  add("is_cauchy", "indcat", {ref("sequence", {K::Sequence}), ref("tests", {K::TestSet}), count("horizon", false)},
      std::nullopt, [](const Args& a) {
        const std::size_t h = a.horizon();
        const auto vs = is_cauchy(a.ref<ObjectSequence>("sequence"), a.ref<TestSet>("tests"), h);
        StepOutput out;
        out.result["verdicts"] = verdicts_json(vs, h, out.undetermined);
        out.certificates["stabilized_at"] = stabilized_json(vs);
        return out;
      });

  add("eventually_invertible", "indcat",
      {ref("morphism", {K::FormalMorphism}), ref("tests", {K::TestSet}), count("horizon", false)}, std::nullopt,
      [](const Args& a) {
        const std::size_t h = a.horizon();
        const auto vs = eventually_invertible(a.ref<FormalMorphism>("morphism"), a.ref<TestSet>("tests"), h);
        StepOutput out;
        out.result["verdicts"] = verdicts_json(vs, h, out.undetermined);
        out.certificates["stabilized_at"] = stabilized_json(vs);
        return out;
      });

  add("lim_lim1", "indcat", {ref("tower", {K::Tower})}, K::Module, [](const Args& a) {
    const auto r = lim_lim1(a.ref<InverseTower>("tower"));
    StepOutput out;
    out.result = lim_json(r);
    out.certificates = lim_certificates(r);
    out.undetermined = !r.mittag_leffler;
    out.value = r.lim;
    return out;
  });

  add("hocolim_finite", "indcat", {ref("sequence", {K::Sequence}), count("n"), ref("tests", {K::TestSet}, false)},
      K::Complex, [](const Args& a) {
        const auto& x = a.ref<ObjectSequence>("sequence");
        const std::size_t n = a.count("n");
        StepOutput out = complex_result(hocolim_finite(x, n).telescope);
        if (a.has("tests")) {
          json checks = json::array();
          bool all = true;
          for (const auto& c : a.ref<TestSet>("tests").objects) {
            const auto* cx = std::get_if<Complex>(&c);
            if (!cx) throw InvalidArgument("hocolim tests must be complexes");
            const auto r = hocolim_check(x, n, *cx);
            checks.push_back({{"test", describe(c)}, {"colim", describe(r.colim)}, {"hom", describe(r.hom)}, {"iso", r.iso}});
            all = all && r.iso;
          }
          out.result["checks"] = checks;
          out.certificates["all_iso"] = all;
        }
        return out;
      });

  add("phantom_check", "indcat", {ref("map", kArrow), ref("tests", {K::TestSet})}, std::nullopt, [](const Args& a) {
    const auto r = phantom_check(a.arrow("map"), a.ref<TestSet>("tests"));
    StepOutput out;
    out.result = {{"phantom", r.phantom}, {"vanishes", bools(r.vanishes)}};
    return out;
  });

  add("phantomless_check", "indcat",
      {{"pairs", ArgType::RefPairs, true, {K::Sequence}, {}}, count("depth", false)}, std::nullopt, [](const Args& a) {
        StepOutput out;
        json rows = json::array(), certs = json::array();
        for (const auto& p : a.raw("pairs")) {
          const auto r = phantomless_check(a.ref_at<ObjectSequence>(p[0]), a.ref_at<ObjectSequence>(p[1]), a.depth());
          rows.push_back({{"x", p[0]}, {"y", p[1]}, {"verdict", r.lim.verdict()}, {"approximation", describe(r.approximation)}});
          certs.push_back(r.lim.mittag_leffler);
          if (!r.lim.mittag_leffler) out.undetermined = true;
        }
        out.result["pairs"] = rows;
        out.certificates["mittag_leffler"] = certs;
        return out;
      });

  add("truncation_tower", "indcat", {ref("complex", {K::BoundedAbove}), count("horizon", false)}, K::Sequence,
      [](const Args& a) {
        const ObjectSequence s = truncation_tower(a.ref<BoundedAboveComplex>("complex"));
        StepOutput out;
        json items = json::array();
        for (std::size_t n = 0; n <= a.horizon(); ++n) items.push_back(object_json(s.item(n)));
        out.result["items"] = items;
        out.value = s;
        return out;
      });

  add("restricted_yoneda_check", "indcat",
      {ref("x", {K::BoundedAbove}), ref("y", {K::BoundedAbove}), count("horizon", false)}, std::nullopt,
      [](const Args& a) {
        const std::size_t h = a.horizon();
        const auto r = restricted_yoneda_check(a.ref<BoundedAboveComplex>("x"), a.ref<BoundedAboveComplex>("y"), h);
        StepOutput out;
        json groups = json::array();
        for (const auto& g : r.groups) groups.push_back(describe(g));
        out.result = lim_json(r.lim);
        out.result["groups"] = groups;
        out.result["horizon"] = h;
        out.result["matches_direct"] = r.matches_direct ? json(*r.matches_direct) : json(nullptr);
        if (!r.horizon_sufficient()) out.result["verdict"] = "not stabilized by horizon " + std::to_string(h) + ": increase horizon";
        out.certificates = lim_certificates(r.lim);
        out.certificates["stabilized_from"] = opt_json(r.stabilized_from);
        out.undetermined = !r.horizon_sufficient() || !r.lim.mittag_leffler;
        return out;
      });

  add("fd_subgroup", "indcat", {ref("via", kArrow), ref("x", kObject)}, K::FdSubgroup, [](const Args& a) {
    const FdSubgroup u = fd_subgroup(a.arrow("via"), a.object("x"));
    StepOutput out;
    out.result = fd_json(u);
    out.value = u;
    return out;
  });
  add("fd_sum", "indcat", {ref("u1", {K::FdSubgroup}), ref("u2", {K::FdSubgroup})}, K::FdSubgroup, [](const Args& a) {
    const FdSubgroup u = fd_sum(a.ref<FdSubgroup>("u1"), a.ref<FdSubgroup>("u2"));
    StepOutput out;
    out.result = fd_json(u);
    out.value = u;
    return out;
  });
  add("fd_intersect", "indcat", {ref("u1", {K::FdSubgroup}), ref("u2", {K::FdSubgroup})}, K::FdSubgroup,
      [](const Args& a) {
        const FdSubgroup u = fd_intersect(a.ref<FdSubgroup>("u1"), a.ref<FdSubgroup>("u2"));
        StepOutput out;
        out.result = fd_json(u);
        out.value = u;
        return out;
      });

  return ops;
}

}  // namespace

const std::vector<OpSpec>& all_ops() {
  static const std::vector<OpSpec> ops = build_registry();
  return ops;
}

const OpSpec* find_op(const std::string& name) {
  for (const auto& op : all_ops())
    if (op.name == name) return &op;
  return nullptr;
}

namespace {

void check_ref(const json& v, const ArgSpec& a, const std::map<std::string, Kind>& names, const std::string& where) {
  if (!v.is_string()) throw ScenarioError(where, "expected a name");
  const std::string n = v.get<std::string>();
  auto it = names.find(n);
  if (it == names.end()) throw ScenarioError(where, "undefined name \"" + n + "\"");
  if (std::find(a.kinds.begin(), a.kinds.end(), it->second) == a.kinds.end()) {
    std::string want;
    for (std::size_t i = 0; i < a.kinds.size(); ++i) want += (i ? " or " : "") + kind_name(a.kinds[i]);
    throw ScenarioError(where, "\"" + n + "\" is a " + kind_name(it->second) + ", expected a " + want);
  }
}

void check_elem(const json& v, const Ring& ring, const std::string& where) {
  if (!v.is_string() && !v.is_number_integer()) throw ScenarioError(where, "expected a ring element");
  try {
    ring.parse(as_text(v));
  } catch (const std::exception& e) {
    throw ScenarioError(where, e.what());
  }
}

}  // namespace

void check_args(const OpSpec& op, const json& args, const std::map<std::string, Kind>& names, const Ring& ring,
                const std::string& where) {
  for (auto it = args.begin(); it != args.end(); ++it) {
    const bool known = std::any_of(op.args.begin(), op.args.end(), [&](const ArgSpec& a) { return a.name == it.key(); });
    if (!known) throw ScenarioError(where + "." + it.key(), "unknown argument for " + op.name);
  }
  for (const auto& a : op.args) {
    const std::string w = where + "." + a.name;
    if (!args.contains(a.name)) {
      if (a.required) throw ScenarioError(w, "missing argument");
      continue;
    }
    const json& v = args[a.name];
    switch (a.type) {
      case ArgType::Ref:
        check_ref(v, a, names, w);
        break;
      case ArgType::RefPairs:
        if (!v.is_array()) throw ScenarioError(w, "expected a list of [name, name] pairs");
        for (std::size_t i = 0; i < v.size(); ++i) {
          const std::string wi = w + "[" + std::to_string(i) + "]";
          if (!v[i].is_array() || v[i].size() != 2) throw ScenarioError(wi, "expected a [name, name] pair");
          check_ref(v[i][0], a, names, wi + "[0]");
          check_ref(v[i][1], a, names, wi + "[1]");
        }
        break;
      case ArgType::Int:
        if (!v.is_number_integer()) throw ScenarioError(w, "expected an integer");
        break;
      case ArgType::Count:
        if (!v.is_number_integer() || v.get<long long>() < 0) throw ScenarioError(w, "expected a nonnegative integer");
        break;
      case ArgType::Elems:
        if (!v.is_array()) throw ScenarioError(w, "expected a list of ring elements");
        for (std::size_t i = 0; i < v.size(); ++i) check_elem(v[i], ring, w + "[" + std::to_string(i) + "]");
        break;
      case ArgType::Choice:
        if (!v.is_string() || std::find(a.choices.begin(), a.choices.end(), v.get<std::string>()) == a.choices.end()) {
          std::string opts;
          for (std::size_t i = 0; i < a.choices.size(); ++i) opts += (i ? ", " : "") + a.choices[i];
          throw ScenarioError(w, "expected one of " + opts);
        }
        break;
      case ArgType::Bool:
        if (!v.is_boolean()) throw ScenarioError(w, "expected a boolean");
        break;
      case ArgType::Json:
        break;
    }
  }
}

std::set<std::string> referenced_names(const OpSpec& op, const json& args) {
  std::set<std::string> out;
  for (const auto& a : op.args) {
    if (!args.contains(a.name)) continue;
    const json& v = args[a.name];
    if (a.type == ArgType::Ref) out.insert(v.get<std::string>());
    if (a.type == ArgType::RefPairs)
      for (const auto& p : v) {
        out.insert(p[0].get<std::string>());
        out.insert(p[1].get<std::string>());
      }
  }
  return out;
}

}  // namespace cwb::wb
