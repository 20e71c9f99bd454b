#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cwb/indcat.hpp"
#include "cwb/koszul.hpp"
#include "cwb/matlis.hpp"

namespace cwb::wb {

using json = nlohmann::json;

/// Malformed or inconsistent scenario; `where` is a path such as
/// "objects.M.relations[1]".
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

using Value = std::variant<PresentedModule, ModuleMorphism, Matrix, Ideal, Complex, ChainMap, BoundedAboveComplex,
                           ObjectSequence, InverseTower, TestSet, FormalMorphism, FdSubgroup>;

enum class Kind {
  Module,
  Morphism,
  Matrix,
  Ideal,
  Complex,
  ChainMap,
  BoundedAbove,
  Sequence,
  Tower,
  TestSet,
  FormalMorphism,
  FdSubgroup,
};

Kind kind_of(const Value& v);

template <class T, class... Ts>
constexpr std::size_t index_in(const std::variant<Ts...>*) {
  std::size_t i = 0;
  bool found = false;
  ((found = found || std::is_same_v<T, Ts>, i += found ? 0 : 1), ...);
  return i;
}
template <class T>
constexpr Kind kind_for() {
  return static_cast<Kind>(index_in<T>(static_cast<const Value*>(nullptr)));
}
std::string kind_name(Kind k);

struct Step {
  std::string label;
  std::string op;
  json args;
  std::optional<std::string> as;
  /// Exit with the horizon code when this step's verdict is undetermined.
  bool expect_certificate = false;
};

struct Settings {
  std::size_t depth = 4;
  std::size_t horizon = 6;
  std::optional<std::string> out;
  std::string format = "json";
};

struct Scenario {
  int version = 1;
  std::string description;
  Ring ring = Ring::integers();
  std::map<std::string, Value> objects;
  std::vector<Step> pipeline;
  Settings settings;
  /// FNV-1a of the canonical scenario text.
  std::string hash;
};

constexpr int kSchemaVersion = 1;

Scenario parse_scenario(const std::string& text);

/// "Z", "Q", "Z/8", "GF(5)", "GF(2)[x]", "Q[t]", "GF(2)[x]/(x^3)".
Ring parse_ring_name(const std::string& name);
Ring parse_ring(const json& spec, const std::string& where);

/// Rows of strings parsed by the ring; reports the offending row.
Matrix parse_matrix(const Ring& ring, const json& rows, const std::string& where, std::optional<std::size_t> cols = {});

}  // namespace cwb::wb
