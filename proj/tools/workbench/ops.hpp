#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace cwb::wb {

enum class ArgType {
  Ref,      // name of an object or an earlier result
  RefPairs, // list of [name, name]
  Int,
  Count,    // nonnegative integer
  Elems,    // list of ring elements as strings
  Choice,   // one of `choices`
  Bool,
  Json,     // free-form, checked by the operation
};

struct ArgSpec {
  std::string name;
  ArgType type = ArgType::Ref;
  bool required = true;
  /// Accepted kinds for references.
  std::vector<Kind> kinds;
  std::vector<std::string> choices;
};

/// Names and values visible to a step.
using Env = std::map<std::string, Value>;

class Args {
 public:
  Args(const json& j, const Env& env, const Ring& ring, const Settings& settings)
      : j_(j), env_(env), ring_(ring), settings_(settings) {}

  bool has(const std::string& k) const { return j_.contains(k); }
  const Value& value(const std::string& k) const;
  template <class T>
  const T& ref(const std::string& k) const {
    return std::get<T>(value(k));
  }
  template <class T>
  const T& ref_at(const json& name) const {
    return std::get<T>(env_.at(name.get<std::string>()));
  }
  Object object(const std::string& k) const;
  Arrow arrow(const std::string& k) const;
  std::vector<Elem> elems(const std::string& k) const;
  long long integer(const std::string& k) const;
  std::size_t count(const std::string& k) const;
  std::size_t depth() const { return has("depth") ? count("depth") : settings_.depth; }
  std::size_t horizon() const { return has("horizon") ? count("horizon") : settings_.horizon; }
  std::string choice(const std::string& k) const { return j_.at(k).get<std::string>(); }
  bool flag(const std::string& k, bool dflt) const { return has(k) ? j_.at(k).get<bool>() : dflt; }
  const json& raw(const std::string& k) const { return j_.at(k); }
  const Ring& ring() const { return ring_; }
  const Env& env() const { return env_; }

 private:
  const json& j_;
  const Env& env_;
  const Ring& ring_;
  const Settings& settings_;
};

struct StepOutput {
  json result = json::object();
  json certificates = json::object();
  std::optional<Value> value;  // bound to the step's "as" name
  /// A verdict came back without a certificate.
  bool undetermined = false;
};

struct OpSpec {
  std::string name;
  /// Library module the operation belongs to.
  std::string module;
  std::vector<ArgSpec> args;
  std::optional<Kind> output;
  std::function<StepOutput(const Args&)> fn;
};

const std::vector<OpSpec>& all_ops();
const OpSpec* find_op(const std::string& name);

/// Static check of a step's arguments against the names defined so far.
void check_args(const OpSpec& op, const json& args, const std::map<std::string, Kind>& names, const Ring& ring,
                const std::string& where);

/// Names referenced by a step's arguments.
std::set<std::string> referenced_names(const OpSpec& op, const json& args);

}  // namespace cwb::wb
