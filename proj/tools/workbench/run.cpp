#include "run.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "ops.hpp"

namespace cwb::wb {

namespace {

struct Outcome {
  StepRecord record;
  std::optional<Value> value;
  int code = kOk;
};

Outcome execute(const Step& step, const Env& env, const Ring& ring, const Settings& settings) {
  Outcome o;
  o.record.label = step.label;
  o.record.op = step.op;
  const OpSpec& op = *find_op(step.op);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    StepOutput out = op.fn(Args(step.args, env, ring, settings));
    o.record.result = std::move(out.result);
    o.record.certificates = std::move(out.certificates);
    if (step.as) {
      if (!out.value) throw Error("step produced no value to bind to \"" + *step.as + "\"");
      o.value = std::move(out.value);
    }
    if (out.undetermined && step.expect_certificate) {
      o.record.error = "verdict undetermined where a certificate was demanded; increase depth or horizon";
      o.code = kHorizonInsufficient;
    }
  } catch (const HorizonInsufficient& e) {
    o.record.error = e.what();
    o.code = kHorizonInsufficient;
  } catch (const ScenarioError& e) {
    o.record.error = e.what();
    o.code = kScenarioError;
  } catch (const std::exception& e) {
    o.record.error = e.what();
    o.code = kMathError;
  }
  o.record.micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  if (o.record.error) o.record.error = "step \"" + step.label + "\" (" + step.op + "): " + *o.record.error;
  return o;
}

// Level of each step in the dependency graph derived from name references.
std::vector<std::size_t> levels(const Scenario& sc) {
  std::map<std::string, std::size_t> producer;
  std::vector<std::size_t> lvl(sc.pipeline.size(), 0);
  for (std::size_t i = 0; i < sc.pipeline.size(); ++i) {
    const Step& s = sc.pipeline[i];
    for (const auto& n : referenced_names(*find_op(s.op), s.args))
      if (auto it = producer.find(n); it != producer.end()) lvl[i] = std::max(lvl[i], lvl[it->second] + 1);
    if (s.as) producer[*s.as] = i;
  }
  return lvl;
}

}  // namespace

Report run(const Scenario& sc, const RunOptions& opts) {
  Settings settings = sc.settings;
  if (opts.depth) settings.depth = *opts.depth;
  if (opts.horizon) settings.horizon = *opts.horizon;

  Report rep;
  rep.scenario_hash = sc.hash;
  Env env = sc.objects;
  const std::size_t n = sc.pipeline.size();
  std::vector<std::optional<Outcome>> done(n);
  std::size_t stop = n;  // index of the earliest failing step

  if (!opts.parallel) {
    for (std::size_t i = 0; i < n && stop == n; ++i) {
      done[i] = execute(sc.pipeline[i], env, sc.ring, settings);
      if (done[i]->code != kOk) stop = i;
      else if (done[i]->value) env.emplace(*sc.pipeline[i].as, *done[i]->value);
    }
  } else {
    const auto lvl = levels(sc);
    const std::size_t top = n ? *std::max_element(lvl.begin(), lvl.end()) : 0;
    for (std::size_t L = 0; n && L <= top; ++L) {
      std::vector<std::pair<std::size_t, std::future<Outcome>>> jobs;
      for (std::size_t i = 0; i < stop; ++i)
        if (lvl[i] == L)
          jobs.emplace_back(i, std::async(std::launch::async, [&, i] { return execute(sc.pipeline[i], env, sc.ring, settings); }));
      for (auto& [i, f] : jobs) done[i] = f.get();
      for (auto& [i, f] : jobs)
        if (done[i]->code != kOk) stop = std::min(stop, i);
      for (auto& [i, f] : jobs)
        if (i < stop && done[i]->value) env.emplace(*sc.pipeline[i].as, *done[i]->value);
    }
  }

  for (std::size_t i = 0; i < n && i <= stop; ++i) {
    if (!done[i]) break;
    rep.steps.push_back(done[i]->record);
    if (i == stop) rep.exit_code = done[i]->code;
  }
  return rep;
}

json report_json(const Report& r, const EmitOptions& opts) {
  json steps = json::array(), timings = json::object();
  for (const auto& s : r.steps) {
    json j = {{"label", s.label}, {"op", s.op}, {"result", s.result}, {"certificates", s.certificates}};
    if (s.error) j["error"] = *s.error;
    steps.push_back(std::move(j));
    if (opts.timings) timings[s.label] = s.micros;
  }
  return {{"version", r.version}, {"scenario_hash", r.scenario_hash}, {"steps", steps}, {"timings", timings}};
}

namespace {

bool flat(const json& v) {
  if (v.is_object()) return v.empty();
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_object(); });
  return true;
}

void flatten(const std::string& key, const json& v, std::vector<std::pair<std::string, std::string>>& rows) {
  if (flat(v)) {
    rows.emplace_back(key, v.is_string() ? v.get<std::string>() : v.dump());
    return;
  }
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(key.empty() ? it.key() : key + "." + it.key(), it.value(), rows);
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) flatten(key + "[" + std::to_string(i) + "]", v[i], rows);
}

std::string text_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 5;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  std::ostringstream os;
  const std::string rule = "+" + std::string(w + 2, '-') + "+" + std::string(40, '-') + "\n";
  os << rule << "| " << "field" << std::string(w - 5, ' ') << " | value\n" << rule;
  for (const auto& [k, v] : rows) os << "| " << k << std::string(w - k.size(), ' ') << " | " << v << "\n";
  os << rule;
  return os.str();
}

}  // namespace

std::string emit(const Report& r, const std::string& format, const EmitOptions& opts) {
  if (format == "json") return report_json(r, opts).dump(2) + "\n";
  if (format != "text") throw InvalidArgument("unsupported report format \"" + format + "\"");
  std::ostringstream os;
  os << "report version " << r.version << ", scenario " << r.scenario_hash << ", " << r.steps.size() << " step(s)\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    os << "\n== step " << i + 1 << ": " << s.label << " (" << s.op << ") ==\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", s.result, rows);
    for (auto it = s.certificates.begin(); it != s.certificates.end(); ++it) flatten("certificate." + it.key(), it.value(), rows);
    if (s.error) rows.emplace_back("error", *s.error);
    if (opts.timings) rows.emplace_back("time_us", std::to_string(s.micros));
    os << text_table(rows);
  }
  return os.str();
}

}  // namespace cwb::wb
