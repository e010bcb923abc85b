#include "ovt/report.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace ovt::report {

using json = nlohmann::ordered_json;

namespace {

json solve_object(const SolveReport& r) {
  return {{"genus", std::string(to_string(r.params.genus))},
          {"lambda1_nm", r.params.lambda1_nm},
          {"lambda2_nm", r.params.lambda2_nm},
          {"K", r.params.K},
          {"delta_e", r.achieved_delta_e},
          {"iterations", r.iterations},
          {"converged", r.converged}};
}

}  // namespace

std::string sig6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string solve_json(const SolveReport& report) { return solve_object(report).dump(2) + "\n"; }

std::string solve_text(const SolveReport& r) {
  std::ostringstream out;
  out << "genus       " << to_string(r.params.genus) << '\n'
      << "lambda1_nm  " << sig6(r.params.lambda1_nm) << '\n'
      << "lambda2_nm  " << sig6(r.params.lambda2_nm) << '\n'
      << "K           " << sig6(r.params.K) << '\n'
      << "delta_e     " << sig6(r.achieved_delta_e) << '\n'
      << "iterations  " << r.iterations << '\n'
      << "converged   " << (r.converged ? "yes" : "no") << '\n';
  return out.str();
}

std::string table1_json(std::span<const Table1Entry> entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    json o;
    o["name"] = e.name;
    json fields = solve_object(e.report);
    for (auto& [key, value] : fields.items()) o[key] = value;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string table1_text(std::span<const Table1Entry> entries) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-6s %-10s %10s %10s %10s %12s %6s %s\n", "color", "genus",
                "lambda1", "lambda2", "K", "delta_e", "iter", "converged");
  out << buf;
  for (const auto& e : entries) {
    const auto& r = e.report;
    std::snprintf(buf, sizeof buf, "%-6s %-10s %10.6g %10.6g %10.6g %12.6g %6d %s\n", e.name.c_str(),
                  std::string(to_string(r.params.genus)).c_str(), r.params.lambda1_nm,
                  r.params.lambda2_nm, r.params.K, r.achieved_delta_e, r.iterations,
                  r.converged ? "yes" : "no");
    out << buf;
  }
  return out.str();
}

std::string targets_csv(std::span<const TargetColor> targets) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  out << "name,R,G,B,x,y,L_C\n";
  for (const auto& t : targets) {
    out << t.name << ',' << t.rgb_weights[0] << ',' << t.rgb_weights[1] << ',' << t.rgb_weights[2]
        << ',' << t.xy.x << ',' << t.xy.y << ',' << t.L_C << '\n';
  }
  return out.str();
}

std::string targets_json(std::span<const TargetColor> targets) {
  json arr = json::array();
  for (const auto& t : targets) {
    arr.push_back({{"name", t.name},
                   {"rgb_weights", {t.rgb_weights[0], t.rgb_weights[1], t.rgb_weights[2]}},
                   {"x", t.xy.x},
                   {"y", t.xy.y},
                   {"L_C", t.L_C}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace ovt::report
