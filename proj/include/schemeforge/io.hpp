#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "schemeforge/classify.hpp"

namespace schemeforge {

using nlohmann::json;

/// GroupSpec file:
///   { "degree": n, "generators": [[images...], ...], "name": str }
/// or the cycle-notation variant:
///   { "degree": n, "cycles": ["(0 1 2)(3 4)", ...], "name": str }
/// An optional "subgroup" selects generators for a coset action, either by
/// index into the generator list or by explicit images / cycles.
struct GroupSpec {
  std::string name;
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> subgroup_generators;  // empty when absent
  bool has_subgroup = false;
};

inline GroupSpec parse_group_spec(const json& j) {
  GroupSpec spec;
  try {
    spec.degree = j.at("degree").get<int>();
    spec.name = j.value("name", "unnamed");
    auto parse_gen_list = [&](const json& node) {
      std::vector<Permutation> out;
      if (node.contains("generators")) {
        for (const auto& images : node.at("generators")) {
          Permutation p(images.get<std::vector<int>>());
          if (p.degree() != spec.degree || !p.is_valid())
            throw ParseError("group spec: invalid generator image list");
          out.push_back(std::move(p));
        }
      }
      if (node.contains("cycles"))
        for (const auto& text : node.at("cycles"))
          out.push_back(parse_cycles(text.get<std::string>(), spec.degree));
      return out;
    };
    spec.generators = parse_gen_list(j);
    if (spec.generators.empty()) throw ParseError("group spec: no generators");
    if (j.contains("subgroup")) {
      spec.has_subgroup = true;
      const json& sub = j.at("subgroup");
      if (sub.contains("indices")) {
        for (int idx : sub.at("indices").get<std::vector<int>>()) {
          if (idx < 0 || static_cast<std::size_t>(idx) >= spec.generators.size())
            throw ParseError("group spec: subgroup generator index out of range");
          spec.subgroup_generators.push_back(spec.generators[static_cast<std::size_t>(idx)]);
        }
      } else {
        spec.subgroup_generators = parse_gen_list(sub);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("group spec: ") + e.what());
  }
  return spec;
}

/// SchemeSpec file: { "n": int, "color": [[int, ...], ...] }.
inline std::vector<std::vector<int>> parse_scheme_spec(const json& j) {
  try {
    int n = j.at("n").get<int>();
    auto color = j.at("color").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(color.size()) != n) throw ParseError("scheme spec: row count != n");
    return color;
  } catch (const json::exception& e) {
    throw ParseError(std::string("scheme spec: ") + e.what());
  }
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline json to_json(const WedderburnRecord& w) {
  json j{{"applicable", w.applicable}};
  if (w.applicable) {
    j["t"] = w.t;
    j["s"] = w.s;
    j["predicted_dim"] = w.predicted;
    j["actual_dim"] = w.actual;
    j["holds"] = w.holds;
  } else {
    j["reason"] = w.reason;
  }
  return j;
}

inline json to_json(const ClassificationReport& r) {
  json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["rank"] = r.rank;
  j["thinness"] = to_string(r.thin);
  j["suborbit_sizes"] = r.suborbit_sizes;
  j["base_point"] = r.base_point;
  j["dims"] = {{"t0", r.dim_t0}, {"t1", r.dim_t1}, {"t", r.dim_t}};
  if (r.dim_t_tilde) j["dims"]["t_tilde"] = *r.dim_t_tilde;
  if (r.second_base) {
    json sb{{"base_point", r.second_base->base_point},
            {"t0", r.second_base->t0},
            {"t", r.second_base->t}};
    if (r.second_base->t_tilde) sb["t_tilde"] = *r.second_base->t_tilde;
    j["second_base"] = sb;
  }
  json dps = json::array();
  for (const auto& dp : r.diamonds)
    dps.push_back({{"i", dp.i}, {"k", dp.k}, {"j", dp.j}, {"witness", dp.witness}});
  j["diamond_pairs"] = dps;
  j["unordered_diamond_pairs"] = r.unordered_diamond_pairs;
  json st = json::object();
  if (r.triply_regular_structural) st["triply_regular"] = *r.triply_regular_structural;
  if (r.t_equals_ttilde_structural) st["t_equals_t_tilde"] = *r.t_equals_ttilde_structural;
  if (r.triply_transitive_structural) st["triply_transitive"] = *r.triply_transitive_structural;
  j["structural"] = st;
  json br = json::object();
  br["triply_regular"] = r.triply_regular_brute;
  if (r.t_equals_ttilde_brute) br["t_equals_t_tilde"] = *r.t_equals_ttilde_brute;
  if (r.triply_transitive_brute) br["triply_transitive"] = *r.triply_transitive_brute;
  j["brute"] = br;
  j["consistent"] = r.consistent;
  if (r.wedderburn) j["wedderburn"] = to_json(*r.wedderburn);
  if (r.regular_subgroup_found) j["regular_subgroup_found"] = *r.regular_subgroup_found;
  return j;
}

inline ClassificationReport report_from_json(const json& j) {
  ClassificationReport r;
  r.name = j.at("name").get<std::string>();
  r.n = j.at("n").get<int>();
  r.rank = j.at("rank").get<int>();
  std::string thin = j.at("thinness").get<std::string>();
  r.thin = thin == "thin" ? Thinness::thin : thin == "quasi-thin" ? Thinness::quasi_thin : Thinness::neither;
  r.suborbit_sizes = j.at("suborbit_sizes").get<std::vector<int>>();
  r.base_point = j.at("base_point").get<int>();
  r.dim_t0 = j.at("dims").at("t0").get<std::size_t>();
  r.dim_t1 = j.at("dims").at("t1").get<std::size_t>();
  r.dim_t = j.at("dims").at("t").get<std::size_t>();
  if (j.at("dims").contains("t_tilde")) r.dim_t_tilde = j.at("dims").at("t_tilde").get<std::size_t>();
  if (j.contains("second_base")) {
    BaseDims sb;
    sb.base_point = j.at("second_base").at("base_point").get<int>();
    sb.t0 = j.at("second_base").at("t0").get<std::size_t>();
    sb.t = j.at("second_base").at("t").get<std::size_t>();
    if (j.at("second_base").contains("t_tilde"))
      sb.t_tilde = j.at("second_base").at("t_tilde").get<std::size_t>();
    r.second_base = sb;
  }
  for (const auto& dp : j.at("diamond_pairs")) {
    DiamondPair p{dp.at("i").get<int>(), dp.at("k").get<int>(), dp.at("j").get<int>(), {}};
    auto w = dp.at("witness").get<std::vector<int>>();
    std::copy(w.begin(), w.end(), p.witness.begin());
    r.diamonds.push_back(p);
  }
  r.unordered_diamond_pairs = j.at("unordered_diamond_pairs").get<std::size_t>();
  const json& st = j.at("structural");
  if (st.contains("triply_regular")) r.triply_regular_structural = st.at("triply_regular").get<bool>();
  if (st.contains("t_equals_t_tilde")) r.t_equals_ttilde_structural = st.at("t_equals_t_tilde").get<bool>();
  if (st.contains("triply_transitive")) r.triply_transitive_structural = st.at("triply_transitive").get<bool>();
  const json& br = j.at("brute");
  r.triply_regular_brute = br.at("triply_regular").get<bool>();
  if (br.contains("t_equals_t_tilde")) r.t_equals_ttilde_brute = br.at("t_equals_t_tilde").get<bool>();
  if (br.contains("triply_transitive")) r.triply_transitive_brute = br.at("triply_transitive").get<bool>();
  r.consistent = j.at("consistent").get<bool>();
  if (j.contains("wedderburn")) {
    WedderburnRecord w;
    const json& jw = j.at("wedderburn");
    w.applicable = jw.at("applicable").get<bool>();
    if (w.applicable) {
      w.t = jw.at("t").get<int>();
      w.s = jw.at("s").get<int>();
      w.predicted = jw.at("predicted_dim").get<std::size_t>();
      w.actual = jw.at("actual_dim").get<std::size_t>();
      w.holds = jw.at("holds").get<bool>();
    } else {
      w.reason = jw.value("reason", "");
    }
    r.wedderburn = w;
  }
  if (j.contains("regular_subgroup_found"))
    r.regular_subgroup_found = j.at("regular_subgroup_found").get<bool>();
  return r;
}

/// Text layout mirrors the worked-example style: degree and rank, orbit
/// sizes, the dimension chain, diamond pairs, then the verdicts.
inline std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "=== " << (r.name.empty() ? "scheme" : r.name) << " ===\n";
  os << "degree " << r.n << ", rank " << r.rank << ", " << to_string(r.thin) << "\n";
  os << "suborbit sizes:";
  for (int k : r.suborbit_sizes) os << " " << k;
  os << "\n";
  os << "base point " << r.base_point << "\n";
  os << "dim T0 = " << r.dim_t0 << ", dim T1 = " << r.dim_t1 << ", dim T = " << r.dim_t;
  if (r.dim_t_tilde) os << ", dim T~ = " << *r.dim_t_tilde;
  os << "\n";
  if (r.second_base) {
    os << "cross-check at base point " << r.second_base->base_point << ": dim T0 = " << r.second_base->t0
       << ", dim T = " << r.second_base->t;
    if (r.second_base->t_tilde) os << ", dim T~ = " << *r.second_base->t_tilde;
    os << "\n";
  }
  os << "diamond pairs: " << r.diamonds.size() << " ordered (" << r.unordered_diamond_pairs
     << " unordered)";
  for (const auto& dp : r.diamonds) os << "  (" << dp.i << "," << dp.k << ";j=" << dp.j << ")";
  os << "\n";
  auto verdict = [&](const char* label, std::optional<bool> structural, std::optional<bool> brute) {
    os << label << ": ";
    if (structural)
      os << "structural=" << (*structural ? "yes" : "no");
    else
      os << "structural=n/a";
    os << ", ";
    if (brute)
      os << "brute=" << (*brute ? "yes" : "no");
    else
      os << "brute=n/a";
    os << "\n";
  };
  verdict("triply regular   ", r.triply_regular_structural, r.triply_regular_brute);
  verdict("T = T~           ", r.t_equals_ttilde_structural, r.t_equals_ttilde_brute);
  verdict("triply transitive", r.triply_transitive_structural, r.triply_transitive_brute);
  if (r.wedderburn) {
    if (r.wedderburn->applicable)
      os << "Wedderburn: t = " << r.wedderburn->t << ", s = " << r.wedderburn->s << ", (s+t)^2 + s^2 = "
         << r.wedderburn->predicted << (r.wedderburn->holds ? " = " : " != ") << r.wedderburn->actual
         << " = dim T\n";
    else
      os << "Wedderburn: not applicable (" << r.wedderburn->reason << ")\n";
  }
  if (r.regular_subgroup_found)
    os << "regular subgroup: " << (*r.regular_subgroup_found ? "found" : "none") << "\n";
  os << "consistency: " << (r.consistent ? "ok" : "STRUCTURAL/BRUTE MISMATCH") << "\n";
  return os.str();
}

}  // namespace schemeforge
