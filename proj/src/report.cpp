#include "cm/report.hpp"

#include <iomanip>
#include <sstream>

namespace cm {

Json to_json(const IndexSet &s) { return Json(s.values()); }

Json to_json(const MeasureReport &r, bool timing) {
  Json j = Json::object();
  if (r.i_mi) j["i_mi"] = *r.i_mi;
  if (r.i_m) j["i_m"] = *r.i_m;
  if (r.i_m_prime) j["i_m_prime"] = *r.i_m_prime;
  if (r.delta_hs) j["delta_hs"] = *r.delta_hs;
  if (r.i_d) j["i_d"] = *r.i_d;
  j["mode"] = r.mode == Mode::Exact ? "exact" : "lower_bound";
  j["components"] = r.components;
  if (timing) j["time_ms"] = r.time_ms;
  return j;
}

MeasureReport measure_report_from_json(const Json &j) {
  MeasureReport r;
  if (j.contains("i_mi")) r.i_mi = j["i_mi"].get<std::size_t>();
  if (j.contains("i_m")) r.i_m = j["i_m"].get<long>();
  if (j.contains("i_m_prime")) r.i_m_prime = j["i_m_prime"].get<std::size_t>();
  if (j.contains("delta_hs")) r.delta_hs = j["delta_hs"].get<std::size_t>();
  if (j.contains("i_d")) r.i_d = j["i_d"].get<std::size_t>();
  r.mode = j.at("mode").get<std::string>() == "exact" ? Mode::Exact : Mode::LowerBound;
  r.components = j.at("components").get<std::vector<std::size_t>>();
  if (j.contains("time_ms")) r.time_ms = j["time_ms"].get<double>();
  return r;
}

namespace {

Json one_based(const std::vector<std::size_t> &ids) {
  Json a = Json::array();
  for (auto id : ids) a.push_back(id + 1);
  return a;
}

} // namespace

Json to_json(const Decomposition &dec) {
  Json comps = Json::array();
  for (const auto &c : dec.components)
    comps.push_back({{"formulas", to_json(c.formulas)}, {"muses", one_based(c.mus_ids)}});
  return {{"components", comps}, {"free", to_json(dec.free)}};
}

Json to_json(const PartialMusDecomposition &dec) {
  Json groups = Json::array();
  for (std::size_t g = 0; g < dec.groups.size(); ++g)
    groups.push_back({{"formulas", to_json(dec.groups[g])}, {"muses", one_based(dec.mus_ids_per_group[g])}});
  return groups;
}

Json to_json(const RepairReport &r) {
  Json removed = Json::array(), repaired = Json::array();
  for (const auto &s : r.removed) removed.push_back(to_json(s));
  for (const auto &s : r.repaired) repaired.push_back(to_json(s));
  return {{"removed", removed},
          {"repaired", repaired},
          {"each_repair_consistent", r.each_repair_consistent},
          {"repaired_groups_consistent", r.repaired_groups_consistent},
          {"residue", to_json(r.residue)},
          {"with_residue_consistent", r.with_residue_consistent}};
}

Json to_json(const PostulateReport &r) {
  Json out = {{"measure", measure_name(r.measure)}};
  Json list = Json::array();
  for (const auto &p : r.results) {
    Json item = {{"postulate", p.name}, {"checks", p.checks}, {"violations", p.violations}};
    if (p.holds())
      item["result"] = "no counterexample found";
    else
      item["witnesses"] = p.witnesses;
    list.push_back(item);
  }
  out["postulates"] = list;
  return out;
}

std::string plain_table(const MeasureReport &r, bool timing) {
  std::ostringstream out;
  auto row = [&](const std::string &name, const std::string &value) {
    out << std::left << std::setw(12) << name << value << "\n";
  };
  if (r.i_mi) row("i_mi", std::to_string(*r.i_mi));
  if (r.i_m) row("i_m", std::to_string(*r.i_m));
  if (r.i_m_prime) row("i_m_prime", std::to_string(*r.i_m_prime));
  if (r.delta_hs) row("delta_hs", std::to_string(*r.delta_hs));
  if (r.i_d) row("i_d", std::to_string(*r.i_d));
  row("mode", r.mode == Mode::Exact ? "exact" : "lower_bound");
  std::string comps;
  for (std::size_t i = 0; i < r.components.size(); ++i) comps += (i ? "," : "") + std::to_string(r.components[i]);
  row("components", comps.empty() ? "-" : comps);
  if (timing) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.time_ms;
    row("time_ms", t.str());
  }
  return out.str();
}

} // namespace cm
