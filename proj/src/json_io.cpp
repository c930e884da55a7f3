#include "commprob/json_io.hpp"

#include <ostream>

namespace commprob {

Json to_json(const CpReport& r) {
  return Json{{"group", r.group}, {"order", r.order}, {"pairs", r.pairs}, {"classes", r.classes}, {"cp", r.cp.str()}};
}

Json to_json(const ClassDecomposition& cd) {
  return Json{{"class_sizes", cd.class_sizes()}, {"class_number", cd.class_number()}};
}

Json to_json(const BoundReport& r) {
  Json j{{"theorem", std::string(bound_name(r.id))},
         {"applicable", r.applicable},
         {"lhs", r.lhs.str()},
         {"rhs", r.rhs.str()},
         {"holds", r.holds},
         {"equality", r.equality}};
  j["equality_condition"] = r.equality_condition ? Json(*r.equality_condition) : Json(nullptr);
  j["subject"] = r.subject;
  j["slack"] = r.slack.str();
  j["external_claim"] = r.external_claim;
  return j;
}

Json to_json(const McEstimate& m) {
  return Json{{"samples", m.samples},      {"hits", m.hits},       {"estimate", m.estimate.str()},
              {"ci_low", m.ci_low.str()},  {"ci_high", m.ci_high.str()}, {"seed", m.seed}};
}

Json to_json(const SpectrumReport& s) {
  Json values = Json::array();
  for (const auto& v : s.values) {
    Json item{{"cp", v.cp.str()}, {"cp_num", v.cp.num().str()}, {"cp_den", v.cp.den().str()}, {"witnesses", v.witnesses}};
    item["dyadic_s"] = v.dyadic_s ? Json(*v.dyadic_s) : Json(nullptr);
    values.push_back(std::move(item));
  }
  Json j{{"values", std::move(values)}};
  j["max_nonabelian"] = s.max_nonabelian ? Json(s.max_nonabelian->str()) : Json(nullptr);
  j["max_nonabelian_witnesses"] = s.max_nonabelian_witnesses;
  return j;
}

Json to_json(const CatalogEntry& e) {
  return Json{{"name", e.name},          {"order", e.order},       {"cp_num", e.cp.num().str()},
              {"cp_den", e.cp.den().str()}, {"classes", e.classes}, {"abelian", e.abelian},
              {"simple", e.simple},      {"solvable", e.solvable}};
}

Json to_json(const PartitionTable& t) {
  Json rows = Json::array();
  for (std::size_t n = 0; n <= t.max_n; ++n) {
    rows.push_back(Json{{"n", n}, {"p", t.p[n].str()}, {"q", t.q[n].str()}, {"r", t.r[n].str()}, {"s", t.s[n].str()}});
  }
  return rows;
}

void write_partition_csv(const PartitionTable& t, std::ostream& out) {
  out << "n,p,q,r,s\n";
  for (std::size_t n = 0; n <= t.max_n; ++n) {
    out << n << ',' << t.p[n] << ',' << t.q[n] << ',' << t.r[n] << ',' << t.s[n] << '\n';
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace commprob
