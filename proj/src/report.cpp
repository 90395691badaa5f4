#include "ebc/report.hpp"

namespace ebc::report {

Json elements(const ElementSet& s) {
  Json out = Json::array();
  s.for_each([&](ElementId x) { out.push_back(x); });
  return out;
}

namespace {

Json maximal(const MaximalIdeal& m) {
  Json j;
  j["index"] = m.index;
  j["primitive_idempotent"] = m.primitive_idempotent;
  j["elements"] = elements(m.ideal.elements());
  return j;
}

}  // namespace

Json structure(const StructureReport& r) {
  Json j;
  j["idempotents"] = elements(r.idempotents);
  j["units"] = elements(r.units);
  j["jacobson_radical"] = elements(r.jacobson_radical.elements());
  j["nilradical"] = elements(r.nilradical.elements());
  j["maximal_ideals"] = Json::array();
  for (const auto& m : r.maximal_ideals) j["maximal_ideals"].push_back(maximal(m));
  j["index_two_count"] = r.index_two_count;
  j["index_gt_two_count"] = r.index_gt_two_count;
  j["boolean"] = r.boolean;
  j["semisimple"] = r.semisimple_factors.has_value();
  if (r.semisimple_factors) {
    Json fields = Json::array();
    for (const auto& f : *r.semisimple_factors) {
      fields.push_back(
          Json{{"characteristic", f.characteristic}, {"degree", f.degree}, {"order", f.order()}});
    }
    j["semisimple_factors"] = fields;
  } else {
    j["semisimple_factors"] = nullptr;
  }
  return j;
}

Json eb(const EBResult& r, std::uint32_t depth_budget, bool stats) {
  Json j;
  if (r.exceeds_budget) {
    j["status"] = "exceeds_budget";
    j["lower_bound"] = r.value;
  } else {
    j["status"] = "exact";
    j["value"] = r.value;
  }
  j["extremal_sequence"] = r.extremal_sequence;
  j["ghw_bound"] = r.ghw_bound;
  j["depth_budget"] = depth_budget == 0 ? r.ghw_bound : depth_budget;
  if (stats) {
    j["nodes_explored"] = r.nodes_explored;
    j["memo_hits"] = r.memo_hits;
  }
  return j;
}

Json certificate(const CRTCertificate& c) {
  Json j;
  j["t"] = c.sequence.size();
  j["sequence"] = c.sequence;
  j["verified_free"] = c.verified_free;
  j["lower_bound"] = c.lower_bound;
  j["ideals_used"] = Json::array();
  for (const auto& m : c.ideals_used) j["ideals_used"].push_back(maximal(m));
  j["residues"] = Json::array();
  for (const auto& r : c.residues) {
    j["residues"].push_back(
        Json{{"ideal", r.ideal}, {"index", r.index}, {"representative", r.representative}});
  }
  return j;
}

Json summary(const VerifySummary& s) {
  Json j;
  j["instances"] = s.instances;
  j["passed"] = s.passed();
  j["properties"] = Json::array();
  for (const auto& p : s.properties) {
    Json e;
    e["name"] = p.name;
    e["instances"] = p.instances;
    e["failures"] = p.failures;
    e["passed"] = p.passed();
    if (!p.notes.empty()) e["notes"] = p.notes;
    j["properties"].push_back(e);
  }
  return j;
}

Json header(const std::string& ring, std::size_t order) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["ring"] = ring;
  j["order"] = order;
  return j;
}

Json timings(const std::map<std::string, double>& ms) {
  Json j = Json::object();
  for (const auto& [phase, v] : ms) j[phase] = v;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ebc::report
