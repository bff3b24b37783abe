#include "penta/reports.hpp"

#include "penta/graph_io.hpp"

namespace penta {

using nlohmann::json;

json to_json(const CycleCountReport& r) {
  json edges = json::array();
  for (const auto& ec : r.per_edge_c5) edges.push_back({ec.edge.u, ec.edge.v, ec.count});
  return {
      {"schema_version", kSchemaVersion},
      {"n", r.n},
      {"m", r.m},
      {"c3", r.c3},
      {"c4", r.c4},
      {"c5", r.c5},
      {"per_vertex_c5", r.per_vertex_c5},
      {"per_edge_c5", std::move(edges)},
  };
}

json to_json(const EnumerationCertificate& c) {
  return {{"schema_version", kSchemaVersion}, {"n", c.n}, {"count", c.count}, {"digest", c.digest}};
}

json to_json(const LemmaStats& s) {
  json j = {{"checked", s.checked}, {"violations", s.violations}};
  j["min_slack"] = s.min_slack ? json(*s.min_slack) : json(nullptr);
  j["max_slack"] = s.max_slack ? json(*s.max_slack) : json(nullptr);
  return j;
}

json to_json(const VerificationCertificate& c) {
  json j = {
      {"schema_version", kSchemaVersion},
      {"n", c.n},
      {"corpus_count", c.corpus_count},
      {"corpus_digest", c.corpus_digest},
  };
  if (c.theorem_checked) {
    json extremal = json::array();
    for (const auto& x : c.extremal) extremal.push_back({{"graph6", x.form.graph6}, {"family", x.family}});
    j["max_c5"] = c.max_c5;
    j["g_n"] = c.g_n;
    j["expected_max"] = c.expected_max;
    j["theorem_match"] = c.theorem_match;
    j["extremal"] = std::move(extremal);
    j["extremal_match"] = c.extremal_match;
    j["second_best"] = c.second_best ? json(*c.second_best) : json(nullptr);
    j["strict_gap"] = c.strict_gap;
  }
  if (c.lemmas_checked) {
    json l3 = to_json(c.lemmas.lemma3);
    l3["no_apex"] = to_json(c.lemmas.lemma3_no_apex);
    j["lemmas"] = {
        {"variants", c.lemma_variants},
        {"lemma1", to_json(c.lemmas.lemma1)},
        {"lemma2", to_json(c.lemmas.lemma2)},
        {"lemma3", std::move(l3)},
    };
  }
  return j;
}

json to_json(const MonotonicityResult& m) {
  json j = {{"schema_version", kSchemaVersion},
            {"samples", m.samples},
            {"additions_checked", m.additions_checked},
            {"pass", m.pass}};
  if (!m.pass) j["counterexample"] = m.counterexample;
  return j;
}

json golden_catalog_json() {
  json out = json::array();
  for (const auto& entry : golden_catalog()) {
    out.push_back({
        {"family", family_name(entry.spec)},
        {"n", entry.spec.n},
        {"graph6", to_graph6(expand(entry.spec))},
        {"canonical", std::string(entry.canonical_graph6)},
        {"expected_c5", entry.expected_c5},
    });
  }
  return out;
}

}  // namespace penta
