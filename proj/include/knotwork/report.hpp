#pragma once

#include <optional>
#include <string>

#include "knotwork/catalog.hpp"
#include "knotwork/framing.hpp"
#include "knotwork/io.hpp"
#include "knotwork/seifert.hpp"
#include "knotwork/skein.hpp"

namespace knotwork {

inline json fibrability_json(const FibrabilityReport& r) {
  return json{{"homogeneous", r.homogeneous},
              {"strands_leq_3", r.strands_leq_3},
              {"monic_alexander", r.monic_alexander},
              {"alexander", to_string(normalize_units(r.alexander))},
              {"verdict", to_string(r.verdict)}};
}

inline json seifert_json(const SeifertSurfaceData& data) {
  json j{{"seifert_circles", data.circles},
         {"crossings", data.crossings},
         {"boundary_components", data.boundary_components},
         {"euler_characteristic", data.euler},
         {"genus", data.genus}};
  if (data.matrix) {
    json rows = json::array();
    for (std::size_t i = 0; i < data.matrix->rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < data.matrix->cols(); ++k)
        row.push_back((*data.matrix)(i, k));
      rows.push_back(std::move(row));
    }
    j["seifert_matrix"] = std::move(rows);
  }
  return j;
}

inline json framing_json(const FramedBand& band, FramingConvention convention) {
  json j{{"writhe", band.writhe},
         {"twist", band.twist},
         {"self_linking", band.self_linking},
         {"convention", convention == FramingConvention::vertical
                            ? "vertical"
                            : "explicit"}};
  if (band.preferred_n)
    j["preferred_n"] = *band.preferred_n;
  else
    j["preferred_n"] = nullptr;
  return j;
}

// Full invariant bundle for a diagram; Seifert-surface and fibrability
// blocks are included when the input came from a braid word.
inline json invariant_bundle(const LinkDiagram& d,
                             const std::optional<BraidWord>& braid) {
  json j;
  if (braid) j["braid"] = braid->str();
  j["components"] = d.component_count();
  j["crossings"] = d.crossing_count();
  j["writhe"] = d.writhe();

  Laurent1 conway = skein_conway(d);
  j["conway"] = to_string(conway, "w");
  Laurent1 alexander = braid && braid->strands >= 2
                           ? alexander_from_burau(*braid)
                           : conway_to_alexander(conway);
  j["alexander"] = alexander.is_zero()
                       ? "0"
                       : to_string(normalize_units(alexander));
  j["jones"] = to_string(skein_jones(d));
  j["homfly"] = to_string(skein_homfly(d));
  j["chirality"] = detect_chirality(d) == ChiralityVerdict::chiral_evidence
                       ? "chiral_evidence"
                       : "inconclusive";
  if (!alexander.is_zero())
    j["alexander_genus_lower_bound"] = genus_lower_bound(alexander).str();

  if (braid) {
    j["homogeneous"] = is_homogeneous(*braid);
    j["seifert"] = seifert_json(seifert_data_from_braid(*braid));
    if (d.component_count() == 1)
      j["fibrability"] = fibrability_json(fibrability_report(*braid));
  } else {
    SeifertSurfaceData data;
    data.circles = seifert_circles(d);
    data.crossings = d.crossing_count();
    data.boundary_components = d.component_count();
    auto [chi, g] = euler_genus(data.circles, data.crossings,
                                data.boundary_components);
    data.euler = chi;
    data.genus = g;
    j["seifert"] = seifert_json(data);
  }
  return j;
}

inline std::string verification_table(const std::vector<VerificationRow>& rows,
                                      int* failures = nullptr) {
  int failed = 0;
  std::string out;
  for (const auto& r : rows) {
    if (!r.pass) ++failed;
    out += r.pass ? "PASS " : "FAIL ";
    out += r.entry + " :: " + r.invariant + " = " + r.computed;
    if (!r.pass) out += "  (expected " + r.expected + ")";
    out += "\n";
  }
  out += std::to_string(rows.size() - failed) + "/" +
         std::to_string(rows.size()) + " checks passed\n";
  if (failures) *failures = failed;
  return out;
}

}  // namespace knotwork
