#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rlalg/dual.hpp"
#include "rlalg/numeric.hpp"

namespace rlalg {

using Json = nlohmann::ordered_json;

// Full JSON document for a decomposition, with the dual section when duals
// and adrl are given (pass nullptr for a plain decompose report). Exact
// rationals are serialized as "a/b" strings; timings land under the
// "volatile" key, which consumers strip before comparing documents.
Json buildReport(const RootLocusDecomposition& d, const std::vector<DualComponent>* duals,
                 const ADRL* adrl, const std::map<std::string, double>& timingsMs);

struct PlotSet {
    int id;
    std::string label;  // affine equation of the traced curve
    std::vector<std::vector<std::pair<double, double>>> polylines;
};

// Affine (z = 1) curve pieces of each component, traced over the box.
std::vector<PlotSet> tracePrimal(const RootLocusDecomposition& d, const BBox& box, int resolution);
// Affine (w = 1) dual pieces; gain-dependent pieces are skipped.
std::vector<PlotSet> traceDual(const ADRL& adrl, const BBox& box, int resolution);

// Fixed-size SVG, mathematical orientation (y up), one styled group per
// component plus axes and a legend.
std::string renderSVG(const std::vector<PlotSet>& sets, const BBox& box);
// Rows component_id,x,y; polylines of one component appear back to back.
std::string renderCSV(const std::vector<PlotSet>& sets);

}  // namespace rlalg
