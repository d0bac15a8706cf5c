#include "rlalg/report.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>

#include "rlalg/univariate.hpp"

namespace rlalg {

namespace {

Json pointJson(const LocusPoint& p) {
    Json j = Json::object();
    j["exact"] = p.exact;
    if (p.exact)
        j["coords"] = Json::array(
            {toString(p.coords[0]), toString(p.coords[1]), toString(p.coords[2])});
    j["approx"] = Json::array({p.approx[0], p.approx[1], p.approx[2]});
    j["multiplicity"] = p.multiplicity;
    return j;
}

Json sliceJson(const SlicePoints& s) {
    Json j = Json::object();
    j["finite"] = s.finite;
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(pointJson(p));
    j["points"] = std::move(pts);
    return j;
}

Json mergedJson(const std::vector<MergedPoint>& pts) {
    Json arr = Json::array();
    for (const auto& m : pts) {
        Json j = pointJson(m.point);
        j["occurrences"] = m.occurrences;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json polyStrings(const std::vector<Polynomial>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(formatPolynomial(p));
    return arr;
}

Json coeffStrings(const Polynomial& p) {
    std::vector<Rat> asc = univariateCoeffs(p, Var::s);
    Json arr = Json::array();
    for (auto it = asc.rbegin(); it != asc.rend(); ++it) arr.push_back(toString(*it));
    return arr;
}

int curveDegree(const RLComponent& c) {
    if (c.curvePoly) return c.curvePoly->totalDegree();
    int d = 0;
    for (const auto& g : c.ideal.generators())
        d = std::max(d, g.degreeIn({Var::x, Var::y, Var::z}));
    return d;
}

// z = 1 slice of the gain-free curve generator, over (x, y).
std::optional<Polynomial> affineCurve(const RLComponent& c) {
    if (!c.curvePoly) return std::nullopt;
    Polynomial a = c.curvePoly->dehomogenize(Var::z).restrictTo(VarSet{Var::x, Var::y});
    if (a.isConstant()) return std::nullopt;
    return a;
}

}  // namespace

Json buildReport(const RootLocusDecomposition& d, const std::vector<DualComponent>* duals,
                 const ADRL* adrl, const std::map<std::string, double>& timingsMs) {
    Json doc = Json::object();
    doc["tool"] = "rl-alg";

    Json tf = Json::object();
    tf["num"] = formatPolynomial(d.tf.num);
    tf["den"] = formatPolynomial(d.tf.den);
    tf["num_coeffs"] = coeffStrings(d.tf.num);
    tf["den_coeffs"] = coeffStrings(d.tf.den);
    doc["transfer_function"] = std::move(tf);

    doc["pencil"] = formatPolynomial(d.pencil);
    Json split = Json::object();
    split["re"] = formatPolynomial(d.split.re);
    split["im"] = formatPolynomial(d.split.im);
    doc["split"] = std::move(split);
    doc["closure"] = polyStrings(d.closure.generators());

    Json comps = Json::array();
    std::vector<SlicePoints> initials, terminals;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const RLComponent& c = d.components[i];
        Json j = Json::object();
        j["id"] = static_cast<int>(i);
        j["generators"] = polyStrings(c.ideal.generators());
        if (c.curvePoly) j["curve"] = formatPolynomial(*c.curvePoly);
        if (c.paramPoly) j["param"] = formatPolynomial(*c.paramPoly);
        j["curve_degree"] = curveDegree(c);
        j["prime_certified"] = c.primeCertified;
        if (auto a = affineCurve(c)) j["affine_curve"] = formatPolynomial(*a);
        j["intermediate"] = polyStrings(intermediateDescription(c));
        j["initial"] = sliceJson(c.initial);
        j["terminal"] = sliceJson(c.terminal);
        comps.push_back(std::move(j));
        initials.push_back(c.initial);
        terminals.push_back(c.terminal);
    }
    doc["components"] = std::move(comps);
    doc["initial_points"] = mergedJson(mergeSlicePoints(initials));
    doc["terminal_points"] = mergedJson(mergeSlicePoints(terminals));

    if (duals && adrl) {
        Json dual = Json::object();
        Json dcs = Json::array();
        for (std::size_t i = 0; i < duals->size(); ++i) {
            const DualComponent& dc = (*duals)[i];
            Json j = Json::object();
            j["id"] = static_cast<int>(i);
            j["generators"] = polyStrings(dc.dualIdeal.generators());
            if (dc.dualCurve) j["curve"] = formatPolynomial(*dc.dualCurve);
            if (dc.dualParam) j["param"] = formatPolynomial(*dc.dualParam);
            j["point_dual"] = dc.pointDual;
            if (dc.pointIdeal) j["point_ideal"] = polyStrings(dc.pointIdeal->generators());
            j["intermediate"] = polyStrings(dc.intermediate);
            j["initial"] = sliceJson(dc.initial);
            j["terminal"] = sliceJson(dc.terminal);
            dcs.push_back(std::move(j));
        }
        dual["components"] = std::move(dcs);
        dual["initial_points"] = mergedJson(adrl->initial);
        dual["terminal_points"] = mergedJson(adrl->terminal);
        dual["affine_pieces"] = polyStrings(adrl->affinePieces);
        doc["dual"] = std::move(dual);
    }

    Json rings = Json::object();
    rings["order"] = "grevlex";
    rings["plane"] = rings::proj().str();
    rings["dual_plane"] = rings::dual().str();
    rings["intermediate"] = VarSet{Var::x, Var::y, Var::l}.str();
    doc["rings"] = std::move(rings);

    Json vol = Json::object();
    Json times = Json::object();
    for (const auto& [name, ms] : timingsMs) times[name] = ms;
    vol["timings_ms"] = std::move(times);
    doc["volatile"] = std::move(vol);
    return doc;
}

std::vector<PlotSet> tracePrimal(const RootLocusDecomposition& d, const BBox& box,
                                 int resolution) {
    std::vector<PlotSet> out;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        auto a = affineCurve(d.components[i]);
        if (!a) continue;
        PlotSet set;
        set.id = static_cast<int>(i);
        set.label = formatPolynomial(*a);
        set.polylines = traceCurve(*a, box, resolution);
        out.push_back(std::move(set));
    }
    return out;
}

std::vector<PlotSet> traceDual(const ADRL& adrl, const BBox& box, int resolution) {
    std::vector<PlotSet> out;
    for (std::size_t i = 0; i < adrl.affinePieces.size(); ++i) {
        const Polynomial& piece = adrl.affinePieces[i];
        if (piece.mentions(Var::kd) || piece.mentions(Var::kn)) continue;
        Polynomial uv = piece.restrictTo(VarSet{Var::u, Var::v});
        if (uv.isConstant()) continue;
        Polynomial xy = uv.embedInto(rings::incidence())
                            .rename(Var::u, Var::x)
                            .rename(Var::v, Var::y)
                            .restrictTo(VarSet{Var::x, Var::y});
        PlotSet set;
        set.id = static_cast<int>(i);
        set.label = formatPolynomial(uv);
        set.polylines = traceCurve(xy, box, resolution);
        out.push_back(std::move(set));
    }
    return out;
}

namespace {

const char* kPalette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085"};
constexpr int kPaletteSize = 6;
constexpr int kCanvas = 720;
constexpr int kMargin = 48;

void appendf(std::string& s, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    s += buf;
}

}  // namespace

std::string renderSVG(const std::vector<PlotSet>& sets, const BBox& box) {
    const double span = kCanvas - 2.0 * kMargin;
    auto px = [&](double x) { return kMargin + (x - box.x0) / (box.x1 - box.x0) * span; };
    auto py = [&](double y) { return kCanvas - kMargin - (y - box.y0) / (box.y1 - box.y0) * span; };

    std::string s;
    appendf(s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
            "viewBox=\"0 0 %d %d\">\n",
            kCanvas, kCanvas, kCanvas, kCanvas);
    appendf(s, "<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"white\"/>\n", kCanvas,
            kCanvas);
    appendf(s, "<rect x=\"%d\" y=\"%d\" width=\"%.0f\" height=\"%.0f\" fill=\"none\" "
               "stroke=\"#444\" stroke-width=\"1\"/>\n",
            kMargin, kMargin, span, span);

    if (box.x0 < 0.0 && 0.0 < box.x1)
        appendf(s, "<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%.0f\" stroke=\"#bbb\" "
                   "stroke-width=\"1\"/>\n",
                px(0.0), kMargin, px(0.0), kCanvas - 1.0 * kMargin);
    if (box.y0 < 0.0 && 0.0 < box.y1)
        appendf(s, "<line x1=\"%d\" y1=\"%.2f\" x2=\"%.0f\" y2=\"%.2f\" stroke=\"#bbb\" "
                   "stroke-width=\"1\"/>\n",
                kMargin, py(0.0), kCanvas - 1.0 * kMargin, py(0.0));

    // corner labels of the window
    appendf(s, "<text x=\"%d\" y=\"%d\" font-size=\"12\" fill=\"#444\">%.4g</text>\n", kMargin,
            kCanvas - kMargin + 16, box.x0);
    appendf(s, "<text x=\"%.0f\" y=\"%d\" font-size=\"12\" fill=\"#444\" "
               "text-anchor=\"end\">%.4g</text>\n",
            kCanvas - 1.0 * kMargin, kCanvas - kMargin + 16, box.x1);
    appendf(s, "<text x=\"%d\" y=\"%.0f\" font-size=\"12\" fill=\"#444\" "
               "text-anchor=\"end\">%.4g</text>\n",
            kMargin - 4, kCanvas - 1.0 * kMargin, box.y0);
    appendf(s, "<text x=\"%d\" y=\"%d\" font-size=\"12\" fill=\"#444\" "
               "text-anchor=\"end\">%.4g</text>\n",
            kMargin - 4, kMargin + 8, box.y1);

    for (std::size_t k = 0; k < sets.size(); ++k) {
        const PlotSet& set = sets[k];
        const char* color = kPalette[k % kPaletteSize];
        appendf(s, "<g id=\"component-%d\" fill=\"none\" stroke=\"%s\" stroke-width=\"1.6\">\n",
                set.id, color);
        for (const auto& line : set.polylines) {
            s += "<polyline points=\"";
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i) s += ' ';
                appendf(s, "%.2f,%.2f", px(line[i].first), py(line[i].second));
            }
            s += "\"/>\n";
        }
        s += "</g>\n";
    }

    for (std::size_t k = 0; k < sets.size(); ++k) {
        const char* color = kPalette[k % kPaletteSize];
        double ly = kMargin + 18.0 + 18.0 * static_cast<double>(k);
        appendf(s, "<line x1=\"%d\" y1=\"%.1f\" x2=\"%d\" y2=\"%.1f\" stroke=\"%s\" "
                   "stroke-width=\"3\"/>\n",
                kMargin + 8, ly - 4.0, kMargin + 32, ly - 4.0, color);
        appendf(s, "<text x=\"%d\" y=\"%.1f\" font-size=\"13\" fill=\"#222\">%s = 0</text>\n",
                kMargin + 38, ly, sets[k].label.c_str());
    }

    s += "</svg>\n";
    return s;
}

std::string renderCSV(const std::vector<PlotSet>& sets) {
    std::string s = "component_id,x,y\n";
    for (const auto& set : sets)
        for (const auto& line : set.polylines)
            for (const auto& [x, y] : line) appendf(s, "%d,%.12g,%.12g\n", set.id, x, y);
    return s;
}

}  // namespace rlalg
