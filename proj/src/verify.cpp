#include "rlalg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>

#include "rlalg/dual.hpp"
#include "rlalg/groebner.hpp"
#include "rlalg/numeric.hpp"
#include "rlalg/rootlocus.hpp"

namespace rlalg {

namespace {

// |p(at)| relative to the largest term magnitude, floored at one.
double scaledResidual(const Polynomial& p, const std::map<Var, double>& at) {
    double value = 0.0, scale = 1.0;
    for (const auto& t : p.terms()) {
        double m = toDouble(t.coef);
        for (int i = 0; i < p.vars().size(); ++i) {
            std::uint16_t e = t.mono.e[static_cast<std::size_t>(i)];
            if (e) m *= std::pow(at.at(p.vars().at(i)), static_cast<double>(e));
        }
        value += m;
        scale = std::max(scale, std::abs(m));
    }
    return std::abs(value) / scale;
}

std::string fmtf(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

}  // namespace

std::vector<CheckResult> runVerification(const TransferFunction& tf, const VerifyOptions& opt) {
    if (opt.samples < 2) throw InvalidInputError("verification needs at least two gain samples");
    if (!(opt.tol > 0.0)) throw InvalidInputError("verification tolerance must be positive");

    std::vector<CheckResult> out;
    RootLocusDecomposition d = decomposeRootLocus(tf);

    std::vector<std::vector<Polynomial>> inter;
    inter.reserve(d.components.size());
    for (const auto& c : d.components) inter.push_back(intermediateDescription(c));

    // Smallest over components of the worst generator residual: a root lies
    // on the union when some component accepts it whole.
    auto unionResidual = [&](double x, double y, double gain) {
        std::map<Var, double> at{{Var::x, x}, {Var::y, y}, {Var::l, gain}};
        double best = std::numeric_limits<double>::infinity();
        for (const auto& gens : inter) {
            double worst = 0.0;
            for (const auto& g : gens) worst = std::max(worst, scaledResidual(g, at));
            best = std::min(best, worst);
        }
        return best;
    };

    {
        std::vector<double> gains;
        gains.reserve(static_cast<std::size_t>(opt.samples) + 2);
        for (int j = 0; j < opt.samples; ++j)
            gains.push_back(-10.0 + 20.0 * j / (opt.samples - 1));
        gains.push_back(-1000.0);
        gains.push_back(1000.0);
        auto paths = sampleRootLocus(tf, gains);
        int checked = 0;
        double worst = -1.0;
        std::string worstAt = "no roots";
        for (std::size_t i = 0; i < gains.size(); ++i)
            for (const auto& z : paths[i]) {
                double r = unionResidual(z.real(), z.imag(), gains[i]);
                ++checked;
                if (r > worst) {
                    worst = r;
                    worstAt = fmtf("root (%.6g, %.6g) at gain %.6g", z.real(), z.imag(), gains[i]);
                }
            }
        bool ok = checked == 0 || worst <= opt.tol;
        out.push_back({"oracle-agreement", ok, false,
                       fmtf("%d closed-loop roots against %d components, worst residual %.3g "
                            "(%s), tolerance %.3g",
                            checked, static_cast<int>(d.components.size()),
                            std::max(worst, 0.0), worstAt.c_str(), opt.tol)});
    }

    {
        auto paths = sampleRootLocus(tf, {0.0});
        double worst = 0.0;
        for (const auto& z : paths[0])
            worst = std::max(worst, unionResidual(z.real(), z.imag(), 0.0));
        const double poleTol = 1e-10;
        out.push_back({"pole-agreement", worst <= poleTol, false,
                       fmtf("%d open-loop poles at gain zero, worst residual %.3g, tolerance "
                            "%.3g",
                            static_cast<int>(paths[0].size()), worst, poleTol)});
    }

    std::vector<std::optional<DualComponent>> duals;
    for (const auto& c : d.components) {
        try {
            duals.emplace_back(dualizeComponent(c));
        } catch (const Error&) {
            duals.emplace_back(std::nullopt);
        }
    }

    {
        bool all = true;
        std::string detail;
        for (std::size_t i = 0; i < duals.size(); ++i) {
            if (i) detail += "; ";
            int id = static_cast<int>(i);
            if (!duals[i]) {
                all = false;
                detail += fmtf("component %d: dualization failed", id);
                continue;
            }
            const DualComponent& dc = *duals[i];
            bool ok = false;
            const char* how = "";
            try {
                if (dc.pointDual && dc.pointIdeal && d.components[i].curvePoly) {
                    // a line's dual is a point; the point dualizes back to the line
                    ok = idealEqual(pointDualLine(*dc.pointIdeal),
                                    Ideal(rings::proj(), {*d.components[i].curvePoly}),
                                    MonomialOrder::grevlex());
                    how = "line recovered from the dual point";
                } else if (dc.dualCurve &&
                           dc.dualCurve->degreeIn({Var::u, Var::v, Var::w}) <= 3) {
                    ok = idealEqual(bidual(dc), d.components[i].ideal,
                                    MonomialOrder::grevlex());
                    how = "full ideal recovered by elimination";
                } else if (dc.dualCurve && d.components[i].curvePoly) {
                    // elimination is out of reach at this degree; certify the
                    // curve-level return of the gradient map instead
                    ok = gaussReturnCertified(*dc.dualCurve, *d.components[i].curvePoly);
                    how = "curve recovered (gradient-map certificate)";
                } else {
                    how = "no dual curve to check";
                }
            } catch (const Error&) {
            }
            all = all && ok;
            detail += fmtf("component %d: %s", id, ok ? how : "not recovered");
        }
        out.push_back({"bidual-identity", all, false, detail});
    }

    {
        bool anyFail = false, anyRan = false;
        std::string detail;
        for (std::size_t i = 0; i < duals.size(); ++i) {
            if (i) detail += "; ";
            int id = static_cast<int>(i);
            if (!duals[i] || !d.components[i].curvePoly) {
                detail += fmtf("component %d: skipped (no dual curve)", id);
                continue;
            }
            if (duals[i]->pointDual) {
                detail += fmtf("component %d: skipped (line component, point dual)", id);
                continue;
            }
            const Polynomial& f = *d.components[i].curvePoly;
            if (!smoothnessCertified(f)) {
                detail += fmtf("component %d: skipped (smoothness not certified)", id);
                continue;
            }
            anyRan = true;
            int deg = f.totalDegree();
            int expect = deg * (deg - 1);
            int got = duals[i]->dualCurve
                          ? duals[i]->dualCurve->degreeIn({Var::u, Var::v, Var::w})
                          : -1;
            bool ok = got == expect;
            anyFail = anyFail || !ok;
            detail += fmtf("component %d: degree %d dual has degree %d (expected %d)", id, deg,
                           got, expect);
        }
        out.push_back({"degree-law", !anyFail, !anyRan, detail});
    }

    return out;
}

}  // namespace rlalg
