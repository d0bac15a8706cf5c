#include "rlalg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "rlalg/univariate.hpp"

namespace rlalg {

namespace {

using Cplx = std::complex<double>;

Cplx horner(const std::vector<double>& c, Cplx z) {
    Cplx acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Cplx hornerDeriv(const std::vector<double>& c, Cplx z) {
    Cplx acc = 0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
}

void checkResiduals(const std::vector<double>& c, const std::vector<Cplx>& roots) {
    for (Cplx z : roots) {
        double scale = 1.0;
        double az = std::abs(z);
        double zk = 1.0;
        for (double ck : c) {
            scale = std::max(scale, std::abs(ck) * zk);
            zk *= az;
        }
        if (std::abs(horner(c, z)) > 1e-10 * scale)
            throw ComputationError("root finder residual above tolerance");
    }
}

bool rootLess(const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

std::vector<Cplx> univariateRoots(const std::vector<double>& coeffsIn) {
    std::vector<double> c = coeffsIn;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.empty()) throw InvalidInputError("roots of the zero polynomial");

    std::vector<Cplx> roots;
    std::size_t zeros = 0;
    while (zeros + 1 < c.size() && c[zeros] == 0.0) ++zeros;
    roots.assign(zeros, Cplx(0.0, 0.0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));

    std::size_t n = c.size() - 1;
    if (n == 0) {
        std::sort(roots.begin(), roots.end(), rootLess);
        return roots;
    }

    double lead = c.back();
    for (double& v : c) v /= lead;

    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
    radius += 1.0;

    std::vector<Cplx> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.7;
        z[j] = radius * Cplx(std::cos(angle), std::sin(angle));
    }

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            Cplx p = horner(c, z[j]);
            Cplx dp = hornerDeriv(c, z[j]);
            if (p == Cplx(0.0, 0.0)) continue;
            if (dp == Cplx(0.0, 0.0)) {
                z[j] *= 1.0 + 1e-8;
                worst = 1.0;
                continue;
            }
            Cplx w = p / dp;
            Cplx s = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) s += 1.0 / (z[j] - z[k]);
            Cplx denom = 1.0 - w * s;
            Cplx step = denom == Cplx(0.0, 0.0) ? w : w / denom;
            z[j] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[j])));
        }
        if (worst < 1e-14) break;
    }

    for (std::size_t j = 0; j < n; ++j)
        for (int it = 0; it < 3; ++it) {
            Cplx dp = hornerDeriv(c, z[j]);
            if (dp == Cplx(0.0, 0.0)) break;
            Cplx p = horner(c, z[j]);
            Cplx step = p / dp;
            if (std::abs(step) > 1e-2 * (1.0 + std::abs(z[j]))) break;  // multiple root, keep Aberth value
            Cplx cand = z[j] - step;
            // near multiple roots p/dp is noise; only keep steps that help
            if (std::abs(horner(c, cand)) > std::abs(p)) break;
            z[j] = cand;
        }

    // real coefficients: flatten near-real roots, mirror conjugate pairs
    std::vector<bool> done(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        if (std::abs(z[j].imag()) <= 1e-12 * (1.0 + std::abs(z[j].real()))) {
            z[j].imag(0.0);
            done[j] = true;
            continue;
        }
        std::size_t mate = n;
        double best = 1e-6 * (1.0 + std::abs(z[j]));
        for (std::size_t k = j + 1; k < n; ++k) {
            if (done[k]) continue;
            double d = std::abs(z[k] - std::conj(z[j]));
            if (d < best) {
                best = d;
                mate = k;
            }
        }
        if (mate < n) {
            Cplx avg = (z[j] + std::conj(z[mate])) / 2.0;
            z[j] = avg;
            z[mate] = std::conj(avg);
            done[mate] = true;
        }
        done[j] = true;
    }

    // merge near-coincident roots to their mean
    std::sort(z.begin(), z.end(), rootLess);
    std::size_t j = 0;
    while (j < n) {
        std::size_t k = j + 1;
        Cplx sum = z[j];
        while (k < n && std::abs(z[k] - z[j]) <= 1e-7 * (1.0 + std::abs(z[j]))) {
            sum += z[k];
            ++k;
        }
        if (k > j + 1) {
            Cplx mean = sum / static_cast<double>(k - j);
            for (std::size_t m = j; m < k; ++m) z[m] = mean;
        }
        j = k;
    }

    checkResiduals(c, z);
    roots.insert(roots.end(), z.begin(), z.end());
    std::sort(roots.begin(), roots.end(), rootLess);
    return roots;
}

std::vector<Cplx> univariateRoots(const std::vector<Rat>& coeffs) {
    std::vector<double> c;
    c.reserve(coeffs.size());
    for (const Rat& q : coeffs) c.push_back(toDouble(q));
    return univariateRoots(c);
}

std::vector<std::vector<Cplx>> sampleRootLocus(const TransferFunction& tf,
                                               const std::vector<double>& gains) {
    std::vector<double> num, den;
    for (const Rat& q : univariateCoeffs(tf.num, Var::s)) num.push_back(toDouble(q));
    for (const Rat& q : univariateCoeffs(tf.den, Var::s)) den.push_back(toDouble(q));
    std::size_t width = std::max(num.size(), den.size());
    num.resize(width, 0.0);
    den.resize(width, 0.0);

    std::vector<std::vector<Cplx>> out;
    out.reserve(gains.size());
    for (double g : gains) {
        std::vector<double> c(width);
        for (std::size_t k = 0; k < width; ++k) c[k] = den[k] + g * num[k];
        out.push_back(univariateRoots(c));
    }
    return out;
}

double planeResidual(const Polynomial& f, double px, double py) {
    int xi = f.vars().indexOf(Var::x);
    int yi = f.vars().indexOf(Var::y);
    double value = 0.0;
    double scale = 1.0;
    for (const Term& t : f.terms()) {
        double m = toDouble(t.coef);
        if (xi >= 0) m *= std::pow(px, t.mono.e[static_cast<std::size_t>(xi)]);
        if (yi >= 0) m *= std::pow(py, t.mono.e[static_cast<std::size_t>(yi)]);
        value += m;
        scale = std::max(scale, std::abs(m));
    }
    return std::abs(value) / scale;
}

namespace {

struct Tracer {
    const Polynomial& f;
    BBox box;
    int n;
    std::vector<double> val;  // corner samples, (n+1) x (n+1)

    double gx(int i) const { return box.x0 + (box.x1 - box.x0) * i / n; }
    double gy(int j) const { return box.y0 + (box.y1 - box.y0) * j / n; }
    double eval(double px, double py) const {
        return f.evaluateDouble({{Var::x, px}, {Var::y, py}});
    }
    double corner(int i, int j) const { return val[static_cast<std::size_t>(j * (n + 1) + i)]; }
    static bool inside(double v) { return v < 0.0; }  // exact zeros count as outside

    // edge ids: horizontal edge right of corner (i,j) is even, vertical edge
    // above it is odd
    long hEdge(int i, int j) const { return 2L * (static_cast<long>(j) * (n + 1) + i); }
    long vEdge(int i, int j) const { return 2L * (static_cast<long>(j) * (n + 1) + i) + 1; }

    std::pair<double, double> cross(double ax, double ay, double fa, double bx, double by,
                                    double fb) const {
        // bisection on the segment; signs differ by construction
        if (fa == 0.0) return {ax, ay};
        if (fb == 0.0) return {bx, by};
        double lo = 0.0, hi = 1.0;
        bool loIn = inside(fa);
        for (int it = 0; it < 60; ++it) {
            double mid = (lo + hi) / 2.0;
            double fm = eval(ax + (bx - ax) * mid, ay + (by - ay) * mid);
            if (inside(fm) == loIn)
                lo = mid;
            else
                hi = mid;
        }
        double t = (lo + hi) / 2.0;
        return {ax + (bx - ax) * t, ay + (by - ay) * t};
    }
};

}  // namespace

std::vector<std::vector<std::pair<double, double>>> traceCurve(const Polynomial& f, BBox box,
                                                               int resolution) {
    if (resolution < 2) throw InvalidInputError("trace resolution must be at least 2");
    if (!(box.x1 > box.x0) || !(box.y1 > box.y0)) throw InvalidInputError("empty bounding box");

    Tracer tr{f, box, resolution, {}};
    const int n = resolution;
    tr.val.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            tr.val[static_cast<std::size_t>(j * (n + 1) + i)] = tr.eval(tr.gx(i), tr.gy(j));

    std::map<long, std::pair<double, double>> edgePoint;
    std::vector<std::pair<long, long>> segs;

    auto edgeCrossing = [&](long id, int i0, int j0, int i1, int j1) {
        if (!edgePoint.count(id))
            edgePoint[id] = tr.cross(tr.gx(i0), tr.gy(j0), tr.corner(i0, j0), tr.gx(i1), tr.gy(j1),
                                     tr.corner(i1, j1));
    };

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            bool bl = Tracer::inside(tr.corner(i, j));
            bool br = Tracer::inside(tr.corner(i + 1, j));
            bool tl = Tracer::inside(tr.corner(i, j + 1));
            bool trc = Tracer::inside(tr.corner(i + 1, j + 1));
            int mask = (bl ? 1 : 0) | (br ? 2 : 0) | (trc ? 4 : 0) | (tl ? 8 : 0);
            if (mask == 0 || mask == 15) continue;

            long B = tr.hEdge(i, j), T = tr.hEdge(i, j + 1);
            long L = tr.vEdge(i, j), R = tr.vEdge(i + 1, j);
            auto addSeg = [&](long a, int ai0, int aj0, int ai1, int aj1, long b, int bi0, int bj0,
                              int bi1, int bj1) {
                edgeCrossing(a, ai0, aj0, ai1, aj1);
                edgeCrossing(b, bi0, bj0, bi1, bj1);
                segs.push_back({a, b});
            };
            auto segLB = [&] { addSeg(L, i, j, i, j + 1, B, i, j, i + 1, j); };
            auto segLT = [&] { addSeg(L, i, j, i, j + 1, T, i, j + 1, i + 1, j + 1); };
            auto segRB = [&] { addSeg(R, i + 1, j, i + 1, j + 1, B, i, j, i + 1, j); };
            auto segRT = [&] { addSeg(R, i + 1, j, i + 1, j + 1, T, i, j + 1, i + 1, j + 1); };
            auto segBT = [&] { addSeg(B, i, j, i + 1, j, T, i, j + 1, i + 1, j + 1); };
            auto segLR = [&] { addSeg(L, i, j, i, j + 1, R, i + 1, j, i + 1, j + 1); };

            switch (mask) {
                case 1: case 14: segLB(); break;
                case 2: case 13: segRB(); break;
                case 4: case 11: segRT(); break;
                case 8: case 7: segLT(); break;
                case 3: case 12: segLR(); break;
                case 6: case 9: segBT(); break;
                case 5: case 10: {
                    double center = tr.eval((tr.gx(i) + tr.gx(i + 1)) / 2.0,
                                            (tr.gy(j) + tr.gy(j + 1)) / 2.0);
                    bool centerIn = Tracer::inside(center);
                    bool joinThroughCenter = centerIn == (mask == 5 ? bl : br);
                    if (mask == 5) {
                        if (joinThroughCenter) { segLT(); segRB(); }
                        else { segLB(); segRT(); }
                    } else {
                        if (joinThroughCenter) { segLB(); segRT(); }
                        else { segLT(); segRB(); }
                    }
                    break;
                }
                default: break;
            }
        }

    // stitch segments into chains: open paths first, then loops
    std::map<long, std::vector<std::size_t>> adj;
    for (std::size_t sidx = 0; sidx < segs.size(); ++sidx) {
        adj[segs[sidx].first].push_back(sidx);
        adj[segs[sidx].second].push_back(sidx);
    }
    std::vector<bool> used(segs.size(), false);
    std::vector<std::vector<std::pair<double, double>>> out;

    auto walk = [&](long startEdge) {
        std::vector<std::pair<double, double>> line{edgePoint.at(startEdge)};
        long cur = startEdge;
        while (true) {
            std::size_t next = segs.size();
            for (std::size_t sidx : adj[cur])
                if (!used[sidx]) next = sidx;
            if (next == segs.size()) break;
            used[next] = true;
            cur = segs[next].first == cur ? segs[next].second : segs[next].first;
            line.push_back(edgePoint.at(cur));
        }
        out.push_back(std::move(line));
    };

    for (const auto& [edge, list] : adj)
        if (list.size() == 1 && !used[list.front()]) walk(edge);
    for (const auto& [edge, list] : adj)
        for (std::size_t sidx : list)
            if (!used[sidx]) walk(edge);

    return out;
}

}  // namespace rlalg
