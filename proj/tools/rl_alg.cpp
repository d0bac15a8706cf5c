#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rlalg/error.hpp"
#include "rlalg/report.hpp"
#include "rlalg/verify.hpp"

namespace {

using namespace rlalg;

std::vector<Rat> parseCoeffList(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw InvalidInputError("empty entry in coefficient list '" + text + "'");
        out.push_back(parseRat(item.substr(a, b - a + 1)));
    }
    if (out.empty()) throw InvalidInputError("empty coefficient list");
    return out;
}

BBox parseBBox(const std::string& text) {
    double v[4];
    char tail;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &v[0], &v[1], &v[2], &v[3], &tail) != 4)
        throw InvalidInputError("--bbox wants four numbers x0,x1,y0,y1");
    if (!(v[0] < v[1]) || !(v[2] < v[3]))
        throw InvalidInputError("--bbox window is empty (need x0 < x1 and y0 < y1)");
    return BBox{v[0], v[1], v[2], v[3]};
}

double msSince(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void writeOut(const std::string& payload, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) throw InvalidInputError("cannot open output path '" + outPath + "'");
    f << payload;
    f.flush();
    if (!f) throw InvalidInputError("failed while writing '" + outPath + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root locus decomposition into irreducible curve components, dual curves, "
                 "plots and cross checks (exact rational arithmetic)"};
    app.require_subcommand(1);

    std::string numText, denText;
    auto addTf = [&](CLI::App* sub) {
        sub->add_option("--num", numText,
                        "numerator coefficients, highest degree first, comma separated; "
                        "rationals like 3/2 allowed (1,1 means s + 1)")
            ->required();
        sub->add_option("--den", denText,
                        "denominator coefficients, highest degree first, comma separated "
                        "(1,0,0 means s^2)")
            ->required();
    };

    bool decomposeDual = false;
    auto* cmdDecompose = app.add_subcommand(
        "decompose", "decompose the root locus into irreducible components, JSON on stdout");
    addTf(cmdDecompose);
    cmdDecompose->add_flag("--dual", decomposeDual,
                           "also dualize every component (same output as the dual command)");

    auto* cmdDual = app.add_subcommand(
        "dual", "decompose, dualize every component and report the dual root locus, JSON on "
                "stdout");
    addTf(cmdDual);

    std::string format = "svg", bboxText = "-5,5,-5,5", outPath;
    int resolution = 128;
    bool plotDual = false;
    auto* cmdPlot =
        app.add_subcommand("plot", "trace the locus (or its dual) and emit svg or csv");
    addTf(cmdPlot);
    cmdPlot->add_option("--format", format, "svg or csv (default svg)")
        ->check(CLI::IsMember({"svg", "csv"}));
    cmdPlot->add_option("--bbox", bboxText, "plot window x0,x1,y0,y1 (default -5,5,-5,5)");
    cmdPlot->add_option("--resolution", resolution, "tracing grid resolution (default 128)")
        ->check(CLI::Range(8, 4096));
    cmdPlot->add_option("--out", outPath, "output file; stdout when omitted");
    cmdPlot->add_flag("--dual", plotDual, "plot the dual curves instead of the locus");

    int samples = 100;
    double tol = 1e-8;
    auto* cmdVerify = app.add_subcommand(
        "verify", "numeric and structural cross checks; exit 3 when any check fails");
    addTf(cmdVerify);
    cmdVerify->add_option("--samples", samples, "gain sample count (default 100)");
    cmdVerify->add_option("--tol", tol, "residual tolerance (default 1e-8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        TransferFunction tf =
            makeTransferFunction(parseCoeffList(numText), parseCoeffList(denText));

        if (app.got_subcommand(cmdDecompose) || app.got_subcommand(cmdDual)) {
            bool withDual = app.got_subcommand(cmdDual) || decomposeDual;
            std::map<std::string, double> times;
            auto t0 = std::chrono::steady_clock::now();
            RootLocusDecomposition d = decomposeRootLocus(tf);
            times["decompose_ms"] = msSince(t0);
            Json doc;
            if (withDual) {
                auto t1 = std::chrono::steady_clock::now();
                std::vector<DualComponent> duals;
                duals.reserve(d.components.size());
                for (const auto& c : d.components) duals.push_back(dualizeComponent(c));
                ADRL adrl = assembleADRL(duals);
                times["dual_ms"] = msSince(t1);
                doc = buildReport(d, &duals, &adrl, times);
            } else {
                doc = buildReport(d, nullptr, nullptr, times);
            }
            std::cout << doc.dump(2) << "\n";
            return 0;
        }

        if (app.got_subcommand(cmdPlot)) {
            BBox box = parseBBox(bboxText);
            RootLocusDecomposition d = decomposeRootLocus(tf);
            std::vector<PlotSet> sets;
            if (plotDual) {
                std::vector<DualComponent> duals;
                duals.reserve(d.components.size());
                for (const auto& c : d.components) duals.push_back(dualizeComponent(c));
                sets = traceDual(assembleADRL(std::move(duals)), box, resolution);
            } else {
                sets = tracePrimal(d, box, resolution);
            }
            writeOut(format == "svg" ? renderSVG(sets, box) : renderCSV(sets), outPath);
            return 0;
        }

        VerifyOptions opt;
        opt.samples = samples;
        opt.tol = tol;
        auto results = runVerification(tf, opt);
        bool anyFail = false;
        for (const auto& r : results) {
            const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
            if (!r.skipped && !r.passed) anyFail = true;
            std::cout << tag << " " << r.name << ": " << r.detail << "\n";
        }
        std::cout << (anyFail ? "verification FAILED\n" : "all checks passed\n");
        return anyFail ? 3 : 0;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
