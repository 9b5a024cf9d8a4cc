// SVG scatter charts for sweep results.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "stacking/experiment.hpp"
#include "stacking/instance_io.hpp"

namespace stacking {

namespace {

constexpr double kWidth = 760, kHeight = 480;
constexpr double kLeft = 80, kRight = 190, kTop = 40, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Metric {
    const char* key;
    const char* label;
    double ExperimentRow::*field;
};

constexpr Metric kMetrics[] = {
    {"c_over_sqrt_n", "c / sqrt(n)", &ExperimentRow::c_over_sqrt_n},
    {"err_sqrt_n", "(chi'_h / (omega'/h) - 1) * sqrt(n)", &ExperimentRow::err_sqrt_n},
    {"ratio_ub", "chi'_h / (omega'/h)", &ExperimentRow::ratio_ub},
};

// 1, 2 or 5 times a power of ten, at least span / target.
double nice_step(double span, int target) {
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

std::string fmt_tick(double v) {
    std::ostringstream os;
    os << std::defaultfloat << std::setprecision(6) << (std::abs(v) < 1e-12 ? 0.0 : v);
    return os.str();
}

using Series = std::vector<std::pair<double, double>>;

std::string render(const std::string& title, const char* ylabel,
                   const std::vector<std::pair<std::string, Series>>& series) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& [name, pts] : series) {
        for (auto [x, y] : pts) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x), xmax = std::max(xmax, x);
            ymin = std::min(ymin, y), ymax = std::max(ymax, y);
        }
    }
    xmin = std::min(xmin, 0.0);
    ymin = std::min(ymin, 0.0);
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    double xstep = nice_step(xmax - xmin, 6), ystep = nice_step(ymax - ymin, 6);
    xmax = std::ceil(xmax / xstep) * xstep;
    ymax = std::ceil(ymax / ystep) * ystep;

    double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return kTop + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
       << title << "</text>\n";

    for (double x = xmin; x <= xmax + 1e-9 * xstep; x += xstep) {
        os << "<line x1=\"" << sx(x) << "\" y1=\"" << kTop << "\" x2=\"" << sx(x) << "\" y2=\""
           << kTop + ph << "\" stroke=\"#e5e5e5\"/>\n";
        os << "<text x=\"" << sx(x) << "\" y=\"" << kTop + ph + 18
           << "\" text-anchor=\"middle\">" << fmt_tick(x) << "</text>\n";
    }
    for (double y = ymin; y <= ymax + 1e-9 * ystep; y += ystep) {
        os << "<line x1=\"" << kLeft << "\" y1=\"" << sy(y) << "\" x2=\"" << kLeft + pw
           << "\" y2=\"" << sy(y) << "\" stroke=\"#e5e5e5\"/>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(y) + 4 << "\" text-anchor=\"end\">"
           << fmt_tick(y) << "</text>\n";
    }
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\""
       << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 16
       << "\" text-anchor=\"middle\">n</text>\n";
    os << "<text transform=\"translate(20," << kTop + ph / 2
       << ") rotate(-90)\" text-anchor=\"middle\">" << ylabel << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % std::size(kPalette)];
        for (auto [x, y] : series[s].second) {
            os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"2.5\" fill=\""
               << color << "\"/>\n";
        }
        double ly = kTop + 14 + 20.0 * static_cast<double>(s);
        os << "<circle cx=\"" << kLeft + pw + 20 << "\" cy=\"" << ly - 4 << "\" r=\"4\" fill=\""
           << color << "\"/>\n";
        os << "<text x=\"" << kLeft + pw + 30 << "\" y=\"" << ly << "\">" << series[s].first
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::vector<std::filesystem::path> write_plots(const std::vector<ExperimentRow>& rows,
                                               const std::filesystem::path& prefix) {
    // family -> ordered list of (dist, rows)
    std::map<std::string, std::vector<std::pair<std::string, std::vector<const ExperimentRow*>>>>
        families;
    for (const auto& row : rows) {
        if (!row.ok()) continue;
        std::string fam;
        try {
            fam = family(parse_distribution(row.dist));
        } catch (const std::invalid_argument&) {
            continue;
        }
        auto& dists = families[fam];
        auto it = std::find_if(dists.begin(), dists.end(),
                               [&](const auto& d) { return d.first == row.dist; });
        if (it == dists.end()) {
            dists.push_back({row.dist, {}});
            it = std::prev(dists.end());
        }
        it->second.push_back(&row);
    }

    std::vector<std::filesystem::path> written;
    for (const auto& [fam, dists] : families) {
        for (const auto& metric : kMetrics) {
            std::vector<std::pair<std::string, Series>> series;
            for (const auto& [dist, members] : dists) {
                Series pts;
                for (const auto* r : members) {
                    pts.emplace_back(static_cast<double>(r->n), r->*(metric.field));
                }
                series.emplace_back(dist, std::move(pts));
            }
            auto path = prefix;
            path += "_" + fam + "_" + metric.key + ".svg";
            std::ofstream out(path, std::ios::trunc);
            if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
            out << render(metric.label + std::string(" vs n, ") + fam + " family", metric.label,
                          series);
            if (!out) throw IoError("write failed on '" + path.string() + "'");
            written.push_back(path);
        }
    }
    return written;
}

}  // namespace stacking
