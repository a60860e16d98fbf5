#include "kinosipp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "kinosipp/io.hpp"

namespace kinosipp {

namespace {

constexpr const char* kHeader =
    "planner,map,density,seed,status,cost_steps,expansions,generations,runtime_ms";

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::string fmt(double v, int precision) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* kColors[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3"};

// Grouped bar chart. values[g][p] is the bar of planner p in group g.
std::string bar_chart(const std::string& title, const std::string& y_label,
                      const std::vector<std::string>& groups, const std::vector<std::string>& series,
                      const std::vector<std::vector<double>>& values, double y_max) {
    const double left = 70, top = 40, plot_h = 260, bar_w = 18, gap = 24;
    const double group_w = std::max<double>(1.0, static_cast<double>(series.size())) * bar_w + gap;
    const double plot_w = std::max(200.0, group_w * static_cast<double>(groups.size()));
    const double width = left + plot_w + 150, height = top + plot_h + 80;
    if (!(y_max > 0.0)) {
        y_max = 1.0;
    }
    std::ostringstream s;
    s << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
      << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << width << R"(" height=")" << height
      << R"(" font-family="sans-serif" font-size="11">)" << '\n'
      << R"(<text x=")" << left << R"(" y="20" font-size="14">)" << escape(title) << "</text>\n"
      << R"(<line x1=")" << left << R"(" y1=")" << top << R"(" x2=")" << left << R"(" y2=")"
      << top + plot_h << R"(" stroke="black"/>)" << '\n'
      << R"(<line x1=")" << left << R"(" y1=")" << top + plot_h << R"(" x2=")" << left + plot_w
      << R"(" y2=")" << top + plot_h << R"(" stroke="black"/>)" << '\n';
    for (int i = 0; i <= 4; ++i) {
        const double v = y_max * i / 4.0;
        const double y = top + plot_h - plot_h * i / 4.0;
        s << R"(<text x=")" << left - 6 << R"(" y=")" << y + 4 << R"(" text-anchor="end">)"
          << fmt(v, v < 10 ? 2 : 0) << "</text>\n";
    }
    s << R"(<text x="14" y=")" << top + plot_h / 2 << R"(" transform="rotate(-90 14 )"
      << top + plot_h / 2 << R"x()" text-anchor="middle">)x" << escape(y_label) << "</text>\n";
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const double gx = left + gap / 2 + group_w * static_cast<double>(g);
        s << "<g>\n";
        for (std::size_t p = 0; p < series.size(); ++p) {
            const double v = std::clamp(values[g][p], 0.0, y_max);
            const double h = plot_h * v / y_max;
            s << R"(<rect x=")" << gx + bar_w * static_cast<double>(p) << R"(" y=")"
              << top + plot_h - h << R"(" width=")" << bar_w - 2 << R"(" height=")" << h
              << R"(" fill=")" << kColors[p % 5] << R"("><title>)" << escape(series[p]) << ": "
              << fmt(values[g][p], 3) << "</title></rect>\n";
        }
        s << R"(<text x=")" << gx + (group_w - gap) / 2 << R"(" y=")" << top + plot_h + 16
          << R"(" text-anchor="middle">)" << escape(groups[g]) << "</text>\n</g>\n";
    }
    for (std::size_t p = 0; p < series.size(); ++p) {
        const double y = top + 14.0 * static_cast<double>(p);
        s << R"(<rect x=")" << left + plot_w + 20 << R"(" y=")" << y << R"(" width="10" height="10" fill=")"
          << kColors[p % 5] << R"("/>)" << R"(<text x=")" << left + plot_w + 36 << R"(" y=")" << y + 9
          << R"(">)" << escape(series[p]) << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string bucket_label(const std::pair<std::string, double>& b) {
    std::string map = std::filesystem::path(b.first).stem().string();
    return map + " " + fmt(b.second, 3);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

}  // namespace

void write_csv(const SuiteResult& result, std::ostream& out) {
    out << kHeader << '\n';
    for (const RunRecord& r : result.records) {
        char density[32];
        const auto end = std::to_chars(density, density + sizeof density, r.density).ptr;
        out << r.planner << ',' << r.map << ',' << std::string_view(density, end - density) << ','
            << r.seed << ',' << r.status << ',';
        if (r.cost) {
            out << *r.cost;
        }
        out << ',' << r.expansions << ',' << r.generations << ',' << fmt(r.runtime_ms, 3) << '\n';
    }
}

void write_csv(const SuiteResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_csv(result, out);
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

SuiteResult read_csv(std::istream& in) {
    SuiteResult result;
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        throw InputError("CSV header mismatch");
    }
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto f = split(line);
        if (f.size() != 9) {
            throw InputError("CSV line " + std::to_string(lineno) + ": expected 9 fields");
        }
        try {
            RunRecord r;
            r.planner = f[0];
            r.map = f[1];
            r.density = std::stod(f[2]);
            r.seed = std::stoull(f[3]);
            r.status = f[4];
            if (!f[5].empty()) {
                r.cost = std::stoll(f[5]);
            }
            r.expansions = std::stoull(f[6]);
            r.generations = std::stoull(f[7]);
            r.runtime_ms = std::stod(f[8]);
            result.records.push_back(std::move(r));
        } catch (const std::logic_error&) {
            throw InputError("CSV line " + std::to_string(lineno) + ": bad number");
        }
    }
    return result;
}

SuiteResult read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_csv(in);
}

std::string success_rate_svg(const SuiteResult& result) {
    const auto planners = result.planners();
    std::vector<std::string> groups;
    std::vector<std::vector<double>> values;
    for (const auto& b : result.buckets()) {
        groups.push_back(bucket_label(b));
        std::vector<double> row;
        for (const auto& p : planners) {
            row.push_back(result.success_rate(p, b.first, b.second));
        }
        values.push_back(row);
    }
    return bar_chart("Success rate by map and density", "success rate", groups, planners, values, 1.0);
}

std::string runtime_svg(const SuiteResult& result) {
    const auto planners = result.planners();
    std::vector<std::string> groups;
    std::vector<std::vector<double>> values;
    double top = 0.0;
    for (const auto& b : result.buckets()) {
        groups.push_back(bucket_label(b));
        std::vector<double> row;
        for (const auto& p : planners) {
            row.push_back(result.mean_runtime_ms(p, b.first, b.second));
            top = std::max(top, row.back());
        }
        values.push_back(row);
    }
    return bar_chart("Mean runtime", "ms", groups, planners, values, top * 1.1);
}

void emit_plots(const SuiteResult& result, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    }
    write_text(dir / "success_rate.svg", success_rate_svg(result));
    write_text(dir / "runtime.svg", runtime_svg(result));
}

}  // namespace kinosipp
