#include "queuelab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "queuelab/bounds.hpp"
#include "queuelab/layout.hpp"
#include "queuelab/randreg.hpp"

namespace queuelab {

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config)
{
    if (config.delta < 3)
        throw std::invalid_argument("run_experiment: delta >= 3 required");
    if (config.samples < 1)
        throw std::invalid_argument("run_experiment: samples >= 1 required");

    std::vector<ExperimentRow> rows;
    std::uint64_t index = 0;
    for (int n : config.n_list) {
        for (int s = 0; s < config.samples; ++s, ++index) {
            ExperimentRow row;
            row.delta = config.delta;
            row.n = n;
            row.seed = config.seed + index;
            auto started = std::chrono::steady_clock::now();
            try {
                RegularSample sample = gen_regular(n, config.delta, row.seed);
                LayoutResult layout;
                if (n <= config.exact_limit) {
                    ExactOptions opts;
                    opts.node_budget = config.node_budget;
                    layout = exact_queue_number(sample.graph, opts);
                } else {
                    layout = heuristic_queue_number(sample.graph, config.restarts, row.seed);
                }
                row.exact = layout.exact;
                row.queue_number = layout.queue_number;
                row.theorem_lower_c1 = theorem_lower(n, config.delta, 1.0);
                row.dujwoo_upper = dujwoo_upper(n, config.delta);
                if (row.queue_number > std::ceil(row.dujwoo_upper))
                    throw std::logic_error("queue number above the universal upper bound");
            } catch (const std::invalid_argument& e) {
                row.error = e.what();
            } catch (const std::runtime_error& e) {
                row.error = e.what();
            }
            if (config.measured_timings) {
                auto elapsed = std::chrono::steady_clock::now() - started;
                row.runtime_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::string experiment_csv(const std::vector<ExperimentRow>& rows)
{
    std::string out;
    out += "# queuelab experiment csv v1\n";
    out += "# runtime_ms is 0 unless timings were requested, keeping output reproducible\n";
    out += "delta,n,seed,mode,queue_number,theorem_lower_c1,dujwoo_upper,runtime_ms,error\n";
    for (const auto& r : rows) {
        out += std::to_string(r.delta) + "," + std::to_string(r.n) + "," +
               std::to_string(r.seed) + ",";
        if (!r.error.empty()) {
            std::string msg = r.error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            out += "error,,,," + std::to_string(r.runtime_ms) + "," + msg + "\n";
            continue;
        }
        out += r.exact ? "exact," : "heuristic,";
        out += std::to_string(r.queue_number) + "," + format_double(r.theorem_lower_c1) + "," +
               format_double(r.dujwoo_upper) + "," + std::to_string(r.runtime_ms) + ",\n";
    }
    return out;
}

std::string experiment_svg(const std::vector<ExperimentRow>& rows)
{
    const int width = 640, height = 440, margin = 50;
    double max_n = 1.0, max_y = 1.0;
    int delta = 3;
    for (const auto& r : rows) {
        if (!r.error.empty())
            continue;
        delta = r.delta;
        max_n = std::max(max_n, static_cast<double>(r.n));
        max_y = std::max({max_y, static_cast<double>(r.queue_number), r.dujwoo_upper});
    }
    auto sx = [&](double n) { return margin + n / max_n * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - y / max_y * (height - 2 * margin); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + format_double(sx(0)) + "\" y1=\"" + format_double(sy(0)) +
           "\" x2=\"" + format_double(sx(max_n)) + "\" y2=\"" + format_double(sy(0)) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_double(sx(0)) + "\" y1=\"" + format_double(sy(0)) +
           "\" x2=\"" + format_double(sx(0)) + "\" y2=\"" + format_double(sy(max_y)) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + format_double(width / 2.0) + "\" y=\"" +
           format_double(height - 10.0) + "\" font-size=\"12\">n (delta = " +
           std::to_string(delta) + ")</text>\n";
    svg += "<text x=\"10\" y=\"20\" font-size=\"12\">queue number</text>\n";
    // bound curves sampled along n
    for (int curve = 0; curve < 2; ++curve) {
        std::string path;
        for (int i = 0; i <= 100; ++i) {
            double n = max_n * i / 100.0;
            double y = 0.0;
            if (n >= 1.0)
                y = curve == 0 ? dujwoo_upper(n, delta) : theorem_lower(n, delta, 1.0);
            y = std::min(y, max_y);
            path += (i == 0 ? "M" : "L") + format_double(sx(n)) + " " + format_double(sy(y));
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" +
               (curve == 0 ? std::string("steelblue") : std::string("darkorange")) +
               "\" stroke-width=\"1\"/>\n";
    }
    for (const auto& r : rows) {
        if (!r.error.empty())
            continue;
        svg += "<circle cx=\"" + format_double(sx(r.n)) + "\" cy=\"" +
               format_double(sy(r.queue_number)) + "\" r=\"3\" fill=\"" +
               (r.exact ? std::string("black") : std::string("gray")) + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace queuelab
