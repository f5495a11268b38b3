#include "histavg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace histavg {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv: " + path);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
    {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) table.header.push_back(field);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<double> row;
        while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
        if (row.size() != table.header.size()) throw std::runtime_error("ragged csv row in " + path);
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

struct Mapper {
    double x0, x1, y0, y1;  // data ranges
    double width = 760.0, height = 420.0, margin = 60.0;

    double px(double x) const { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); }
    double py(double y) const { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); }
};

std::string polyline(const Mapper& m, const std::vector<double>& ys, int stride) {
    std::ostringstream out;
    for (std::size_t t = 0; t < ys.size(); t += static_cast<std::size_t>(stride)) {
        if (!std::isfinite(ys[t])) continue;
        out << m.px(static_cast<double>(t + 1)) << "," << m.py(ys[t]) << " ";
    }
    return out.str();
}

}  // namespace

void write_regret_svg(const std::string& path, const std::vector<double>& mean,
                      const std::vector<double>& stderr_band, const std::vector<double>& reference,
                      const std::string& reference_label) {
    if (mean.empty()) throw std::invalid_argument("write_regret_svg: empty series");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write svg: " + path);

    const int T = static_cast<int>(mean.size());
    double lo = 0.0, hi = 1.0;
    for (std::size_t t = 0; t < mean.size(); ++t) {
        lo = std::min(lo, mean[t] - stderr_band[t]);
        hi = std::max(hi, mean[t] + stderr_band[t]);
    }
    for (double r : reference)
        if (std::isfinite(r)) hi = std::max(hi, r);
    if (hi <= lo) hi = lo + 1.0;
    Mapper m{1.0, static_cast<double>(T), lo, hi};
    const int stride = std::max(1, T / 1500);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m.width << "\" height=\"" << m.height
        << "\" viewBox=\"0 0 " << m.width << " " << m.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // stderr band
    out << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\" points=\"";
    for (int t = 0; t < T; t += stride)
        out << m.px(t + 1) << "," << m.py(mean[static_cast<std::size_t>(t)] + stderr_band[static_cast<std::size_t>(t)]) << " ";
    for (int t = ((T - 1) / stride) * stride; t >= 0; t -= stride)
        out << m.px(t + 1) << "," << m.py(mean[static_cast<std::size_t>(t)] - stderr_band[static_cast<std::size_t>(t)]) << " ";
    out << "\"/>\n";

    out << "<polyline fill=\"none\" stroke=\"#08519c\" stroke-width=\"1.5\" points=\""
        << polyline(m, mean, stride) << "\"/>\n";
    if (!reference.empty()) {
        out << "<polyline fill=\"none\" stroke=\"#a63603\" stroke-width=\"1.2\" stroke-dasharray=\"6,4\" points=\""
            << polyline(m, reference, stride) << "\"/>\n";
        out << "<text x=\"" << m.width - m.margin << "\" y=\"" << m.margin - 10
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#a63603\">"
            << reference_label << "</text>\n";
    }

    // axes
    out << "<line x1=\"" << m.margin << "\" y1=\"" << m.py(lo) << "\" x2=\"" << m.width - m.margin
        << "\" y2=\"" << m.py(lo) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << m.margin << "\" y1=\"" << m.py(lo) << "\" x2=\"" << m.margin << "\" y2=\""
        << m.py(hi) << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double ty = lo + (hi - lo) * k / 4.0;
        const double tx = 1.0 + (T - 1) * k / 4.0;
        out << "<text x=\"" << m.margin - 6 << "\" y=\"" << m.py(ty) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_number(ty)
            << "</text>\n";
        out << "<text x=\"" << m.px(tx) << "\" y=\"" << m.py(lo) + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << static_cast<long long>(tx) << "</text>\n";
    }
    out << "<text x=\"" << m.width / 2 << "\" y=\"" << m.height - 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">round</text>\n";
    out << "<text x=\"16\" y=\"" << m.height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
        << m.height / 2 << ")\">mean regret</text>\n";
    out << "</svg>\n";
}

}  // namespace histavg
