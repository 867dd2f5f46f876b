#include "ormer/series.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "ormer/errors.hpp"

namespace ormer {

int64_t PriceSeries::start_time() const {
    if (points.empty()) raise(Errc::insufficient_history, "empty series");
    return points.front().t;
}

int64_t PriceSeries::end_time() const {
    if (points.empty()) raise(Errc::insufficient_history, "empty series");
    return points.back().t;
}

FixedQ64 PriceSeries::value_at(int64_t t) const {
    auto it = std::upper_bound(
        points.begin(), points.end(), t,
        [](int64_t v, const PricePoint& pt) { return v < pt.t; });
    if (it == points.begin()) {
        raise(Errc::insufficient_history, "time precedes the series");
    }
    return std::prev(it)->p;
}

void PriceSeries::push(int64_t t, FixedQ64 p) {
    if (!points.empty() && t <= points.back().t) {
        raise(Errc::non_monotonic_timestamp, "series push");
    }
    if (p.raw <= 0) {
        raise(Errc::non_positive_price, "series push");
    }
    points.push_back({t, p});
}

namespace {

bool parse_row(const std::string& line, int64_t& t, FixedQ64& p) {
    size_t comma = line.find(',');
    if (comma == std::string::npos) return false;
    std::string_view ts(line.data(), comma);
    std::string_view ps(line.data() + comma + 1, line.size() - comma - 1);
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
    if (ec != std::errc{} || ptr != ts.data() + ts.size()) return false;
    p = FixedQ64::parse_decimal(ps);
    return true;
}

}  // namespace

PriceSeries load_feed_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        raise(Errc::io_error, "cannot open feed file: " + path.string());
    }
    PriceSeries series;
    std::string line;
    size_t row = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        int64_t t;
        FixedQ64 p;
        bool ok;
        try {
            ok = parse_row(line, t, p);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) {
            if (first) {
                first = false;  // tolerate one header row
                continue;
            }
            raise(Errc::parse_error, "row " + std::to_string(row));
        }
        first = false;
        if (p.raw <= 0) {
            raise(Errc::non_positive_price, "row " + std::to_string(row));
        }
        if (!series.points.empty() && t <= series.points.back().t) {
            raise(Errc::non_monotonic_timestamp, "row " + std::to_string(row));
        }
        series.points.push_back({t, p});
    }
    return series;
}

void save_feed_csv(const PriceSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        raise(Errc::io_error, "cannot write feed file: " + path.string());
    }
    out << "timestamp,price\n";
    for (const auto& pt : series.points) {
        out << pt.t << ',' << pt.p.to_decimal() << '\n';
    }
    if (!out) {
        raise(Errc::io_error, "short write: " + path.string());
    }
}

std::vector<double> resample_grid(const PriceSeries& series, int64_t t_start,
                                  int64_t t_end, int64_t step) {
    if (step <= 0) raise(Errc::field_out_of_range, "grid step");
    if (t_end < t_start) raise(Errc::empty_overlap, "grid range");
    std::vector<double> out;
    out.reserve(static_cast<size_t>((t_end - t_start) / step) + 1);
    size_t idx = 0;
    const auto& pts = series.points;
    for (int64_t t = t_start; t <= t_end; t += step) {
        while (idx + 1 < pts.size() && pts[idx + 1].t <= t) ++idx;
        if (pts.empty() || pts[idx].t > t) {
            raise(Errc::insufficient_history, "grid precedes the series");
        }
        out.push_back(pts[idx].p.to_double());
    }
    return out;
}

}  // namespace ormer
