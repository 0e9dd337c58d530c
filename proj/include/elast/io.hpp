#pragma once

/**
 * @file io.hpp
 * @brief Text serializations: stats CSV/JSON, profile JSON, SVG scatter plots.
 *
 * Everything here is byte-deterministic for fixed input. Rationals are written
 * reduced as separate numerator/denominator fields; floating point appears
 * only in SVG coordinates.
 */

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "elast/factorizations.hpp"
#include "elast/profile.hpp"

namespace elast {

inline constexpr const char* kStatsCsvHeader = "n,max_len,min_len,rho_num,rho_den";

inline void write_stats_csv(std::ostream& os, const std::vector<LengthStats>& rows) {
    os << kStatsCsvHeader << '\n';
    for (const auto& r : rows)
        os << r.n << ',' << r.max_len << ',' << r.min_len << ',' << r.elasticity.num() << ','
           << r.elasticity.den() << '\n';
}

inline nlohmann::ordered_json stats_to_json(const NumericalMonoid& s, const std::vector<LengthStats>& rows) {
    nlohmann::ordered_json out;
    out["generators"] = std::vector<Element>(s.generators().begin(), s.generators().end());
    auto& list = out["stats"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        list.push_back({{"n", r.n},
                        {"max_len", r.max_len},
                        {"min_len", r.min_len},
                        {"rho_num", r.elasticity.num().convert_to<std::uint64_t>()},
                        {"rho_den", r.elasticity.den().convert_to<std::uint64_t>()}});
    }
    return out;
}

/// {"generators", "base", "period", "finite_part": [[num, den, witness]...],
///  "sequences": [[n0, M0, m0]...]}, keys in that order.
inline nlohmann::ordered_json profile_to_json(const ElasticityProfile& p) {
    nlohmann::ordered_json out;
    out["generators"] = std::vector<Element>(p.monoid.generators().begin(), p.monoid.generators().end());
    out["base"] = p.base;
    out["period"] = p.period;
    auto& finite = out["finite_part"] = nlohmann::ordered_json::array();
    for (const auto& fp : p.finite_part)
        finite.push_back({fp.value.num().convert_to<std::uint64_t>(), fp.value.den().convert_to<std::uint64_t>(),
                          fp.witness});
    auto& seqs = out["sequences"] = nlohmann::ordered_json::array();
    for (const auto& seq : p.sequences) seqs.push_back({seq.n0, seq.max0, seq.min0});
    return out;
}

enum class PlotKind { Rho, MaxLen, MinLen };

/// Scatter plot of (n, value) for n in S, n <= to, on a fixed 800x600 viewBox.
inline void write_svg_plot(std::ostream& os, const LengthEngine& engine, PlotKind kind, Element to) {
    constexpr double kWidth = 800, kHeight = 600, kMargin = 50;
    const auto rows = length_stats_range(engine, 0, to);
    auto value_of = [kind](const LengthStats& r) {
        switch (kind) {
            case PlotKind::Rho: return r.elasticity.to_double();
            case PlotKind::MaxLen: return static_cast<double>(r.max_len);
            case PlotKind::MinLen: return static_cast<double>(r.min_len);
        }
        return 0.0;
    };
    double lo = 0, hi = 1;
    if (!rows.empty()) {
        lo = hi = value_of(rows.front());
        for (const auto& r : rows) {
            lo = std::min(lo, value_of(r));
            hi = std::max(hi, value_of(r));
        }
    }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double span_x = to > 0 ? static_cast<double>(to) : 1.0;
    auto px = [&](double n) { return kMargin + (kWidth - 2 * kMargin) * n / span_x; };
    auto py = [&](double v) { return kHeight - kMargin - (kHeight - 2 * kMargin) * (v - lo) / (hi - lo); };

    const char* label = kind == PlotKind::Rho ? "rho(n)" : kind == PlotKind::MaxLen ? "M(n)" : "m(n)";
    char buf[160];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf, "<line x1=\"%.0f\" y1=\"%.0f\" x2=\"%.0f\" y2=\"%.0f\" stroke=\"black\"/>\n",
                  kMargin, kHeight - kMargin, kWidth - kMargin, kHeight - kMargin);
    os << buf;
    std::snprintf(buf, sizeof buf, "<line x1=\"%.0f\" y1=\"%.0f\" x2=\"%.0f\" y2=\"%.0f\" stroke=\"black\"/>\n",
                  kMargin, kMargin, kMargin, kHeight - kMargin);
    os << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\">%s</text>\n", kMargin,
                  kMargin - 10, label);
    os << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\">%.4g</text>\n", 5.0,
                  kHeight - kMargin, lo);
    os << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\">%.4g</text>\n", 5.0, kMargin, hi);
    os << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\">n = %llu</text>\n",
                  kWidth - kMargin - 60, kHeight - kMargin + 20, static_cast<unsigned long long>(to));
    os << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\"/>\n",
                      px(static_cast<double>(r.n)), py(value_of(r)));
        os << buf;
    }
    os << "</svg>\n";
}

}  // namespace elast
