#pragma once

// Text (Unicode/ASCII) and SVG backends for laid-out diagrams.

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "layout.hpp"

namespace begriff {

enum class Backend { UNICODE, ASCII, SVG };

struct RenderOptions {
    Backend backend = Backend::UNICODE;
    int cell_width_px = 12;
    int row_height_px = 24;
    double stroke_width_px = 1.5;
};

namespace detail {

struct GlyphMap {
    const char* stroke;
    const char* vertical;
    const char* anchor;
    const char* corner;
    const char* tick;
    const char* judge;
};

inline constexpr GlyphMap kUnicodeGlyphs{"─", "│", "┬", "└", "┬", "├"};
inline constexpr GlyphMap kAsciiGlyphs{"-", "|", "+", "+", "!", "|"};

}  // namespace detail

inline std::string render_text(const Diagram& d, const RenderOptions& opts = {}) {
    if (opts.backend == Backend::SVG) throw std::invalid_argument("render_text needs a text backend");
    const detail::GlyphMap& g = opts.backend == Backend::ASCII ? detail::kAsciiGlyphs : detail::kUnicodeGlyphs;

    // One string per cell; labels and concavities write one ASCII char per cell.
    std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(d.rows),
                                               std::vector<std::string>(static_cast<std::size_t>(d.columns), " "));
    auto put = [&](int row, int col, std::string s) {
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = std::move(s);
    };
    auto put_text = [&](int row, int col, const std::string& s) {
        for (std::size_t k = 0; k < s.size(); ++k) put(row, col + static_cast<int>(k), std::string(1, s[k]));
    };

    for (const auto& node : d.nodes) {
        for (const auto& run : node.glyphs) {
            switch (run.kind) {
            case GlyphKind::STROKE:
                for (int c = run.col_start; c < run.col_end; ++c) put(run.row, c, g.stroke);
                break;
            case GlyphKind::NEG_TICK: put(run.row, run.col_start, g.tick); break;
            case GlyphKind::JUDGE_BAR: put(run.row, run.col_start, g.judge); break;
            case GlyphKind::BRANCH_CORNER: put(run.row, run.col_start, g.corner); break;
            case GlyphKind::CONCAVITY: put_text(run.row, run.col_start, "(" + run.letters + ")"); break;
            case GlyphKind::VERTICAL:
                put(run.row, run.col_start, g.anchor);
                for (int r = run.row + 1; r < run.row_end; ++r) put(r, run.col_start, g.vertical);
                break;
            }
        }
        if (node.leaf_label) put_text(node.row, node.col_end + 1, *node.leaf_label);
    }

    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (const auto& cell : row) line += cell;
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

namespace detail {

// Fixed-point with at most two fraction digits, trailing zeros dropped.
inline std::string svg_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace detail

// Standalone SVG 1.1 document. Horizontal strokes are merged per row into one
// path between concavities; every tick, vertical, corner and concavity gets
// its own path, with a class naming the glyph kind.
inline std::string render_svg(const Diagram& d, const RenderOptions& opts = {}) {
    using detail::svg_number;
    if (opts.cell_width_px <= 0 || opts.row_height_px <= 0 || opts.stroke_width_px <= 0)
        throw std::invalid_argument("render dimensions must be positive");
    const double cw = opts.cell_width_px;
    const double rh = opts.row_height_px;
    const double margin_x = cw;
    const double margin_y = rh / 2;
    auto x_at = [&](double col) { return margin_x + col * cw; };
    auto y_at = [&](int row) { return margin_y + row * rh + rh / 2; };
    const double font_size = rh * 0.55;

    // Horizontal extents in half-cell units per row.
    struct Span {
        double from, to;
    };
    std::vector<std::vector<Span>> lines(static_cast<std::size_t>(d.rows));
    std::vector<std::string> paths;
    std::vector<std::string> texts;
    auto path = [&](const char* cls, const std::string& data) {
        paths.push_back("<path class=\"" + std::string(cls) + "\" d=\"" + data + "\"/>");
    };
    auto point = [&](double x, double y) { return svg_number(x) + " " + svg_number(y); };

    for (const auto& node : d.nodes) {
        for (const auto& run : node.glyphs) {
            auto& line = lines[static_cast<std::size_t>(run.row)];
            const double y = y_at(run.row);
            const double mid = run.col_start + 0.5;
            switch (run.kind) {
            case GlyphKind::STROKE: line.push_back({double(run.col_start), double(run.col_end)}); break;
            case GlyphKind::NEG_TICK:
                line.push_back({double(run.col_start), double(run.col_end)});
                path("tick", "M " + point(x_at(mid), y) + " L " + point(x_at(mid), y + rh / 3));
                break;
            case GlyphKind::JUDGE_BAR:
                line.push_back({mid, double(run.col_end)});
                path("judge", "M " + point(x_at(mid), y - rh / 3) + " L " + point(x_at(mid), y + rh / 3));
                break;
            case GlyphKind::VERTICAL: {
                line.push_back({double(run.col_start), double(run.col_end)});
                const double bottom = y_at(run.row_end) - cw / 2;
                path("vertical", "M " + point(x_at(mid), y) + " L " + point(x_at(mid), bottom));
                break;
            }
            case GlyphKind::BRANCH_CORNER:
                path("corner", "M " + point(x_at(mid), y - cw / 2) + " Q " + point(x_at(mid), y) + " " +
                                   point(x_at(mid + 0.5), y));
                break;
            case GlyphKind::CONCAVITY: {
                const double x0 = x_at(run.col_start);
                const double x1 = x_at(run.col_end);
                const double rx = (x1 - x0) / 2;
                path("concavity", "M " + point(x0, y) + " A " + point(rx, rh / 4) + " 0 0 0 " + point(x1, y));
                texts.push_back("<text class=\"letters\" x=\"" + svg_number((x0 + x1) / 2) + "\" y=\"" +
                                svg_number(y - rh / 6) + "\" text-anchor=\"middle\">" +
                                detail::xml_escape(run.letters) + "</text>");
                break;
            }
            }
        }
        if (node.leaf_label) {
            texts.push_back("<text class=\"label\" x=\"" + svg_number(x_at(node.col_end + 1)) + "\" y=\"" +
                            svg_number(y_at(node.row) + font_size / 3) + "\">" + detail::xml_escape(*node.leaf_label) +
                            "</text>");
        }
    }

    std::vector<std::string> strokes;
    for (int r = 0; r < d.rows; ++r) {
        auto spans = lines[static_cast<std::size_t>(r)];
        std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.from < b.from; });
        std::vector<Span> merged;
        for (const auto& s : spans) {
            if (!merged.empty() && s.from <= merged.back().to) merged.back().to = std::max(merged.back().to, s.to);
            else merged.push_back(s);
        }
        for (const auto& s : merged)
            strokes.push_back("<path class=\"stroke\" d=\"M " + point(x_at(s.from), y_at(r)) + " L " +
                              point(x_at(s.to), y_at(r)) + "\"/>");
    }

    const double width = 2 * margin_x + d.columns * cw;
    const double height = 2 * margin_y + d.rows * rh;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg_number(width) +
           "\" height=\"" + svg_number(height) + "\" viewBox=\"0 0 " + svg_number(width) + " " +
           svg_number(height) + "\">\n";
    out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"" + svg_number(opts.stroke_width_px) +
           "\" stroke-linecap=\"butt\">\n";
    for (const auto& s : strokes) out += s + "\n";
    for (const auto& p : paths) out += p + "\n";
    out += "</g>\n";
    out += "<g font-family=\"monospace\" font-size=\"" + svg_number(font_size) + "\" fill=\"black\">\n";
    for (const auto& t : texts) out += t + "\n";
    out += "</g>\n";
    out += "</svg>\n";
    return out;
}

inline std::string render(const Diagram& d, const RenderOptions& opts = {}) {
    return opts.backend == Backend::SVG ? render_svg(d, opts) : render_text(d, opts);
}

}  // namespace begriff
