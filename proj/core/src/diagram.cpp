#include "artin/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace artin {

namespace {

constexpr int kSpacing = 60;   // distance between chords
constexpr int kMarginX = 50;
constexpr int kTopY = 40;
constexpr int kChordH = 260;
constexpr int kInset = 14;     // nesting inset per depth level

int tree_depth(const Block& b) {
    int d = 0;
    for (const Block& c : b.children)
        d = std::max(d, tree_depth(c));
    return d + 1;
}

double chord_x(int j) { return kMarginX + static_cast<double>(j - 1) * kSpacing; }

void append_num(std::string& out, double v) {
    // Fixed one-decimal formatting keeps the output locale-independent.
    long long scaled = static_cast<long long>(v * 10 + (v >= 0 ? 0.5 : -0.5));
    out += std::to_string(scaled / 10);
    out += '.';
    out += std::to_string(scaled % 10 < 0 ? -(scaled % 10) : scaled % 10);
}

void rect(std::string& out, double x, double y, double w, double h, const char* color) {
    out += "  <rect x=\"";
    append_num(out, x);
    out += "\" y=\"";
    append_num(out, y);
    out += "\" width=\"";
    append_num(out, w);
    out += "\" height=\"";
    append_num(out, h);
    out += "\" fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" rx=\"6\"/>\n";
}

void text(std::string& out, double x, double y, const std::string& s, const char* anchor) {
    out += "  <text x=\"";
    append_num(out, x);
    out += "\" y=\"";
    append_num(out, y);
    out += "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"";
    out += anchor;
    out += "\">";
    out += s;
    out += "</text>\n";
}

void draw_block(std::string& out, const Block& b, int depth, int max_depth) {
    double inset = static_cast<double>(kInset) * (max_depth - depth);
    double x0 = chord_x(b.start) - (kSpacing / 2.0 - 4) + inset;
    double x1 = chord_x(b.end) + (kSpacing / 2.0 - 4) - inset;
    double y0 = kTopY + 10 + inset;
    double y1 = kTopY + kChordH - 10 - inset;
    const char* color = b.exponent < 0 ? "#c0392b" : "#2c3e50";
    rect(out, x0, y0, x1 - x0, y1 - y0, color);
    text(out, x0 + 6, y0 + 14, "e=" + std::to_string(b.exponent), "start");
    for (const Block& c : b.children)
        draw_block(out, c, depth + 1, max_depth);
}

} // namespace

std::string render_svg(const FramedTwistTree& ft) {
    ValidationReport rep = validate_tree(ft.tree);
    if (!rep.ok())
        throw std::invalid_argument("invalid tree: " + rep.violations.front());
    if (ft.framing.size() != static_cast<std::size_t>(ft.tree.chords))
        throw std::invalid_argument("framing length mismatch");

    int n = ft.tree.chords;
    int max_depth = 0;
    for (const Block& r : ft.tree.roots)
        max_depth = std::max(max_depth, tree_depth(r));

    double width = 2.0 * kMarginX + std::max(0, n - 1) * kSpacing;
    double height = kTopY + kChordH + 60;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    append_num(out, width);
    out += "\" height=\"";
    append_num(out, height);
    out += "\" viewBox=\"0 0 ";
    append_num(out, width);
    out += ' ';
    append_num(out, height);
    out += "\">\n";

    for (const Block& r : ft.tree.roots)
        draw_block(out, r, 0, max_depth);

    for (int j = 1; j <= n; ++j) {
        double x = chord_x(j);
        out += "  <line x1=\"";
        append_num(out, x);
        out += "\" y1=\"";
        append_num(out, kTopY);
        out += "\" x2=\"";
        append_num(out, x);
        out += "\" y2=\"";
        append_num(out, kTopY + kChordH);
        out += "\" stroke=\"#555\" stroke-width=\"2\"/>\n";
        text(out, x, kTopY - 8, std::to_string(j), "middle");
        text(out, x, kTopY + kChordH + 20,
             "m=" + std::to_string(ft.framing[static_cast<std::size_t>(j - 1)]), "middle");
    }

    out += "</svg>\n";
    return out;
}

} // namespace artin
