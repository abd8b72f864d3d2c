#include "arcnest/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace arcnest {

namespace {

// Greedy arc heights: shorter spans first, each arc on the lowest level
// where it does not collide with an already placed arc.
std::vector<int> heights(const std::vector<Arc>& arcs) {
    std::vector<size_t> order(arcs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const int sa = arcs[a].close - arcs[a].open, sb = arcs[b].close - arcs[b].open;
        if (sa != sb) return sa < sb;
        return arcs[a].open < arcs[b].open;
    });
    std::vector<int> h(arcs.size(), 0);
    std::vector<std::vector<std::pair<int, int>>> levels;  // level -> spans
    for (size_t idx : order) {
        const int lo = arcs[idx].open, hi = arcs[idx].close;
        size_t lvl = 0;
        for (;; ++lvl) {
            if (lvl == levels.size()) levels.emplace_back();
            bool clash = false;
            for (auto [a, b] : levels[lvl])
                if (lo <= b && a <= hi) clash = true;
            if (!clash) break;
        }
        levels[lvl].push_back({lo, hi});
        h[idx] = static_cast<int>(lvl) + 1;
    }
    return h;
}

struct Canvas {
    std::vector<std::string> rows;
    size_t width;

    Canvas(size_t nrows, size_t w) : rows(nrows, std::string(w, ' ')), width(w) {}

    void put(size_t r, size_t c, char ch) {
        char& cell = rows[r][c];
        if (cell == ' ') {
            cell = ch;
            return;
        }
        if (cell == ch || cell == '.' || cell == 'o') return;
        if ((cell == '-' && ch == '|') || (cell == '|' && ch == '-')) cell = '+';
        else cell = ch;
    }
};

void draw_layer(Canvas& canvas, const std::vector<Arc>& arcs, const std::vector<int>& h,
                int colw, bool mirror, size_t base_row) {
    auto row_of = [&](int level) {
        return mirror ? base_row + static_cast<size_t>(level)
                      : base_row - static_cast<size_t>(level);
    };
    for (size_t i = 0; i < arcs.size(); ++i) {
        const size_t c1 = static_cast<size_t>((arcs[i].open - 1) * colw);
        const size_t c2 = static_cast<size_t>((arcs[i].close - 1) * colw);
        const size_t top = row_of(h[i]);
        canvas.put(top, c1, '.');
        canvas.put(top, c2, '.');
        for (size_t c = c1 + 1; c < c2; ++c) canvas.put(top, c, '-');
        for (int lvl = 1; lvl < h[i]; ++lvl) {
            canvas.put(row_of(lvl), c1, '|');
            canvas.put(row_of(lvl), c2, '|');
        }
        if (arcs[i].colour != 1) {
            const std::string label = std::to_string(arcs[i].colour);
            const size_t mid = (c1 + c2) / 2 - (label.size() - 1) / 2;
            for (size_t j = 0; j < label.size() && mid + j < c2; ++j)
                canvas.rows[top][mid + j] = label[j];
        }
    }
}

}  // namespace

std::string render_ascii(const ArcDiagram& d) {
    if (d.n == 0) return "(empty)\n";
    const int colw = static_cast<int>(std::to_string(d.n).size()) + 1;
    const size_t width = static_cast<size_t>((d.n - 1) * colw) + std::to_string(d.n).size();

    const std::vector<int> hu = heights(d.upper);
    const std::vector<int> hl = heights(d.lower);
    int maxu = 0, maxl = 0;
    for (int h : hu) maxu = std::max(maxu, h);
    for (int h : hl) maxl = std::max(maxl, h);
    const bool loops = !d.loops.empty();
    const size_t loop_row = loops ? 1 : 0;

    const size_t vrow = static_cast<size_t>(maxu) + loop_row;
    Canvas canvas(vrow + 1 + static_cast<size_t>(maxl), width);

    // vertex labels
    for (int v = 1; v <= d.n; ++v) {
        const std::string label = std::to_string(v);
        const size_t c = static_cast<size_t>((v - 1) * colw);
        for (size_t j = 0; j < label.size(); ++j) canvas.rows[vrow][c + j] = label[j];
    }
    for (const Arc& l : d.loops) {
        const size_t c = static_cast<size_t>((l.open - 1) * colw);
        canvas.put(vrow - 1, c, 'o');
        if (l.colour != 1 && c + 1 < width)
            canvas.rows[vrow - 1][c + 1] = std::to_string(l.colour)[0];
    }
    // Upper level 1 sits just above the vertex row (or above the loop row
    // when loops are present); lower levels mirror below.
    if (!d.upper.empty()) draw_layer(canvas, d.upper, hu, colw, false, vrow - loop_row);
    if (!d.lower.empty()) draw_layer(canvas, d.lower, hl, colw, true, vrow);

    std::string out;
    for (const std::string& row : canvas.rows) {
        size_t end = row.find_last_not_of(' ');
        out += end == std::string::npos ? "" : row.substr(0, end + 1);
        out += '\n';
    }
    return out;
}

std::string render_svg(const ArcDiagram& d) {
    const int step = 40, margin = 30;
    const int baseline = 30 + 18 * d.n / 2;
    auto x = [&](int v) { return margin + step * (v - 1); };
    auto palette = [](int colour) -> std::string {
        switch (colour) {
            case 1: return "#000000";
            case 2: return "#c0392b";
            case 3: return "#2166ac";
            case 4: return "#1a9850";
            case 5: return "#e67e22";
            default: return "#8e44ad";
        }
    };

    const int height = 2 * baseline + 30;
    const int width = 2 * margin + step * std::max(0, d.n - 1);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    auto curve = [&](const Arc& a, bool upper) {
        const int rise = 14 + 9 * (a.close - a.open);
        const int y = upper ? baseline - rise : baseline + rise;
        svg << "  <path d=\"M " << x(a.open) << " " << baseline << " Q "
            << (x(a.open) + x(a.close)) / 2 << " " << y << " " << x(a.close) << " " << baseline
            << "\" fill=\"none\" stroke=\"" << palette(a.colour) << "\" stroke-width=\"2\"/>\n";
    };
    for (const Arc& a : d.upper) curve(a, true);
    for (const Arc& a : d.lower) curve(a, false);
    for (const Arc& l : d.loops)
        svg << "  <circle cx=\"" << x(l.open) << "\" cy=\"" << baseline - 12
            << "\" r=\"8\" fill=\"none\" stroke=\"" << palette(l.colour)
            << "\" stroke-width=\"2\"/>\n";

    for (int v = 1; v <= d.n; ++v) {
        svg << "  <circle cx=\"" << x(v) << "\" cy=\"" << baseline << "\" r=\"3\"/>\n";
        svg << "  <text x=\"" << x(v) << "\" y=\"" << baseline + 18
            << "\" text-anchor=\"middle\" font-size=\"12\">" << v << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace arcnest
