#include "wormhole/render.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace wormhole {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Point {
    double x, y;
};

// Vertex 0 at the top, counterclockwise in mathematical orientation
// (SVG y grows downward, so the screen order appears clockwise).
std::vector<Point> circle_layout(int count, double cx, double cy, double r) {
    std::vector<Point> pts(count);
    for (int i = 0; i < count; ++i) {
        double angle = kPi / 2 + 2 * kPi * i / count;
        pts[i] = {cx + r * std::cos(angle), cy - r * std::sin(angle)};
    }
    return pts;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << v;
    return os.str();
}

void svg_line(std::ostringstream& os, Point a, Point b, const char* stroke, double width) {
    os << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
       << "\" y2=\"" << fmt(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
       << "\"/>\n";
}

void svg_label(std::ostringstream& os, Point p, const std::string& text, const char* fill) {
    os << "  <text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y)
       << "\" font-size=\"13\" font-family=\"monospace\" text-anchor=\"middle\" fill=\"" << fill
       << "\">" << text << "</text>\n";
}

// Character-grid line drawing; deterministic output for stable diffs.
struct AsciiGrid {
    int w, h;
    std::vector<std::string> rows;

    AsciiGrid(int w_, int h_) : w(w_), h(h_), rows(h_, std::string(w_, ' ')) {}

    void put(int x, int y, char c) {
        if (x >= 0 && x < w && y >= 0 && y < h) rows[y][x] = c;
    }

    void line(int x0, int y0, int x1, int y1, char c) {
        int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
        int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
        int err = dx + dy;
        while (true) {
            put(x0, y0, c);
            if (x0 == x1 && y0 == y1) break;
            int e2 = 2 * err;
            if (e2 >= dy) {
                err += dy;
                x0 += sx;
            }
            if (e2 <= dx) {
                err += dx;
                y0 += sy;
            }
        }
    }

    void text(int x, int y, const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i) put(x + static_cast<int>(i), y, s[i]);
    }

    std::string str() const {
        std::string out;
        for (const auto& r : rows) {
            std::string t = r;
            while (!t.empty() && t.back() == ' ') t.pop_back();
            out += t;
            out += '\n';
        }
        return out;
    }
};

} // namespace

std::string render_triangulation_svg(const FramedTriangulation& ft) {
    const int p = ft.tri.size;
    const double size = 420, cx = size / 2, cy = size / 2, r = size / 2 - 40;
    auto pts = circle_layout(p, cx, cy, r);
    auto labels = circle_layout(p, cx, cy, r + 22);
    std::vector<int> idx = ft.tri.vertex_indices();

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    for (int i = 0; i < p; ++i) svg_line(os, pts[i], pts[(i + 1) % p], "black", 1.6);
    for (auto [a, b] : ft.tri.diagonals) svg_line(os, pts[a], pts[b], "#555555", 1.0);
    for (int i = 0; i < p; ++i) {
        bool hidden = i == ft.hidden;
        bool weight = idx[i] > 2;
        os << "  <circle cx=\"" << fmt(pts[i].x) << "\" cy=\"" << fmt(pts[i].y) << "\" r=\""
           << (hidden ? 7 : 5) << "\" fill=\"" << (hidden ? "#d62728" : (weight ? "#1f77b4" : "black"))
           << "\"/>\n";
        svg_label(os, {labels[i].x, labels[i].y + 4}, std::to_string(idx[i]),
                  hidden ? "#d62728" : (weight ? "#1f77b4" : "black"));
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_triangulation_ascii(const FramedTriangulation& ft) {
    const int p = ft.tri.size;
    const int r = std::max(9, p + 4);
    const int w = 4 * r + 9, h = 2 * r + 5;
    const double cx = w / 2.0, cy = h / 2.0;
    AsciiGrid grid(w, h);

    std::vector<std::pair<int, int>> pos(p);
    for (int i = 0; i < p; ++i) {
        double angle = kPi / 2 + 2 * kPi * i / p;
        pos[i] = {static_cast<int>(std::lround(cx + 2.0 * (r - 2) * std::cos(angle))),
                  static_cast<int>(std::lround(cy - (r - 2) * std::sin(angle)))};
    }
    for (int i = 0; i < p; ++i) {
        auto [x0, y0] = pos[i];
        auto [x1, y1] = pos[(i + 1) % p];
        grid.line(x0, y0, x1, y1, '.');
    }
    for (auto [a, b] : ft.tri.diagonals)
        grid.line(pos[a].first, pos[a].second, pos[b].first, pos[b].second, '-');
    std::vector<int> idx = ft.tri.vertex_indices();
    for (int i = 0; i < p; ++i) {
        std::string label = std::to_string(idx[i]);
        if (i == ft.hidden) label = "[" + label + "]";
        grid.text(pos[i].first - static_cast<int>(label.size()) / 2, pos[i].second, label);
    }
    return grid.str();
}

std::string render_coherent_graph_svg(const CoherentGraph& g) {
    const int n = static_cast<int>(g.weights.size());
    const double size = 420, cx = size / 2, cy = size / 2, r = size / 2 - 60;
    auto pts = circle_layout(n, cx, cy, r);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    for (int i = 0; i < n; ++i) {
        Point a = pts[i], b = pts[(i + 1) % n];
        if (n == 1) b = a;
        svg_line(os, a, b, "black", 1.4);
        Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        // Push edge labels outward from the center.
        double dx = mid.x - cx, dy = mid.y - cy, len = std::max(1.0, std::hypot(dx, dy));
        svg_label(os, {mid.x + 16 * dx / len, mid.y + 16 * dy / len + 4},
                  "y" + std::to_string(i + 1) + "=" + std::to_string(g.labels[i]), "#555555");
    }
    for (int i = 0; i < n; ++i) {
        os << "  <circle cx=\"" << fmt(pts[i].x) << "\" cy=\"" << fmt(pts[i].y)
           << "\" r=\"15\" fill=\"white\" stroke=\"#1f77b4\" stroke-width=\"1.6\"/>\n";
        svg_label(os, {pts[i].x, pts[i].y + 4}, std::to_string(g.weights[i]), "#1f77b4");
        svg_label(os, {pts[i].x, pts[i].y - 22}, "x" + std::to_string(i + 1), "black");
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_coherent_graph_ascii(const CoherentGraph& g) {
    const int n = static_cast<int>(g.weights.size());
    std::ostringstream os;
    // Cycle unrolled as a strip; the closing edge wraps on the same line.
    for (int i = 0; i < n; ++i)
        os << "(x" << i + 1 << "=" << g.weights[i] << ") --y" << i + 1 << "=" << g.labels[i]
           << (i + 1 < n ? "-- " : "-- (x1)");
    os << "\n";
    return os.str();
}

} // namespace wormhole
