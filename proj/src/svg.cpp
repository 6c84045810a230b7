#include "dentedhex/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace dentedhex {

namespace {

constexpr double kSide = 40.0;
constexpr double kMargin = 20.0;
const double kRowHeight = kSide * std::sqrt(3.0) / 2.0;

struct Point {
    double x;
    double y;
};

const char* fill_for(LozengeKind kind) {
    switch (kind) {
        case LozengeKind::LeftTilted:
            return "#C04F17";
        case LozengeKind::RightTilted:
            return "#FBB982";
        case LozengeKind::Vertical:
            break;
    }
    return "#DBB88A";
}

class Geometry {
public:
    explicit Geometry(const Region& r) : r_(r) {}

    std::array<Point, 3> corners(const Cell& c) const {
        const double top = kMargin + (c.row - 1) * kRowHeight;
        const double bottom = top + kRowHeight;
        const double left = kMargin + (r_.h() - c.row) * kSide / 2.0;
        if (c.kind == CellKind::Up) {
            return {Point{left + (c.col - 1) * kSide, bottom}, Point{left + (c.col - 0.5) * kSide, top},
                    Point{left + c.col * kSide, bottom}};
        }
        return {Point{left + (c.col - 0.5) * kSide, top}, Point{left + (c.col + 0.5) * kSide, top},
                Point{left + c.col * kSide, bottom}};
    }

    double width() const { return (r_.x() + r_.h()) * kSide + 2 * kMargin; }
    double height() const { return r_.h() * kRowHeight + 2 * kMargin; }

private:
    const Region& r_;
};

std::string points_attr(const std::vector<Point>& pts) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) os << ' ';
        os << pts[i].x << ',' << pts[i].y;
    }
    return os.str();
}

bool same_point(const Point& a, const Point& b) { return std::abs(a.x - b.x) < 1e-6 && std::abs(a.y - b.y) < 1e-6; }

// Outline of two edge-sharing triangles, ordered around the centroid.
std::vector<Point> lozenge_outline(const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
    std::vector<Point> pts(a.begin(), a.end());
    for (const Point& p : b) {
        if (std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return same_point(p, q); })) pts.push_back(p);
    }
    Point centre{0, 0};
    for (const Point& p : pts) {
        centre.x += p.x / static_cast<double>(pts.size());
        centre.y += p.y / static_cast<double>(pts.size());
    }
    std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
        return std::atan2(p.y - centre.y, p.x - centre.x) < std::atan2(q.y - centre.y, q.x - centre.x);
    });
    return pts;
}

}  // namespace

std::string render_svg(const Region& r, const std::optional<Tiling>& tiling) {
    const Geometry g(r);
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << g.width() << "\" height=\""
       << g.height() << "\" viewBox=\"0 0 " << g.width() << ' ' << g.height() << "\">\n";
    os << "<title>" << r.to_string() << "</title>\n";

    os << "<g stroke=\"#BBBBBB\" stroke-width=\"0.5\" fill=\"none\">\n";
    for (const Cell& c : r.cells()) {
        const auto pts = g.corners(c);
        os << "<polygon points=\"" << points_attr({pts.begin(), pts.end()}) << "\"/>\n";
    }
    os << "</g>\n";

    if (tiling) {
        os << "<g stroke=\"#333333\" stroke-width=\"1\">\n";
        for (const Lozenge& l : tiling->lozenges) {
            os << "<polygon fill=\"" << fill_for(l.kind) << "\" points=\""
               << points_attr(lozenge_outline(g.corners(l.up), g.corners(l.down))) << "\"/>\n";
        }
        os << "</g>\n";
        os << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
        for (const Lozenge& l : tiling->lozenges) {
            if (l.kind != LozengeKind::Vertical) continue;
            const auto up = g.corners(l.up);
            os << "<text x=\"" << up[1].x << "\" y=\"" << up[0].y << "\">" << lozenge_label(r, l) << "</text>\n";
        }
        os << "</g>\n";
    }

    os << "<g fill=\"#000000\">\n";
    for (std::int32_t row = 1; row <= r.h(); ++row) {
        for (std::int32_t col : {1, r.x() + row}) {
            const Cell c{CellKind::Up, row, col};
            if (!r.is_dent(c)) continue;
            const auto pts = g.corners(c);
            os << "<polygon points=\"" << points_attr({pts.begin(), pts.end()}) << "\"/>\n";
        }
    }
    os << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace dentedhex
