#pragma once

#include <optional>
#include <string>

#include "orthocevia/triangle.hpp"

namespace orthocevia {

// Minimal deterministic SVG 1.1 writer. Geometry goes in in world
// coordinates; the viewBox is fitted to the bounding box plus a 10% margin
// and the y axis is flipped to screen orientation at emit time.
class SvgCanvas {
public:
    void segment(Point p, Point q, const std::string& cls);
    void polygon(std::span<const Point> pts, const std::string& cls);
    void circle(Point center, double radius, const std::string& cls);
    void dot(Point p, const std::string& label);

    // Well-formed standalone SVG document, `size_px` wide.
    std::string render(int size_px) const;

private:
    struct Element {
        enum class Kind { Segment, Polygon, Circle, Dot } kind;
        std::vector<Point> pts;
        double radius = 0.0;
        std::string cls;
        std::string label;
    };
    void grow(Point p, double pad = 0.0);

    std::vector<Element> elements_;
    double min_x_ = 0, min_y_ = 0, max_x_ = 0, max_y_ = 0;
    bool have_bounds_ = false;
};

enum class FigureId {
    Fig3Contact,
    Fig5Orthology,
    Fig7SixPoint,
    Fig9Terquem,
    Fig10Excircle,
};

// Throws GeomError(UnknownSuite-style) via parse layer; this function itself
// expects a valid id.
std::optional<FigureId> figure_id_from_string(const std::string& name);

// Renders one of the paper-configuration sketches. Figures that need a
// distinguished point use p1 (default: incenter).
std::string render_figure(FigureId id, const Triangle& t, std::optional<Point> p1,
                          int size_px, const Tolerance& tol = {});

} // namespace orthocevia
