#include "orthocevia/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "orthocevia/constructions.hpp"
#include "orthocevia/relations.hpp"

namespace orthocevia {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

void SvgCanvas::grow(Point p, double pad) {
    if (!have_bounds_) {
        min_x_ = p.x - pad; max_x_ = p.x + pad;
        min_y_ = p.y - pad; max_y_ = p.y + pad;
        have_bounds_ = true;
        return;
    }
    min_x_ = std::min(min_x_, p.x - pad);
    max_x_ = std::max(max_x_, p.x + pad);
    min_y_ = std::min(min_y_, p.y - pad);
    max_y_ = std::max(max_y_, p.y + pad);
}

void SvgCanvas::segment(Point p, Point q, const std::string& cls) {
    grow(p); grow(q);
    elements_.push_back({Element::Kind::Segment, {p, q}, 0.0, cls, ""});
}

void SvgCanvas::polygon(std::span<const Point> pts, const std::string& cls) {
    Element e{Element::Kind::Polygon, {}, 0.0, cls, ""};
    for (Point p : pts) { grow(p); e.pts.push_back(p); }
    elements_.push_back(std::move(e));
}

void SvgCanvas::circle(Point center, double radius, const std::string& cls) {
    grow(center, radius);
    elements_.push_back({Element::Kind::Circle, {center}, radius, cls, ""});
}

void SvgCanvas::dot(Point p, const std::string& label) {
    grow(p);
    elements_.push_back({Element::Kind::Dot, {p}, 0.0, "dot", label});
}

std::string SvgCanvas::render(int size_px) const {
    const double span_x = std::max(max_x_ - min_x_, 1e-9);
    const double span_y = std::max(max_y_ - min_y_, 1e-9);
    const double margin = 0.1 * std::max(span_x, span_y);
    const double x0 = min_x_ - margin, y0 = min_y_ - margin;
    const double w = span_x + 2 * margin, h = span_y + 2 * margin;
    const double px_per_unit = size_px / w;
    const int height_px = int(h * px_per_unit + 0.5);

    // Flip y into screen orientation.
    const auto X = [&](double x) { return (x - x0) * px_per_unit; };
    const auto Y = [&](double y) { return (y0 + h - y) * px_per_unit; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
         + std::to_string(size_px) + "\" height=\"" + std::to_string(height_px)
         + "\" viewBox=\"0 0 " + std::to_string(size_px) + " "
         + std::to_string(height_px) + "\">\n";
    out += "  <style>\n"
           "    .triangle { fill: none; stroke: #202020; stroke-width: 1.6; }\n"
           "    .derived { fill: none; stroke: #1f6fb2; stroke-width: 1.2; }\n"
           "    .cevian { fill: none; stroke: #2e8b57; stroke-width: 1.0; }\n"
           "    .cevian2 { fill: none; stroke: #2e8b57; stroke-width: 1.0; stroke-dasharray: 5 3; }\n"
           "    .perp { fill: none; stroke: #a0522d; stroke-width: 1.0; stroke-dasharray: 3 3; }\n"
           "    .circle { fill: none; stroke: #b22222; stroke-width: 1.2; }\n"
           "    .dot { fill: #101010; }\n"
           "    text { font-family: sans-serif; font-size: 12px; fill: #101010; }\n"
           "  </style>\n";
    for (const Element& e : elements_) {
        switch (e.kind) {
            case Element::Kind::Segment:
                out += "  <line class=\"" + e.cls + "\" x1=\"" + num(X(e.pts[0].x))
                     + "\" y1=\"" + num(Y(e.pts[0].y)) + "\" x2=\"" + num(X(e.pts[1].x))
                     + "\" y2=\"" + num(Y(e.pts[1].y)) + "\"/>\n";
                break;
            case Element::Kind::Polygon: {
                out += "  <polygon class=\"" + e.cls + "\" points=\"";
                bool first = true;
                for (Point p : e.pts) {
                    if (!first) out += " ";
                    first = false;
                    out += num(X(p.x)) + "," + num(Y(p.y));
                }
                out += "\"/>\n";
                break;
            }
            case Element::Kind::Circle:
                out += "  <circle class=\"" + e.cls + "\" cx=\"" + num(X(e.pts[0].x))
                     + "\" cy=\"" + num(Y(e.pts[0].y)) + "\" r=\""
                     + num(e.radius * px_per_unit) + "\"/>\n";
                break;
            case Element::Kind::Dot:
                out += "  <circle class=\"dot\" cx=\"" + num(X(e.pts[0].x)) + "\" cy=\""
                     + num(Y(e.pts[0].y)) + "\" r=\"2.5\"/>\n";
                if (!e.label.empty())
                    out += "  <text x=\"" + num(X(e.pts[0].x) + 5) + "\" y=\""
                         + num(Y(e.pts[0].y) - 5) + "\">" + e.label + "</text>\n";
                break;
        }
    }
    out += "</svg>\n";
    return out;
}

std::optional<FigureId> figure_id_from_string(const std::string& name) {
    if (name == "fig3_contact") return FigureId::Fig3Contact;
    if (name == "fig5_orthology") return FigureId::Fig5Orthology;
    if (name == "fig7_sixpoint") return FigureId::Fig7SixPoint;
    if (name == "fig9_terquem") return FigureId::Fig9Terquem;
    if (name == "fig10_excircle") return FigureId::Fig10Excircle;
    return std::nullopt;
}

namespace {

void draw_triangle(SvgCanvas& canvas, const Triangle& t) {
    const std::array<Point, 3> vs = {t.A(), t.B(), t.C()};
    canvas.polygon(vs, "triangle");
    canvas.dot(t.A(), "A");
    canvas.dot(t.B(), "B");
    canvas.dot(t.C(), "C");
}

void fig_contact(SvgCanvas& canvas, const Triangle& t, const Tolerance& tol) {
    draw_triangle(canvas, t);
    const Circle inc = incircle(t);
    canvas.circle(inc.center, inc.radius(), "circle");
    canvas.dot(inc.center, "I");
    const CevianFeet contact = contact_triangle(t);
    canvas.polygon(contact.points(), "derived");
    canvas.dot(contact.on_bc, "A'");
    canvas.dot(contact.on_ca, "B'");
    canvas.dot(contact.on_ab, "C'");
    (void)tol;
}

void fig_orthology(SvgCanvas& canvas, const Triangle& t, const Tolerance& tol) {
    draw_triangle(canvas, t);
    const Point ma = midpoint(t.B(), t.C());
    const Point mb = midpoint(t.C(), t.A());
    const Point mc = midpoint(t.A(), t.B());
    const Triangle medial(ma, mb, mc);
    canvas.polygon(std::array<Point, 3>{ma, mb, mc}, "derived");
    const OrthologyPair pair = orthology(t, medial, tol);
    for (int i = 0; i < 3; ++i) {
        if (pair.forward.center)
            canvas.segment(t.vertex(i),
                           foot_of_perpendicular(t.vertex(i), medial.side_line(i)), "perp");
        if (pair.backward.center)
            canvas.segment(medial.vertex(i),
                           foot_of_perpendicular(medial.vertex(i), t.side_line(i)), "perp");
    }
    if (pair.forward.center) canvas.dot(*pair.forward.center, "M");
    if (pair.backward.center) canvas.dot(*pair.backward.center, "M'");
}

void fig_sixpoint(SvgCanvas& canvas, const Triangle& t, Point p1, const Tolerance& tol) {
    draw_triangle(canvas, t);
    const Point p2 = isogonal_conjugate(t, p1, tol);
    const SixPointResult six = six_point_circle(t, p1, p2, tol);
    const CevianFeet f1 = pedal_triangle(t, p1, tol);
    const CevianFeet f2 = pedal_triangle(t, p2, tol);
    double mean = 0.0;
    for (double r : six.radii) mean += r;
    canvas.circle(six.center, mean / 6.0, "circle");
    canvas.dot(p1, "P1");
    canvas.dot(p2, "P2");
    canvas.dot(six.center, "P");
    const char* names1[] = {"A1", "B1", "C1"};
    const char* names2[] = {"A2", "B2", "C2"};
    for (int i = 0; i < 3; ++i) {
        canvas.segment(p1, f1.foot(i), "perp");
        canvas.segment(p2, f2.foot(i), "perp");
        canvas.dot(f1.foot(i), names1[i]);
        canvas.dot(f2.foot(i), names2[i]);
    }
}

void fig_terquem(SvgCanvas& canvas, const Triangle& t, Point p1, const Tolerance& tol) {
    draw_triangle(canvas, t);
    const CevianFeet feet = cevian_feet_through(t, p1, tol);
    const TerquemResult res = terquem(t, feet, tol);
    canvas.circle(res.circle.center, res.circle.radius(), "circle");
    const char* names1[] = {"A1", "B1", "C1"};
    const char* names2[] = {"A2", "B2", "C2"};
    for (int i = 0; i < 3; ++i) {
        canvas.segment(t.vertex(i), feet.foot(i), "cevian");
        canvas.segment(t.vertex(i), res.second_feet.foot(i), "cevian2");
        canvas.dot(feet.foot(i), names1[i]);
        canvas.dot(res.second_feet.foot(i), names2[i]);
    }
    canvas.dot(res.F1, "F1");
    canvas.dot(res.F2, "F2");
}

void fig_excircle(SvgCanvas& canvas, const Triangle& t, const Tolerance& tol) {
    draw_triangle(canvas, t);
    const Circle inc = incircle(t);
    const Circle exc = excircle(t, 0);
    canvas.circle(inc.center, inc.radius(), "circle");
    canvas.circle(exc.center, exc.radius(), "circle");
    canvas.dot(inc.center, "I");
    canvas.dot(exc.center, "Ia");
    canvas.dot(foot_of_perpendicular(inc.center, t.side_line(0)), "D");
    canvas.dot(foot_of_perpendicular(exc.center, t.side_line(0)), "Da");
    (void)tol;
}

} // namespace

std::string render_figure(FigureId id, const Triangle& t, std::optional<Point> p1,
                          int size_px, const Tolerance& tol) {
    SvgCanvas canvas;
    const Point p = p1.value_or(triangle_center(t, CenterKind::Incenter, tol));
    switch (id) {
        case FigureId::Fig3Contact: fig_contact(canvas, t, tol); break;
        case FigureId::Fig5Orthology: fig_orthology(canvas, t, tol); break;
        case FigureId::Fig7SixPoint: fig_sixpoint(canvas, t, p, tol); break;
        case FigureId::Fig9Terquem: fig_terquem(canvas, t, p, tol); break;
        case FigureId::Fig10Excircle: fig_excircle(canvas, t, tol); break;
    }
    return canvas.render(size_px);
}

} // namespace orthocevia
