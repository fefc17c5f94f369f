#include "orthocevia/triangle.hpp"

#include <algorithm>

namespace orthocevia {

Triangle::Triangle(Point a_vertex, Point b_vertex, Point c_vertex,
                   double degeneracy_threshold)
    : v_{a_vertex, b_vertex, c_vertex} {
    if (!finite(a_vertex) || !finite(b_vertex) || !finite(c_vertex))
        raise(ErrorKind::DegenerateInput, "non-finite vertex coordinates");
    len_[0] = dist(v_[1], v_[2]);
    len_[1] = dist(v_[2], v_[0]);
    len_[2] = dist(v_[0], v_[1]);
    s_ = (len_[0] + len_[1] + len_[2]) / 2.0;
    signed_area_ = signed_area_doubled(v_[0], v_[1], v_[2]) / 2.0;
    const double max_side = std::max({len_[0], len_[1], len_[2]});
    scale_sq_ = max_side * max_side;
    const double ratio = scale_sq_ > 0 ? 2.0 * area() / scale_sq_ : 0.0;
    if (ratio < degeneracy_threshold)
        raise(ErrorKind::DegenerateTriangle,
              "area ratio " + std::to_string(ratio) + " below threshold "
                  + std::to_string(degeneracy_threshold));
}

Line Triangle::side_line(int i) const {
    const auto [p, q] = side_endpoints(i);
    return line_through(p, q);
}

std::array<Point, 2> Triangle::side_endpoints(int i) const {
    return {v_[(i + 1) % 3], v_[(i + 2) % 3]};
}

} // namespace orthocevia
