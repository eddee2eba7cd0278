// SPDX-License-Identifier: Apache-2.0
#include "hoi/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hoi {

namespace {

double intersection_area(const Box& a, const Box& b) {
    const double iw = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    const double ih = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (iw <= 0.0 || ih <= 0.0) return 0.0;
    return iw * ih;
}

void require_valid(const Box& b, const char* which) {
    if (!b.valid()) throw std::invalid_argument(std::string(which) + " box has inverted coordinates");
    if (!std::isfinite(b.x_min) || !std::isfinite(b.y_min) || !std::isfinite(b.x_max) ||
        !std::isfinite(b.y_max)) {
        throw std::invalid_argument(std::string(which) + " box has non-finite coordinates");
    }
}

}  // namespace

double iou(const Box& a, const Box& b) {
    require_valid(a, "first");
    require_valid(b, "second");
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    if (uni <= 0.0) return 0.0;  // both degenerate
    return inter / uni;
}

double giou(const Box& a, const Box& b) {
    require_valid(a, "first");
    require_valid(b, "second");
    if (a.degenerate() && b.degenerate()) {
        throw std::domain_error("giou undefined for two degenerate boxes");
    }
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    const double enc = enclosing_box(a, b).area();
    return inter / uni - (enc - uni) / enc;
}

Box enclosing_box(const Box& a, const Box& b) {
    return {std::min(a.x_min, b.x_min), std::min(a.y_min, b.y_min), std::max(a.x_max, b.x_max),
            std::max(a.y_max, b.y_max)};
}

Box union_box(const BoxPair& p) {
    require_valid(p.human, "human");
    require_valid(p.object, "object");
    return enclosing_box(p.human, p.object);
}

double l1_box_cost(const CenterBox& pred, const CenterBox& gt) {
    return std::abs(pred.cx - gt.cx) + std::abs(pred.cy - gt.cy) + std::abs(pred.w - gt.w) +
           std::abs(pred.h - gt.h);
}

CenterBox to_center_form(const Box& b, double image_w, double image_h) {
    require_valid(b, "input");
    if (image_w <= 0.0 || image_h <= 0.0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    return {(b.x_min + b.x_max) * 0.5 / image_w, (b.y_min + b.y_max) * 0.5 / image_h,
            (b.x_max - b.x_min) / image_w, (b.y_max - b.y_min) / image_h};
}

Box to_corner_form(const CenterBox& c, double image_w, double image_h) {
    if (image_w <= 0.0 || image_h <= 0.0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    return {(c.cx - c.w * 0.5) * image_w, (c.cy - c.h * 0.5) * image_h, (c.cx + c.w * 0.5) * image_w,
            (c.cy + c.h * 0.5) * image_h};
}

}  // namespace hoi
