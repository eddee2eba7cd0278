// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace hoi {

/// Axis-aligned box, corner form. Coordinates live in a shared image frame
/// (pixels or normalized); degenerate boxes (zero area) are allowed.
struct Box {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    bool valid() const { return x_min <= x_max && y_min <= y_max; }
    bool degenerate() const { return area() == 0.0; }

    bool operator==(const Box&) const = default;
};

/// Center form, normalized to [0,1] by image width/height.
struct CenterBox {
    double cx = 0.0;
    double cy = 0.0;
    double w = 0.0;
    double h = 0.0;

    bool operator==(const CenterBox&) const = default;
};

/// A human-object pairing with the object's category id.
struct BoxPair {
    Box human;
    Box object;
    int object_category = -1;
};

/// Intersection over union in [0,1]. Two degenerate boxes give 0 (avoids 0/0).
double iou(const Box& a, const Box& b);

/// Generalized IoU in [-1,1]: iou - (area(enclosing) - area(union)) / area(enclosing).
/// Throws std::domain_error when both boxes are degenerate (enclosing area may be 0).
double giou(const Box& a, const Box& b);

/// Smallest axis-aligned box containing both a and b.
Box enclosing_box(const Box& a, const Box& b);

/// Smallest axis-aligned box containing both members of the pair.
Box union_box(const BoxPair& p);

/// Sum of absolute coordinate differences in normalized center form.
double l1_box_cost(const CenterBox& pred, const CenterBox& gt);

/// Corner -> normalized center form. Throws std::invalid_argument on
/// non-positive image dimensions. Boxes are not clamped to the frame.
CenterBox to_center_form(const Box& b, double image_w, double image_h);

/// Normalized center -> corner form. Throws std::invalid_argument on
/// non-positive image dimensions.
Box to_corner_form(const CenterBox& c, double image_w, double image_h);

}  // namespace hoi
