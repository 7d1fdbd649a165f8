#ifndef RLDOC_FONTSIZE_HPP
#define RLDOC_FONTSIZE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rldoc/segmentation.hpp"

namespace rldoc {

struct LineFeature {
    int line_height = 0;
    std::optional<int> ascender_height; // carried for the data model, unused by fit

    bool operator==(const LineFeature&) const = default;
};

// font_size ~= slope * line_height + intercept, least squares.
struct FontSizeModel {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> known_sizes; // sorted, distinct
    int training_count = 0;
};

using FontSample = std::pair<LineFeature, double>;

// Requires at least two samples with distinct line heights.
FontSizeModel fit(const std::vector<FontSample>& samples);

struct FontDetection {
    double predicted = 0.0; // continuous regression value
    double detected = 0.0;  // nearest trained size, ties to the smaller
};

FontDetection detect(const FontSizeModel& model, const LineFeature& feature);

// One feature per text line found by segment_lines with threshold 0.
std::vector<LineFeature> extract_line_features(const RunMatrix& m);

} // namespace rldoc

#endif
