#include "rldoc/fontsize.hpp"

#include <algorithm>
#include <cmath>

namespace rldoc {

FontSizeModel fit(const std::vector<FontSample>& samples) {
    if (samples.size() < 2)
        throw DegenerateFitError("fit: need at least two samples");
    double n = static_cast<double>(samples.size());
    double sum_h = 0, sum_s = 0, sum_hh = 0, sum_hs = 0;
    for (const auto& [feature, size] : samples) {
        if (feature.line_height < 1)
            throw InvalidArgumentError("fit: line_height must be >= 1");
        double h = feature.line_height;
        sum_h += h;
        sum_s += size;
        sum_hh += h * h;
        sum_hs += h * size;
    }
    double denom = n * sum_hh - sum_h * sum_h;
    if (denom == 0.0)
        throw DegenerateFitError("fit: all line heights equal");

    FontSizeModel model;
    model.slope = (n * sum_hs - sum_h * sum_s) / denom;
    model.intercept = (sum_s - model.slope * sum_h) / n;
    model.training_count = static_cast<int>(samples.size());
    for (const auto& [feature, size] : samples)
        model.known_sizes.push_back(size);
    std::sort(model.known_sizes.begin(), model.known_sizes.end());
    model.known_sizes.erase(std::unique(model.known_sizes.begin(), model.known_sizes.end()),
                            model.known_sizes.end());
    return model;
}

FontDetection detect(const FontSizeModel& model, const LineFeature& feature) {
    if (model.known_sizes.empty())
        throw InvalidArgumentError("detect: model has no known sizes");
    FontDetection d;
    d.predicted = model.slope * feature.line_height + model.intercept;
    d.detected = model.known_sizes.front();
    double best = std::abs(d.predicted - d.detected);
    for (double size : model.known_sizes) {
        double dist = std::abs(d.predicted - size);
        if (dist < best) { // strict: ties keep the smaller size
            best = dist;
            d.detected = size;
        }
    }
    return d;
}

std::vector<LineFeature> extract_line_features(const RunMatrix& m) {
    std::vector<LineFeature> features;
    for (const Segment& line : segment_lines(m))
        features.push_back(LineFeature{line.height(), std::nullopt});
    return features;
}

} // namespace rldoc
