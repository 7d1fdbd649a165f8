#include <doctest.h>

#include <cmath>
#include <random>

#include "rldoc/fontsize.hpp"
#include "table1.hpp"

using namespace rldoc;
using namespace rldoc_tests;

namespace {

FontSample sample(int height, double size) {
    return {LineFeature{height, std::nullopt}, size};
}

} // namespace

TEST_CASE("exact collinear fit") {
    FontSizeModel model = fit({sample(10, 8), sample(20, 16), sample(30, 24)});
    CHECK(model.slope == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(model.intercept == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(model.known_sizes == std::vector<double>{8, 16, 24});
    CHECK(model.training_count == 3);
}

TEST_CASE("degenerate fits are rejected") {
    CHECK_THROWS_AS(fit({sample(10, 8)}), DegenerateFitError);
    CHECK_THROWS_AS(fit({sample(10, 8), sample(10, 12), sample(10, 16)}), DegenerateFitError);
}

TEST_CASE("detection snaps to the nearest trained size, ties downward") {
    FontSizeModel model;
    model.slope = 0.8;
    model.intercept = 0.0;
    model.known_sizes = {8, 16, 24};

    FontDetection d = detect(model, LineFeature{25, std::nullopt});
    CHECK(d.predicted == doctest::Approx(20.0));
    CHECK(d.detected == 16.0); // tie between 16 and 24 breaks to the smaller

    d = detect(model, LineFeature{30, std::nullopt});
    CHECK(d.predicted == doctest::Approx(24.0));
    CHECK(d.detected == 24.0);

    d = detect(model, LineFeature{21, std::nullopt});
    CHECK(d.predicted == doctest::Approx(16.8));
    CHECK(d.detected == 16.0);
}

TEST_CASE("trained pairs detect as themselves on collinear data") {
    std::vector<FontSample> samples = {sample(12, 9), sample(16, 12), sample(24, 18),
                                       sample(32, 24)};
    FontSizeModel model = fit(samples);
    for (const auto& [feature, size] : samples)
        CHECK(detect(model, feature).detected == size);
}

TEST_CASE("fit matches the closed-form normal equations") {
    std::mt19937 rng(246810);
    for (int trial = 0; trial < 50; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 40)(rng);
        std::vector<FontSample> samples;
        double sh = 0, ss = 0, shh = 0, shs = 0;
        bool distinct = false;
        for (int i = 0; i < n; ++i) {
            int h = std::uniform_int_distribution<int>(5, 60)(rng);
            double s = std::uniform_real_distribution<double>(4.0, 40.0)(rng);
            samples.push_back(sample(h, s));
            if (h != samples[0].first.line_height)
                distinct = true;
            sh += h;
            ss += s;
            shh += double(h) * h;
            shs += h * s;
        }
        if (!distinct) {
            CHECK_THROWS_AS(fit(samples), DegenerateFitError);
            continue;
        }
        double slope = (n * shs - sh * ss) / (n * shh - sh * sh);
        double intercept = (ss - slope * sh) / n;
        FontSizeModel model = fit(samples);
        CHECK(model.slope == doctest::Approx(slope).epsilon(1e-9));
        CHECK(model.intercept == doctest::Approx(intercept).epsilon(1e-9));
    }
}

TEST_CASE("noisy synthetic data recovers the slope") {
    std::mt19937 rng(135791);
    std::vector<FontSample> samples;
    for (int i = 0; i < 200; ++i) {
        int h = std::uniform_int_distribution<int>(8, 60)(rng);
        double noise = std::uniform_real_distribution<double>(-0.2, 0.2)(rng);
        samples.push_back(sample(h, 0.75 * h + 1 + noise));
    }
    FontSizeModel model = fit(samples);
    CHECK(std::abs(model.slope - 0.75) <= 0.05);
}

TEST_CASE("disjoint height bands detect with full accuracy") {
    // sizes mapped to non-overlapping height ranges
    std::mt19937 rng(8642);
    std::vector<std::pair<double, std::pair<int, int>>> bands = {
        {8, {9, 11}}, {12, {14, 17}}, {16, {19, 23}}, {24, {29, 34}}};
    std::vector<FontSample> train;
    for (const auto& [size, range] : bands)
        for (int i = 0; i < 25; ++i)
            train.push_back(
                sample(std::uniform_int_distribution<int>(range.first, range.second)(rng), size));
    FontSizeModel model = fit(train);
    int correct = 0, total = 0;
    for (const auto& [size, range] : bands)
        for (int h = range.first; h <= range.second; ++h) {
            ++total;
            if (detect(model, LineFeature{h, std::nullopt}).detected == size)
                ++correct;
        }
    CHECK(correct == total);
}

TEST_CASE("line features from Table I and synthetic pages") {
    auto features = extract_line_features(table1_matrix());
    REQUIRE(features.size() == 1);
    CHECK(features[0].line_height == 11);
    CHECK_FALSE(features[0].ascender_height.has_value());

    CHECK(extract_line_features(canonicalize_padded({{5}, {5}}, 5)).empty());

    std::vector<std::vector<int>> raw;
    for (int r = 0; r < 8; ++r)
        raw.push_back((r < 3 || (r >= 5 && r < 8)) ? std::vector<int>{1, 2, 3} : std::vector<int>{6});
    auto two = extract_line_features(canonicalize_padded(raw, 6));
    REQUIRE(two.size() == 2);
    CHECK(two[0].line_height == 3);
    CHECK(two[1].line_height == 3);
}
