// Pixel-domain brute-force reference implementations. These deliberately
// work on BinaryImage rasters only, independent of the run-domain code they
// are used to check.
#ifndef RLDOC_TESTS_ORACLE_HPP
#define RLDOC_TESTS_ORACLE_HPP

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "rldoc/rle.hpp"

namespace rldoc_tests::oracle {

using rldoc::BinaryImage;

inline long long black_count(const BinaryImage& img) {
    long long n = 0;
    for (std::uint8_t p : img.pixels)
        n += p;
    return n;
}

inline std::vector<long long> vpp(const BinaryImage& img) {
    std::vector<long long> out(img.height, 0);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            out[r] += img.at(r, c);
    return out;
}

inline std::vector<long long> hpp(const BinaryImage& img) {
    std::vector<long long> out(img.width, 0);
    for (int c = 0; c < img.width; ++c)
        for (int r = 0; r < img.height; ++r)
            out[c] += img.at(r, c);
    return out;
}

inline std::vector<std::uint8_t> column(const BinaryImage& img, int c) {
    std::vector<std::uint8_t> out(img.height);
    for (int r = 0; r < img.height; ++r)
        out[r] = img.at(r, c);
    return out;
}

// run lengths of one scanline, per color (0 or 1); the implicit leading
// white run of a black-first line is not a run
inline void tally_runs(const std::vector<std::uint8_t>& bits, std::map<int, long long>& white,
                       std::map<int, long long>& black) {
    int i = 0;
    int n = static_cast<int>(bits.size());
    while (i < n) {
        int j = i;
        while (j < n && bits[j] == bits[i])
            ++j;
        if (bits[i])
            ++black[j - i];
        else
            ++white[j - i];
        i = j;
    }
}

struct Transitions {
    std::vector<int> pos; // 1-based pixel index where a 0->1 change lands
    std::vector<int> neg;
};

inline Transitions transitions(const std::vector<std::uint8_t>& bits) {
    Transitions t;
    std::uint8_t prev = 0; // virtual white before the line
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != prev) {
            if (bits[i])
                t.pos.push_back(static_cast<int>(i) + 1);
            else
                t.neg.push_back(static_cast<int>(i) + 1);
            prev = bits[i];
        }
    }
    return t;
}

inline double entropy_term(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

inline double ceq(const std::vector<std::uint8_t>& bits) {
    Transitions t = transitions(bits);
    double n = static_cast<double>(bits.size());
    return entropy_term(t.pos.size() / n) + entropy_term(t.neg.size() / n);
}

inline double seq(const std::vector<std::uint8_t>& bits) {
    Transitions t = transitions(bits);
    double n = static_cast<double>(bits.size());
    double total = 0.0;
    for (int x : t.pos)
        total += entropy_term(x / n) + entropy_term(1.0 - x / n);
    for (int x : t.neg)
        total += entropy_term(x / n) + entropy_term(1.0 - x / n);
    return total;
}

struct LineBand {
    int row_start, row_end; // 1-based inclusive
};

inline std::vector<LineBand> segment_lines(const BinaryImage& img, long long blank_threshold) {
    std::vector<long long> profile = vpp(img);
    std::vector<LineBand> bands;
    int start = 0;
    for (int r = 1; r <= img.height + 1; ++r) {
        bool ink = r <= img.height && profile[r - 1] > blank_threshold;
        if (ink && start == 0)
            start = r;
        else if (!ink && start != 0) {
            bands.push_back({start, r - 1});
            start = 0;
        }
    }
    return bands;
}

struct ColSpan {
    int col_start, col_end; // 1-based inclusive
};

struct WordsChars {
    std::vector<ColSpan> words;
    std::vector<ColSpan> characters;
};

inline WordsChars segment_words_chars(const BinaryImage& img, const LineBand& band, int threshold) {
    std::vector<long long> occ(img.width, 0);
    for (int c = 0; c < img.width; ++c)
        for (int r = band.row_start - 1; r < band.row_end; ++r)
            occ[c] += img.at(r, c);

    WordsChars out;
    int start = 0;
    for (int c = 1; c <= img.width + 1; ++c) {
        bool ink = c <= img.width && occ[c - 1] > 0;
        if (ink && start == 0)
            start = c;
        else if (!ink && start != 0) {
            out.characters.push_back({start, c - 1});
            start = 0;
        }
    }
    if (out.characters.empty())
        return out;
    int word_start = out.characters[0].col_start;
    for (std::size_t i = 1; i < out.characters.size(); ++i) {
        int gap = out.characters[i].col_start - out.characters[i - 1].col_end - 1;
        if (gap >= threshold) {
            out.words.push_back({word_start, out.characters[i - 1].col_end});
            word_start = out.characters[i].col_start;
        }
    }
    out.words.push_back({word_start, out.characters.back().col_end});
    return out;
}

inline BinaryImage crop(const BinaryImage& img, int r1, int r2, int c1, int c2) {
    BinaryImage out;
    out.width = c2 - c1 + 1;
    out.height = r2 - r1 + 1;
    for (int r = r1 - 1; r < r2; ++r)
        for (int c = c1 - 1; c < c2; ++c)
            out.pixels.push_back(img.at(r, c));
    return out;
}

// Random test images: a mix of fully random noise and blobby text-like
// layouts so both dense and sparse run structures get exercised.
inline BinaryImage random_image(std::mt19937& rng, int max_w = 64, int max_h = 64) {
    std::uniform_int_distribution<int> dim(1, max_w);
    BinaryImage img;
    img.width = dim(rng);
    img.height = std::uniform_int_distribution<int>(1, max_h)(rng);
    img.pixels.resize(std::size_t(img.width) * img.height, 0);

    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: { // iid noise, random density
        double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::bernoulli_distribution ink(density);
        for (auto& p : img.pixels)
            p = ink(rng);
        break;
    }
    case 1: { // random rectangles
        int count = std::uniform_int_distribution<int>(0, 6)(rng);
        for (int i = 0; i < count; ++i) {
            int r1 = std::uniform_int_distribution<int>(0, img.height - 1)(rng);
            int r2 = std::uniform_int_distribution<int>(r1, img.height - 1)(rng);
            int c1 = std::uniform_int_distribution<int>(0, img.width - 1)(rng);
            int c2 = std::uniform_int_distribution<int>(c1, img.width - 1)(rng);
            for (int r = r1; r <= r2; ++r)
                for (int c = c1; c <= c2; ++c)
                    img.pixels[std::size_t(r) * img.width + c] = 1;
        }
        break;
    }
    case 2: { // horizontal stripes (text-line-like)
        int r = 0;
        while (r < img.height) {
            int band = std::uniform_int_distribution<int>(1, 4)(rng);
            bool ink = std::bernoulli_distribution(0.5)(rng);
            for (int i = 0; i < band && r < img.height; ++i, ++r)
                if (ink)
                    for (int c = 0; c < img.width; ++c)
                        img.pixels[std::size_t(r) * img.width + c] =
                            std::bernoulli_distribution(0.7)(rng);
        }
        break;
    }
    default:
        break; // all white
    }
    return img;
}

} // namespace rldoc_tests::oracle

#endif
