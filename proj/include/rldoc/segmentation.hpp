#ifndef RLDOC_SEGMENTATION_HPP
#define RLDOC_SEGMENTATION_HPP

#include <optional>
#include <vector>

#include "rldoc/features.hpp"
#include "rldoc/rle.hpp"

namespace rldoc {

enum class SegmentKind { Line, Word, Character, Block };

// Rectangular region with 1-based inclusive pixel bounds.
struct Segment {
    SegmentKind kind = SegmentKind::Line;
    int row_start = 0;
    int row_end = 0;
    int col_start = 0;
    int col_end = 0;
    std::optional<RunMatrix> payload;

    int height() const { return row_end - row_start + 1; }
    int width() const { return col_end - col_start + 1; }
};

const char* segment_kind_name(SegmentKind kind);

// Maximal groups of consecutive rows with vpp > blank_threshold, full width,
// payload attached. Blank page gives an empty result.
std::vector<Segment> segment_lines(const RunMatrix& m, long long blank_threshold = 0);

// hpp restricted to rows [row_start, row_end] (1-based inclusive).
ProfileCurve column_occupancy(const RunMatrix& m, int row_start, int row_end);

struct WordsAndChars {
    std::vector<Segment> words;
    std::vector<Segment> characters;
};

// Zero-occupancy column gaps inside the ink extent split characters when
// narrower than word_space_threshold and words otherwise.
WordsAndChars segment_words_chars(const RunMatrix& m, const Segment& line,
                                  int word_space_threshold);

// Default threshold: 2 x median width of the line's nonzero blank gaps
// (at least 1; falls back to 1 when the line has no interior gaps).
int auto_word_space_threshold(const RunMatrix& m, const Segment& line);

} // namespace rldoc

#endif
