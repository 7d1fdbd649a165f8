#include "rldoc/segmentation.hpp"

#include <algorithm>

namespace rldoc {

const char* segment_kind_name(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::Line: return "line";
    case SegmentKind::Word: return "word";
    case SegmentKind::Character: return "character";
    case SegmentKind::Block: return "block";
    }
    return "?";
}

namespace {

RunMatrix row_slice(const RunMatrix& m, int row_start, int row_end) {
    RunMatrix out;
    out.width = m.width;
    out.height = row_end - row_start + 1;
    out.rows.assign(m.rows.begin() + (row_start - 1), m.rows.begin() + row_end);
    return out;
}

} // namespace

std::vector<Segment> segment_lines(const RunMatrix& m, long long blank_threshold) {
    if (blank_threshold < 0)
        throw InvalidArgumentError("segment_lines: blank_threshold must be >= 0");
    ProfileCurve profile = vpp(m);
    std::vector<Segment> lines;
    int start = 0; // 1-based start of the current ink band, 0 = outside
    for (int r = 1; r <= m.height + 1; ++r) {
        bool ink = r <= m.height && profile.values[r - 1] > blank_threshold;
        if (ink && start == 0) {
            start = r;
        } else if (!ink && start != 0) {
            Segment seg;
            seg.kind = SegmentKind::Line;
            seg.row_start = start;
            seg.row_end = r - 1;
            seg.col_start = 1;
            seg.col_end = m.width;
            seg.payload = row_slice(m, start, r - 1);
            lines.push_back(std::move(seg));
            start = 0;
        }
    }
    return lines;
}

ProfileCurve column_occupancy(const RunMatrix& m, int row_start, int row_end) {
    validate_matrix(m);
    if (row_start < 1 || row_end > m.height || row_start > row_end)
        throw InvalidArgumentError("column_occupancy: row range out of bounds");
    return hpp(row_slice(m, row_start, row_end));
}

WordsAndChars segment_words_chars(const RunMatrix& m, const Segment& line,
                                  int word_space_threshold) {
    if (word_space_threshold < 1)
        throw InvalidArgumentError("segment_words_chars: word_space_threshold must be >= 1");
    ProfileCurve occ = column_occupancy(m, line.row_start, line.row_end);

    // maximal nonzero column spans become characters
    struct Span {
        int start, end;
    };
    std::vector<Span> spans;
    int start = 0;
    for (int c = 1; c <= m.width + 1; ++c) {
        bool ink = c <= m.width && occ.values[c - 1] > 0;
        if (ink && start == 0) {
            start = c;
        } else if (!ink && start != 0) {
            spans.push_back({start, c - 1});
            start = 0;
        }
    }

    WordsAndChars out;
    if (spans.empty())
        return out;

    auto make_seg = [&line](SegmentKind kind, int c0, int c1) {
        Segment s;
        s.kind = kind;
        s.row_start = line.row_start;
        s.row_end = line.row_end;
        s.col_start = c0;
        s.col_end = c1;
        return s;
    };

    int word_first = 0;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        out.characters.push_back(make_seg(SegmentKind::Character, spans[i].start, spans[i].end));
        if (i == 0) {
            word_first = static_cast<int>(i);
            continue;
        }
        int gap = spans[i].start - spans[i - 1].end - 1;
        if (gap >= word_space_threshold) {
            out.words.push_back(
                make_seg(SegmentKind::Word, spans[word_first].start, spans[i - 1].end));
            word_first = static_cast<int>(i);
        }
    }
    out.words.push_back(make_seg(SegmentKind::Word, spans[word_first].start, spans.back().end));
    return out;
}

int auto_word_space_threshold(const RunMatrix& m, const Segment& line) {
    ProfileCurve occ = column_occupancy(m, line.row_start, line.row_end);
    int first = 0, last = 0;
    for (int c = 1; c <= m.width; ++c) {
        if (occ.values[c - 1] > 0) {
            if (first == 0)
                first = c;
            last = c;
        }
    }
    if (first == 0)
        return 1;
    std::vector<int> gaps;
    int run = 0;
    for (int c = first; c <= last; ++c) {
        if (occ.values[c - 1] == 0) {
            ++run;
        } else if (run > 0) {
            gaps.push_back(run);
            run = 0;
        }
    }
    if (gaps.empty())
        return 1;
    std::sort(gaps.begin(), gaps.end());
    int median = gaps[(gaps.size() - 1) / 2];
    return std::max(1, 2 * median);
}

} // namespace rldoc
