#include "rldoc/blocks.hpp"

#include <algorithm>

namespace rldoc {

namespace {

RunRow clip_row(const RunRow& row, int col_start, int col_end) {
    int window_width = col_end - col_start + 1;
    RunRow out;
    out.width = window_width;
    long long pos = 1; // 1-based start column of the current run
    bool first = true;
    for (std::size_t i = 0; i < row.runs.size(); ++i) {
        long long run_start = pos;
        long long run_end = pos + row.runs[i] - 1;
        pos += row.runs[i];
        long long lo = std::max<long long>(run_start, col_start);
        long long hi = std::min<long long>(run_end, col_end);
        if (lo > hi)
            continue;
        if (first && i % 2 == 1)
            out.runs.push_back(0); // window starts inside a black run
        first = false;
        out.runs.push_back(static_cast<int>(hi - lo + 1));
        if (run_end >= col_end)
            break;
    }
    return out;
}

} // namespace

Segment extract_block(const RunMatrix& m, int row_start, int row_end, int col_start, int col_end) {
    validate_matrix(m);
    if (row_start < 1 || row_end > m.height || row_start > row_end || col_start < 1 ||
        col_end > m.width || col_start > col_end)
        throw InvalidArgumentError("extract_block: rectangle out of bounds");

    RunMatrix payload;
    payload.width = col_end - col_start + 1;
    payload.height = row_end - row_start + 1;
    payload.rows.reserve(payload.height);
    for (int r = row_start; r <= row_end; ++r)
        payload.rows.push_back(clip_row(m.rows[r - 1], col_start, col_end));

    Segment seg;
    seg.kind = SegmentKind::Block;
    seg.row_start = row_start;
    seg.row_end = row_end;
    seg.col_start = col_start;
    seg.col_end = col_end;
    seg.payload = std::move(payload);
    return seg;
}

BlockCharacterization characterize(const RunMatrix& block, const RunMatrix& whole) {
    validate_matrix(block);
    validate_matrix(whole);
    long long area = static_cast<long long>(block.width) * block.height;
    if (area == 0)
        throw InvalidArgumentError("characterize: zero-area block");

    BlockCharacterization c;
    c.density = static_cast<double>(black_pixel_count(block)) / static_cast<double>(area);
    EntropyReport block_rep = entropy_horizontal(block);
    c.ceq_total = block_rep.ceq_total;
    c.seq_total = block_rep.seq_total;

    long long whole_area = static_cast<long long>(whole.width) * whole.height;
    double whole_density = static_cast<double>(black_pixel_count(whole)) / static_cast<double>(whole_area);
    EntropyReport whole_rep = entropy_horizontal(whole);
    if (whole_density > 0.0)
        c.relative_density = c.density / whole_density;
    if (whole_rep.ceq_total > 0.0)
        c.relative_ceq = c.ceq_total / whole_rep.ceq_total;
    if (whole_rep.seq_total > 0.0)
        c.relative_seq = c.seq_total / whole_rep.seq_total;
    return c;
}

} // namespace rldoc
