#ifndef RLDOC_RLE_HPP
#define RLDOC_RLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rldoc/errors.hpp"

namespace rldoc {

// Pixel raster, row-major, 0 = white / 1 = black. Used by codecs and test
// oracles only; analysis operations work on RunMatrix.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int row, int col) const { return pixels[std::size_t(row) * width + col]; }
    bool operator==(const BinaryImage&) const = default;
};

// One row as alternating run lengths, white first. Canonical form: runs sum
// to width, only runs[0] may be zero (row starting with a black pixel).
struct RunRow {
    std::vector<int> runs;
    int width = 0;

    bool operator==(const RunRow&) const = default;
};

struct RunMatrix {
    int width = 0;
    int height = 0;
    std::vector<RunRow> rows;

    bool operator==(const RunMatrix&) const = default;
};

// One pixel column, top to bottom. column_index is 1-based.
struct ColumnSlice {
    int column_index = 0;
    std::vector<std::uint8_t> bits;
};

// Counters for the work-bound assertions: how many run elements an operation
// touched, and the working-set size of streaming state.
struct PerfCounters {
    std::size_t run_elements_visited = 0;
    std::size_t working_set_bytes = 0;
};

bool is_canonical(const RunRow& row);
void validate_row(const RunRow& row, int row_number = 0);
void validate_matrix(const RunMatrix& m);

RunRow encode_row(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> decode_row(const RunRow& row);

RunMatrix encode_image(const BinaryImage& img);
BinaryImage decode_image(const RunMatrix& m);

// Accepts Table-style rows padded with trailing zero runs and strips the
// padding. Interior zeros or a bad row sum raise CorruptRunError naming the
// offending 1-based row.
RunMatrix canonicalize_padded(const std::vector<std::vector<int>>& raw, int width);

long long black_pixel_count(const RunMatrix& m, PerfCounters* perf = nullptr);

// Streams columns 1..width by decrementing one run cursor per row; state is
// proportional to height, never to the raster area.
class ColumnScanner {
public:
    explicit ColumnScanner(const RunMatrix& m);

    // nullopt once all width columns have been produced.
    std::optional<ColumnSlice> next();

    // Cheaper variant for callers that reuse a buffer.
    bool next_into(std::vector<std::uint8_t>& bits);

    int columns_remaining() const { return matrix_->width - next_column_ + 1; }
    std::size_t run_elements_visited() const { return visited_; }
    std::size_t working_set_bytes() const;

private:
    const RunMatrix* matrix_;
    int next_column_;
    std::vector<std::uint32_t> run_index_;   // per row: index of the current run
    std::vector<std::int64_t> remaining_;    // per row: pixels left in that run
    std::size_t visited_ = 0;
};

} // namespace rldoc

#endif
