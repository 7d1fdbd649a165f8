#include "rldoc/rle.hpp"

#include <numeric>
#include <string>

namespace rldoc {

bool is_canonical(const RunRow& row) {
    if (row.width < 1 || row.runs.empty())
        return false;
    long long sum = 0;
    for (std::size_t i = 0; i < row.runs.size(); ++i) {
        int r = row.runs[i];
        if (r < 0 || (r == 0 && i != 0))
            return false;
        sum += r;
    }
    return sum == row.width;
}

void validate_row(const RunRow& row, int row_number) {
    if (row.width < 1)
        throw CorruptRunError("row width must be >= 1", row_number);
    if (row.runs.empty())
        throw CorruptRunError("empty run list", row_number);
    long long sum = 0;
    for (std::size_t i = 0; i < row.runs.size(); ++i) {
        int r = row.runs[i];
        if (r < 0)
            throw CorruptRunError("negative run length", row_number);
        if (r == 0 && i != 0)
            throw CorruptRunError("zero run at interior index " + std::to_string(i), row_number);
        sum += r;
    }
    if (sum != row.width)
        throw CorruptRunError("run sum " + std::to_string(sum) + " != width " + std::to_string(row.width),
                              row_number);
}

void validate_matrix(const RunMatrix& m) {
    if (m.width < 1 || m.height < 1)
        throw CorruptRunError("matrix dimensions must be >= 1");
    if (static_cast<int>(m.rows.size()) != m.height)
        throw CorruptRunError("row count " + std::to_string(m.rows.size()) + " != height " +
                              std::to_string(m.height));
    for (int i = 0; i < m.height; ++i) {
        if (m.rows[i].width != m.width)
            throw CorruptRunError("row width mismatch", i + 1);
        validate_row(m.rows[i], i + 1);
    }
}

RunRow encode_row(const std::vector<std::uint8_t>& bits) {
    if (bits.empty())
        throw InvalidArgumentError("encode_row: empty bit sequence");
    RunRow row;
    row.width = static_cast<int>(bits.size());
    std::uint8_t color = 0; // white first
    int run = 0;
    for (std::uint8_t b : bits) {
        std::uint8_t v = b ? 1 : 0;
        if (v == color) {
            ++run;
        } else {
            row.runs.push_back(run);
            color = v;
            run = 1;
        }
    }
    row.runs.push_back(run);
    return row;
}

std::vector<std::uint8_t> decode_row(const RunRow& row) {
    validate_row(row);
    std::vector<std::uint8_t> bits;
    bits.reserve(row.width);
    std::uint8_t color = 0;
    for (int r : row.runs) {
        bits.insert(bits.end(), r, color);
        color ^= 1;
    }
    return bits;
}

RunMatrix encode_image(const BinaryImage& img) {
    if (img.width < 1 || img.height < 1)
        throw InvalidArgumentError("encode_image: dimensions must be >= 1");
    if (img.pixels.size() != std::size_t(img.width) * img.height)
        throw InvalidArgumentError("encode_image: pixel count != width * height");
    RunMatrix m;
    m.width = img.width;
    m.height = img.height;
    m.rows.reserve(img.height);
    std::vector<std::uint8_t> row(img.width);
    for (int r = 0; r < img.height; ++r) {
        auto begin = img.pixels.begin() + std::size_t(r) * img.width;
        row.assign(begin, begin + img.width);
        m.rows.push_back(encode_row(row));
    }
    return m;
}

BinaryImage decode_image(const RunMatrix& m) {
    validate_matrix(m);
    BinaryImage img;
    img.width = m.width;
    img.height = m.height;
    img.pixels.reserve(std::size_t(m.width) * m.height);
    for (const RunRow& row : m.rows) {
        std::uint8_t color = 0;
        for (int r : row.runs) {
            img.pixels.insert(img.pixels.end(), r, color);
            color ^= 1;
        }
    }
    return img;
}

RunMatrix canonicalize_padded(const std::vector<std::vector<int>>& raw, int width) {
    if (width < 1)
        throw InvalidArgumentError("canonicalize_padded: width must be >= 1");
    if (raw.empty())
        throw InvalidArgumentError("canonicalize_padded: no rows");
    RunMatrix m;
    m.width = width;
    m.height = static_cast<int>(raw.size());
    m.rows.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& vals = raw[i];
        int line = static_cast<int>(i) + 1;
        // strip trailing zero padding, keep at least one element
        std::size_t len = vals.size();
        while (len > 1 && vals[len - 1] == 0)
            --len;
        RunRow row;
        row.width = width;
        row.runs.assign(vals.begin(), vals.begin() + len);
        validate_row(row, line);
        m.rows.push_back(std::move(row));
    }
    return m;
}

long long black_pixel_count(const RunMatrix& m, PerfCounters* perf) {
    validate_matrix(m);
    long long total = 0;
    std::size_t visited = 0;
    for (const RunRow& row : m.rows) {
        for (std::size_t i = 1; i < row.runs.size(); i += 2)
            total += row.runs[i];
        visited += (row.runs.size() + 1) / 2;
    }
    if (perf)
        perf->run_elements_visited += visited;
    return total;
}

ColumnScanner::ColumnScanner(const RunMatrix& m) : matrix_(&m), next_column_(1) {
    validate_matrix(m);
    run_index_.resize(m.height, 0);
    remaining_.resize(m.height);
    for (int r = 0; r < m.height; ++r) {
        remaining_[r] = m.rows[r].runs[0];
        ++visited_;
    }
}

bool ColumnScanner::next_into(std::vector<std::uint8_t>& bits) {
    if (next_column_ > matrix_->width)
        return false;
    bits.resize(matrix_->height);
    for (int r = 0; r < matrix_->height; ++r) {
        const auto& runs = matrix_->rows[r].runs;
        while (remaining_[r] == 0) {
            ++run_index_[r];
            remaining_[r] = runs[run_index_[r]];
            ++visited_;
        }
        bits[r] = static_cast<std::uint8_t>(run_index_[r] & 1u);
        --remaining_[r];
    }
    ++next_column_;
    return true;
}

std::optional<ColumnSlice> ColumnScanner::next() {
    ColumnSlice slice;
    slice.column_index = next_column_;
    if (!next_into(slice.bits))
        return std::nullopt;
    return slice;
}

std::size_t ColumnScanner::working_set_bytes() const {
    return sizeof(*this) + run_index_.capacity() * sizeof(std::uint32_t) +
           remaining_.capacity() * sizeof(std::int64_t);
}

} // namespace rldoc
