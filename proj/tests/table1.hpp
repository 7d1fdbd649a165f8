// Shared 13x14 fixture used across the test suites.
#ifndef RLDOC_TESTS_TABLE1_HPP
#define RLDOC_TESTS_TABLE1_HPP

#include <string>
#include <vector>

#include "rldoc/rle.hpp"

namespace rldoc_tests {

inline const std::vector<std::string>& table1_bits() {
    static const std::vector<std::string> rows = {
        "00000000000000",
        "00110000111110",
        "01111000111110",
        "01111000111110",
        "01111000111110",
        "00110000000000",
        "10000000000000",
        "10000000000000",
        "00100001111100",
        "01110001111100",
        "01111001111100",
        "01111100000000",
        "00000000000000",
    };
    return rows;
}

// As printed, including the trailing zero padding.
inline const std::vector<std::vector<int>>& table1_padded_runs() {
    static const std::vector<std::vector<int>> rows = {
        {14, 0, 0, 0, 0}, {2, 2, 4, 5, 1}, {1, 4, 3, 5, 1}, {1, 4, 3, 5, 1}, {1, 4, 3, 5, 1},
        {2, 2, 10, 0, 0}, {0, 1, 13, 0, 0}, {0, 1, 13, 0, 0}, {2, 1, 4, 5, 2}, {1, 3, 3, 5, 2},
        {1, 4, 2, 5, 2}, {1, 5, 8, 0, 0}, {14, 0, 0, 0, 0},
    };
    return rows;
}

inline rldoc::BinaryImage table1_image() {
    rldoc::BinaryImage img;
    img.width = 14;
    img.height = 13;
    for (const std::string& row : table1_bits())
        for (char c : row)
            img.pixels.push_back(c == '1');
    return img;
}

inline rldoc::RunMatrix table1_matrix() {
    return rldoc::canonicalize_padded(table1_padded_runs(), 14);
}

inline std::vector<std::uint8_t> bits_of(const std::string& s) {
    std::vector<std::uint8_t> out;
    for (char c : s)
        out.push_back(c == '1');
    return out;
}

} // namespace rldoc_tests

#endif
