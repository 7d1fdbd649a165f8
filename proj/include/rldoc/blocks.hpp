#ifndef RLDOC_BLOCKS_HPP
#define RLDOC_BLOCKS_HPP

#include <optional>

#include "rldoc/segmentation.hpp"

namespace rldoc {

struct BlockCharacterization {
    double density = 0.0;
    double ceq_total = 0.0; // horizontal, over the block
    double seq_total = 0.0;
    // undefined (nullopt) when the whole-document value is zero
    std::optional<double> relative_density;
    std::optional<double> relative_ceq;
    std::optional<double> relative_seq;
};

// Cuts the rectangle out of the run data by clipping each row's runs to the
// column window; the pixel raster is never materialized. Bounds are 1-based
// inclusive.
Segment extract_block(const RunMatrix& m, int row_start, int row_end, int col_start, int col_end);

BlockCharacterization characterize(const RunMatrix& block, const RunMatrix& whole);

} // namespace rldoc

#endif
