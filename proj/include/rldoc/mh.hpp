#ifndef RLDOC_MH_HPP
#define RLDOC_MH_HPP

#include <cstdint>
#include <vector>

#include "rldoc/rle.hpp"

namespace rldoc {

// CCITT T.4 one-dimensional (Modified Huffman) bitstream. Bits are packed
// MSB-first within each byte. With eol_mode off, every row is padded with
// zero fill bits to a byte boundary; with eol_mode on, an EOL codeword
// (000000000001) precedes every row.
struct MhBitstream {
    std::vector<std::uint8_t> bytes;
    int row_count = 0;
    int width = 0;
    bool eol_mode = false;
};

MhBitstream mh_encode(const RunMatrix& m, bool eol_mode);
RunMatrix mh_decode(const MhBitstream& bs);

namespace mh_tables {

struct Codeword {
    int run_length;
    int bit_count;
    std::uint32_t bits;
};

// Terminating codes 0..63, indexed by run length.
extern const Codeword kWhiteTerminating[64];
extern const Codeword kBlackTerminating[64];
// Make-up codes 64..1728 (index i holds 64*(i+1)).
extern const Codeword kWhiteMakeup[27];
extern const Codeword kBlackMakeup[27];
// Extended make-up codes 1792..2560, shared between colors.
extern const Codeword kCommonMakeup[13];
extern const Codeword kEol;

// Startup self-checks on the transcribed tables: within each color class the
// codes form a prefix-free set, every run 0..63 has a terminating code and
// every multiple of 64 up to 2560 has a make-up code. Throws on failure;
// called once from mh_encode/mh_decode.
void verify();

} // namespace mh_tables

} // namespace rldoc

#endif
