#ifndef RLDOC_IO_HPP
#define RLDOC_IO_HPP

#include <string>
#include <vector>

#include "rldoc/blocks.hpp"
#include "rldoc/features.hpp"
#include "rldoc/fontsize.hpp"
#include "rldoc/mh.hpp"
#include "rldoc/rle.hpp"
#include "rldoc/segmentation.hpp"

namespace rldoc {

using Bytes = std::vector<std::uint8_t>;

// --- pixel rasters: netpbm P1 (ascii) / P4 (packed) ---
enum class PbmVariant { Ascii, Binary };

BinaryImage read_pbm(const Bytes& data);
Bytes write_pbm(const BinaryImage& img, PbmVariant variant);

// --- run-domain text format: "RLE1 <width> <height>" then one line of run
// lengths per row; trailing zero padding accepted on read, never written ---
RunMatrix read_rle_text(const Bytes& data);
Bytes write_rle_text(const RunMatrix& m);

// --- MH bitstream file: 16-byte header "MH1\0" width:u32 height:u32 eol:u8
// and 3 zero bytes, all little-endian, then the bitstream ---
MhBitstream read_mh_file(const Bytes& data);
Bytes write_mh_file(const MhBitstream& bs);

enum class FileFormat { Pbm, RleText, Mh, Unknown };
FileFormat sniff_format(const Bytes& data);

// --- CSV emitters: one header row, one record per element, '.' decimal
// point, '\n' separators, byte-deterministic ---
Bytes emit_csv(const ProfileCurve& curve);
Bytes emit_csv(const RunHistogram& h);
Bytes emit_csv(const LogHistogram& h);
Bytes emit_csv(const EntropyReport& rep);
Bytes emit_csv(const std::vector<Segment>& segments);
Bytes emit_csv(const BlockCharacterization& c);

// --- SVG emitters: standalone document, single polyline (curve) or rect
// series (histogram) plus axes ---
Bytes emit_svg(const ProfileCurve& curve);
Bytes emit_svg(const RunHistogram& h);
Bytes emit_svg(const LogHistogram& h);

// --- font-size model and training data ---
// model: key=value lines (slope, intercept, known_sizes comma-separated)
Bytes write_model(const FontSizeModel& model);
FontSizeModel read_model(const Bytes& data);
// samples: CSV line_height,ascender_height,font_size (ascender may be empty)
std::vector<FontSample> read_samples_csv(const Bytes& data);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, const Bytes& data);

} // namespace rldoc

#endif
