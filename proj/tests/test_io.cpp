#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "oracle.hpp"
#include "rldoc/io.hpp"
#include "table1.hpp"

using namespace rldoc;
using namespace rldoc_tests;

namespace {

Bytes bytes_of(const std::string& s) {
    return Bytes(s.begin(), s.end());
}

std::string str_of(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

} // namespace

TEST_CASE("P4 packing of the Table I line-2 row") {
    BinaryImage img;
    img.width = 14;
    img.height = 1;
    img.pixels = bits_of("00110000111110");
    Bytes out = write_pbm(img, PbmVariant::Binary);
    REQUIRE(out.size() >= 2);
    CHECK(out[out.size() - 2] == 0x30);
    CHECK(out[out.size() - 1] == 0xF8);

    // independent pixel-unpacking check of the payload
    BinaryImage back = read_pbm(out);
    CHECK(back == img);
}

TEST_CASE("P1 parsing with comments and odd whitespace") {
    Bytes data = bytes_of("P1\n# a comment\n 1 1\n# another\n1\n");
    BinaryImage img = read_pbm(data);
    CHECK(img.width == 1);
    CHECK(img.height == 1);
    CHECK(img.pixels == std::vector<std::uint8_t>{1});
}

TEST_CASE("PBM round trips both variants") {
    std::mt19937 rng(112233);
    for (int i = 0; i < 60; ++i) {
        BinaryImage img = oracle::random_image(rng);
        CHECK(read_pbm(write_pbm(img, PbmVariant::Ascii)) == img);
        CHECK(read_pbm(write_pbm(img, PbmVariant::Binary)) == img);
    }
}

TEST_CASE("malformed PBM inputs give structured errors") {
    CHECK_THROWS_AS(read_pbm(bytes_of("P5\n1 1\n")), ParseError);
    CHECK_THROWS_AS(read_pbm(bytes_of("P1\n2 2\n1 0 1")), ParseError); // missing pixel
    CHECK_THROWS_AS(read_pbm(bytes_of("P1\n0 3\n")), ParseError);
    CHECK_THROWS_AS(read_pbm(bytes_of("P1\n99999999 99999999\n")), ParseError);

    // P4 payload one byte short
    BinaryImage img = table1_image();
    Bytes p4 = write_pbm(img, PbmVariant::Binary);
    p4.pop_back();
    CHECK_THROWS_AS(read_pbm(p4), ParseError);
}

TEST_CASE("RLE1 reads the Table I layout, padding included") {
    std::string body = "RLE1 14 13\n";
    for (const auto& row : table1_padded_runs()) {
        for (std::size_t i = 0; i < row.size(); ++i)
            body += (i ? " " : "") + std::to_string(row[i]);
        body += "\n";
    }
    RunMatrix m = read_rle_text(bytes_of(body));
    CHECK(m == table1_matrix());

    // write produces the canonical, unpadded serialization
    Bytes out = write_rle_text(m);
    CHECK(read_rle_text(out) == m);
    CHECK(str_of(out).substr(0, 11) == "RLE1 14 13\n");
    CHECK(str_of(out).find(" 0\n") == std::string::npos); // no padding written
}

TEST_CASE("RLE1 rejects malformed files") {
    CHECK_THROWS_AS(read_rle_text(bytes_of("")), ParseError);
    CHECK_THROWS_AS(read_rle_text(bytes_of("RLE 2 2\n1 1\n1 1\n")), ParseError);
    CHECK_THROWS_AS(read_rle_text(bytes_of("RLE1 14 13\n14\n")), CorruptRunError); // row count
    CHECK_THROWS_AS(read_rle_text(bytes_of("RLE1 4 1\n1 2\n")), CorruptRunError);  // sum mismatch
    CHECK_THROWS_AS(read_rle_text(bytes_of("RLE1 4 1\n1 0 3\n")), CorruptRunError);
}

TEST_CASE("RLE1 round trip property") {
    std::mt19937 rng(443322);
    for (int i = 0; i < 60; ++i) {
        RunMatrix m = encode_image(oracle::random_image(rng));
        CHECK(read_rle_text(write_rle_text(m)) == m);
    }
}

TEST_CASE("MH1 file header round trip") {
    RunMatrix m = table1_matrix();
    for (bool eol : {false, true}) {
        MhBitstream bs = mh_encode(m, eol);
        Bytes file = write_mh_file(bs);
        CHECK(file.size() == 16 + bs.bytes.size());
        MhBitstream back = read_mh_file(file);
        CHECK(back.width == 14);
        CHECK(back.row_count == 13);
        CHECK(back.eol_mode == eol);
        CHECK(mh_decode(back) == m);
    }
    CHECK_THROWS_AS(read_mh_file(bytes_of("MH2\0xxxxxxxxxxxx")), ParseError);
}

TEST_CASE("format sniffing") {
    CHECK(sniff_format(bytes_of("P1\n1 1\n0\n")) == FileFormat::Pbm);
    CHECK(sniff_format(bytes_of("P4\n1 1\n\0")) == FileFormat::Pbm);
    CHECK(sniff_format(bytes_of("RLE1 2 1\n2\n")) == FileFormat::RleText);
    CHECK(sniff_format(write_mh_file(mh_encode(table1_matrix(), false))) == FileFormat::Mh);
    CHECK(sniff_format(bytes_of("what is this")) == FileFormat::Unknown);
}

TEST_CASE("CSV emitters") {
    std::string csv = str_of(emit_csv(vpp(table1_matrix())));
    CHECK(csv.substr(0, 16) == "row,black_count\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 14); // header + 13 records
    CHECK(csv.find("2,7\n") != std::string::npos);

    RunHistogram empty;
    CHECK(str_of(emit_csv(empty)) == "run_length,frequency\n");

    std::string seg_csv = str_of(emit_csv(segment_lines(table1_matrix())));
    CHECK(seg_csv == "kind,row_start,row_end,col_start,col_end\nline,2,12,1,14\n");

    std::string ent_csv = str_of(emit_csv(entropy_horizontal(table1_matrix())));
    CHECK(ent_csv.find("formula") != std::string::npos);
    CHECK(ent_csv.find(kEntropyFormulaId) != std::string::npos);
    CHECK(ent_csv.find("total,") != std::string::npos);

    BlockCharacterization c;
    c.density = 0.5;
    std::string block_csv = str_of(emit_csv(c));
    CHECK(block_csv.find("undefined") != std::string::npos);
}

TEST_CASE("SVG output is deterministic and well formed") {
    ProfileCurve curve = vpp(table1_matrix());
    Bytes a = emit_svg(curve);
    Bytes b = emit_svg(curve);
    CHECK(a == b);
    std::string svg = str_of(a);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

    std::string hist_svg = str_of(emit_svg(run_histogram(table1_matrix(), RunColor::Black)));
    CHECK(hist_svg.find("<rect") != std::string::npos);
}

TEST_CASE("font-size model file round trip") {
    FontSizeModel model = fit({{LineFeature{10, std::nullopt}, 8.0},
                               {LineFeature{20, 15}, 16.0},
                               {LineFeature{30, std::nullopt}, 24.0}});
    FontSizeModel back = read_model(write_model(model));
    CHECK(back.slope == doctest::Approx(model.slope).epsilon(1e-12));
    CHECK(back.intercept == doctest::Approx(model.intercept).epsilon(1e-12));
    CHECK(back.known_sizes == model.known_sizes);
    CHECK(back.training_count == model.training_count);

    CHECK_THROWS_AS(read_model(bytes_of("slope=1\n")), ParseError);
    CHECK_THROWS_AS(read_model(bytes_of("slope=abc\nintercept=0\nknown_sizes=8\n")), ParseError);
}

TEST_CASE("training samples CSV") {
    Bytes data = bytes_of("line_height,ascender_height,font_size\n10,,8\n20,14,16\n");
    auto samples = read_samples_csv(data);
    REQUIRE(samples.size() == 2);
    CHECK(samples[0].first.line_height == 10);
    CHECK_FALSE(samples[0].first.ascender_height.has_value());
    CHECK(samples[0].second == 8.0);
    CHECK(samples[1].first.ascender_height.value() == 14);

    CHECK_THROWS_AS(read_samples_csv(bytes_of("10,8\n")), ParseError);
    CHECK_THROWS_AS(read_samples_csv(bytes_of("ten,,8\n")), ParseError);
}
