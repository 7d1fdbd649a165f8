// Command-line front end for run-length document analysis.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rldoc/io.hpp"

namespace {

using namespace rldoc;

RunMatrix load_matrix(const std::string& path, const std::string& format) {
    Bytes data = read_file(path);
    FileFormat fmt = FileFormat::Unknown;
    if (format == "pbm")
        fmt = FileFormat::Pbm;
    else if (format == "rle1")
        fmt = FileFormat::RleText;
    else if (format == "mh")
        fmt = FileFormat::Mh;
    else
        fmt = sniff_format(data);
    switch (fmt) {
    case FileFormat::Pbm:
        return encode_image(read_pbm(data));
    case FileFormat::RleText:
        return read_rle_text(data);
    case FileFormat::Mh:
        return mh_decode(read_mh_file(data));
    default:
        throw Error(path + ": unrecognized input format (expected PBM, RLE1 or MH1)");
    }
}

void emit(const Bytes& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(data.data(), 1, data.size(), stdout);
        std::fflush(stdout);
    } else {
        write_file(out_path, data);
    }
}

struct RectBounds {
    int r1 = 0, r2 = 0, c1 = 0, c2 = 0;
};

RectBounds parse_rect(const std::string& spec) {
    RectBounds rect;
    if (std::sscanf(spec.c_str(), "%d:%d:%d:%d", &rect.r1, &rect.r2, &rect.c1, &rect.c2) != 4)
        throw Error("bad --rect value '" + spec + "', expected r1:r2:c1:c2");
    return rect;
}

Segment line_by_index(const RunMatrix& m, long long blank_threshold, int index) {
    auto lines = segment_lines(m, blank_threshold);
    if (lines.empty())
        throw Error("document has no text lines");
    if (index < 1 || index > static_cast<int>(lines.size()))
        throw Error("line index out of range (document has " + std::to_string(lines.size()) +
                    " lines)");
    return lines[index - 1];
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Document-image analysis on run-length compressed data"};
    app.require_subcommand(1);

    std::string in_path, out_path, format;
    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("input", in_path, "input file")->required();
        cmd->add_option("-o,--out", out_path, "output file (default: stdout)");
        if (with_format)
            cmd->add_option("--format", format, "input format: pbm, rle1, mh (default: sniff)")
                ->check(CLI::IsMember({"pbm", "rle1", "mh"}));
    };

    auto* cmd_encode = app.add_subcommand("encode", "PBM to RLE1 run-length text");
    add_io(cmd_encode);

    bool ascii_pbm = false;
    auto* cmd_decode = app.add_subcommand("decode", "run data to PBM raster");
    add_io(cmd_decode);
    cmd_decode->add_flag("--ascii", ascii_pbm, "write P1 instead of P4");

    bool eol_mode = false;
    auto* cmd_mh_encode = app.add_subcommand("mh-encode", "run data to T.4 MH bitstream");
    add_io(cmd_mh_encode);
    cmd_mh_encode->add_flag("--eol", eol_mode, "separate rows with EOL codewords");

    auto* cmd_mh_decode = app.add_subcommand("mh-decode", "MH bitstream to RLE1");
    add_io(cmd_mh_decode);

    auto* cmd_vpp = app.add_subcommand("vpp", "per-row black-pixel profile as CSV");
    add_io(cmd_vpp);
    auto* cmd_hpp = app.add_subcommand("hpp", "per-column black-pixel profile as CSV");
    add_io(cmd_hpp);

    std::string color = "combined";
    bool log_bins = false;
    auto* cmd_runhist = app.add_subcommand("runhist", "run-length histogram as CSV");
    add_io(cmd_runhist);
    cmd_runhist->add_option("--color", color, "black, white or combined")
        ->check(CLI::IsMember({"black", "white", "combined"}));
    cmd_runhist->add_flag("--log", log_bins, "logarithmic length bins");

    std::string direction = "h";
    auto* cmd_entropy = app.add_subcommand("entropy", "per-line CEQ/SEQ as CSV");
    add_io(cmd_entropy);
    cmd_entropy->add_option("--direction", direction, "h (rows) or v (columns)")
        ->check(CLI::IsMember({"h", "v"}));

    long long blank_threshold = 0;
    auto* cmd_lines = app.add_subcommand("segment-lines", "text-line segments as CSV");
    add_io(cmd_lines);
    cmd_lines->add_option("--blank-threshold", blank_threshold, "max ink count of a blank row");

    std::string word_space = "auto";
    int line_index = 1;
    auto* cmd_words = app.add_subcommand("segment-words", "word/character segments as CSV");
    add_io(cmd_words);
    cmd_words->add_option("--word-space", word_space, "gap width in pixels, or 'auto'");
    cmd_words->add_option("--line", line_index, "1-based text line to segment (default 1)");
    cmd_words->add_option("--blank-threshold", blank_threshold, "max ink count of a blank row");

    std::string rect_spec;
    auto* cmd_block = app.add_subcommand("extract-block", "cut a rectangle, write RLE1");
    add_io(cmd_block);
    cmd_block->add_option("--rect", rect_spec, "r1:r2:c1:c2, 1-based inclusive")->required();

    auto* cmd_char = app.add_subcommand("characterize", "density/entropy features of a block");
    add_io(cmd_char);
    cmd_char->add_option("--rect", rect_spec, "r1:r2:c1:c2, 1-based inclusive")->required();

    std::string model_path;
    bool aggregate_max = false;
    auto* cmd_fit = app.add_subcommand("fontsize-fit", "fit font-size regression from CSV samples");
    cmd_fit->add_option("input", in_path, "samples CSV: line_height,ascender_height,font_size")
        ->required();
    cmd_fit->add_option("-o,--out", out_path, "model file (default: stdout)");
    cmd_fit->add_flag("--aggregate-max", aggregate_max,
                      "keep only the tallest training line per font size");

    auto* cmd_detect = app.add_subcommand("fontsize-detect", "detect per-line font size");
    add_io(cmd_detect);
    cmd_detect->add_option("--model", model_path, "model file from fontsize-fit")->required();
    cmd_detect->add_option("--blank-threshold", blank_threshold, "max ink count of a blank row");

    std::string feature = "vpp";
    auto* cmd_plot = app.add_subcommand("plot", "render a feature as SVG");
    add_io(cmd_plot);
    cmd_plot->add_option("--feature", feature, "vpp, hpp, runhist or runhist-log")
        ->check(CLI::IsMember({"vpp", "hpp", "runhist", "runhist-log"}));
    cmd_plot->add_option("--color", color, "histogram color class")
        ->check(CLI::IsMember({"black", "white", "combined"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (cmd_encode->parsed()) {
            emit(write_rle_text(encode_image(read_pbm(read_file(in_path)))), out_path);
        } else if (cmd_decode->parsed()) {
            RunMatrix m = load_matrix(in_path, format);
            emit(write_pbm(decode_image(m), ascii_pbm ? PbmVariant::Ascii : PbmVariant::Binary),
                 out_path);
        } else if (cmd_mh_encode->parsed()) {
            emit(write_mh_file(mh_encode(load_matrix(in_path, format), eol_mode)), out_path);
        } else if (cmd_mh_decode->parsed()) {
            emit(write_rle_text(mh_decode(read_mh_file(read_file(in_path)))), out_path);
        } else if (cmd_vpp->parsed()) {
            emit(emit_csv(vpp(load_matrix(in_path, format))), out_path);
        } else if (cmd_hpp->parsed()) {
            emit(emit_csv(hpp(load_matrix(in_path, format))), out_path);
        } else if (cmd_runhist->parsed()) {
            RunColor rc = color == "black"   ? RunColor::Black
                          : color == "white" ? RunColor::White
                                             : RunColor::Combined;
            RunHistogram h = run_histogram(load_matrix(in_path, format), rc);
            emit(log_bins ? emit_csv(log_bin(h)) : emit_csv(h), out_path);
        } else if (cmd_entropy->parsed()) {
            RunMatrix m = load_matrix(in_path, format);
            emit(emit_csv(direction == "h" ? entropy_horizontal(m) : entropy_vertical(m)), out_path);
        } else if (cmd_lines->parsed()) {
            emit(emit_csv(segment_lines(load_matrix(in_path, format), blank_threshold)), out_path);
        } else if (cmd_words->parsed()) {
            RunMatrix m = load_matrix(in_path, format);
            Segment line = line_by_index(m, blank_threshold, line_index);
            int threshold = word_space == "auto" ? auto_word_space_threshold(m, line)
                                                 : std::stoi(word_space);
            WordsAndChars wc = segment_words_chars(m, line, threshold);
            std::vector<Segment> all = wc.words;
            all.insert(all.end(), wc.characters.begin(), wc.characters.end());
            emit(emit_csv(all), out_path);
        } else if (cmd_block->parsed()) {
            RunMatrix m = load_matrix(in_path, format);
            RectBounds r = parse_rect(rect_spec);
            Segment block = extract_block(m, r.r1, r.r2, r.c1, r.c2);
            emit(write_rle_text(*block.payload), out_path);
        } else if (cmd_char->parsed()) {
            RunMatrix m = load_matrix(in_path, format);
            RectBounds r = parse_rect(rect_spec);
            Segment block = extract_block(m, r.r1, r.r2, r.c1, r.c2);
            emit(emit_csv(characterize(*block.payload, m)), out_path);
        } else if (cmd_fit->parsed()) {
            std::vector<FontSample> samples = read_samples_csv(read_file(in_path));
            if (aggregate_max) {
                std::map<double, FontSample> tallest;
                for (const FontSample& s : samples) {
                    auto it = tallest.find(s.second);
                    if (it == tallest.end() || s.first.line_height > it->second.first.line_height)
                        tallest[s.second] = s;
                }
                samples.clear();
                for (const auto& [size, s] : tallest)
                    samples.push_back(s);
            }
            emit(write_model(fit(samples)), out_path);
        } else if (cmd_detect->parsed()) {
            FontSizeModel model = read_model(read_file(model_path));
            RunMatrix m = load_matrix(in_path, format);
            std::string csv = "line,line_height,predicted,detected\n";
            auto lines = segment_lines(m, blank_threshold);
            for (std::size_t i = 0; i < lines.size(); ++i) {
                LineFeature feature{lines[i].height(), std::nullopt};
                FontDetection d = detect(model, feature);
                char buf[128];
                std::snprintf(buf, sizeof(buf), "%zu,%d,%.12g,%.12g\n", i + 1, feature.line_height,
                              d.predicted, d.detected);
                csv += buf;
            }
            emit(Bytes(csv.begin(), csv.end()), out_path);
        } else if (cmd_plot->parsed()) {
            RunMatrix m = load_matrix(in_path, format);
            if (feature == "vpp") {
                emit(emit_svg(vpp(m)), out_path);
            } else if (feature == "hpp") {
                emit(emit_svg(hpp(m)), out_path);
            } else {
                RunColor rc = color == "black"   ? RunColor::Black
                              : color == "white" ? RunColor::White
                                                 : RunColor::Combined;
                RunHistogram h = run_histogram(m, rc);
                emit(feature == "runhist-log" ? emit_svg(log_bin(h)) : emit_svg(h), out_path);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
