#include "rldoc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace rldoc {

namespace {

void append(Bytes& out, const std::string& s) {
    out.insert(out.end(), s.begin(), s.end());
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// --- PBM parsing ---

struct PbmCursor {
    const Bytes& data;
    std::size_t pos = 0;

    int peek() const { return pos < data.size() ? data[pos] : -1; }
    int get() { return pos < data.size() ? data[pos++] : -1; }

    void skip_ws_and_comments() {
        for (;;) {
            int c = peek();
            if (c == '#') {
                while (c != -1 && c != '\n')
                    c = get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                return;
            }
        }
    }

    long long read_int(const char* what) {
        skip_ws_and_comments();
        std::size_t start = pos;
        long long v = 0;
        bool any = false;
        while (peek() >= '0' && peek() <= '9') {
            v = v * 10 + (get() - '0');
            any = true;
            if (v > 1'000'000'000LL)
                throw ParseError(std::string("dimension overflow in ") + what, start);
        }
        if (!any)
            throw ParseError(std::string("expected integer for ") + what, start);
        return v;
    }
};

} // namespace

BinaryImage read_pbm(const Bytes& data) {
    if (data.size() < 2 || data[0] != 'P' || (data[1] != '1' && data[1] != '4'))
        throw ParseError("bad PBM magic", 0);
    bool binary = data[1] == '4';
    PbmCursor cur{data, 2};
    long long width = cur.read_int("width");
    long long height = cur.read_int("height");
    if (width < 1 || height < 1)
        throw ParseError("PBM dimensions must be >= 1", cur.pos);
    if (width * height > 1'000'000'000LL)
        throw ParseError("dimension overflow", cur.pos);

    BinaryImage img;
    img.width = static_cast<int>(width);
    img.height = static_cast<int>(height);
    img.pixels.reserve(static_cast<std::size_t>(width * height));

    if (binary) {
        // exactly one whitespace byte terminates the header
        int c = cur.get();
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n')
            throw ParseError("expected whitespace after P4 header", cur.pos - 1);
        std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
        for (long long r = 0; r < height; ++r) {
            if (cur.pos + row_bytes > data.size())
                throw ParseError("unexpected end of P4 payload", data.size());
            for (long long col = 0; col < width; ++col) {
                std::uint8_t byte = data[cur.pos + col / 8];
                img.pixels.push_back((byte >> (7 - col % 8)) & 1);
            }
            cur.pos += row_bytes;
        }
    } else {
        for (long long i = 0; i < width * height; ++i) {
            cur.skip_ws_and_comments();
            int c = cur.get();
            if (c == '0' || c == '1')
                img.pixels.push_back(static_cast<std::uint8_t>(c - '0'));
            else if (c == -1)
                throw ParseError("unexpected end of P1 payload", data.size());
            else
                throw ParseError("invalid P1 pixel character", cur.pos - 1);
        }
    }
    return img;
}

Bytes write_pbm(const BinaryImage& img, PbmVariant variant) {
    if (img.width < 1 || img.height < 1 ||
        img.pixels.size() != std::size_t(img.width) * img.height)
        throw InvalidArgumentError("write_pbm: malformed image");
    Bytes out;
    if (variant == PbmVariant::Ascii) {
        append(out, "P1\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n");
        for (int r = 0; r < img.height; ++r) {
            for (int c = 0; c < img.width; ++c) {
                out.push_back(img.at(r, c) ? '1' : '0');
                if ((c + 1) % 64 == 0 && c + 1 < img.width)
                    out.push_back('\n');
            }
            out.push_back('\n');
        }
    } else {
        append(out, "P4\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n");
        std::size_t row_bytes = (std::size_t(img.width) + 7) / 8;
        for (int r = 0; r < img.height; ++r) {
            std::vector<std::uint8_t> row(row_bytes, 0);
            for (int c = 0; c < img.width; ++c)
                if (img.at(r, c))
                    row[c / 8] |= static_cast<std::uint8_t>(0x80u >> (c % 8));
            out.insert(out.end(), row.begin(), row.end());
        }
    }
    return out;
}

RunMatrix read_rle_text(const Bytes& data) {
    std::string text(data.begin(), data.end());
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty RLE1 file", 0);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    std::istringstream header(line);
    std::string magic;
    long long width = 0, height = 0;
    if (!(header >> magic >> width >> height) || magic != "RLE1")
        throw ParseError("bad RLE1 header", 0);
    if (width < 1 || height < 1)
        throw ParseError("RLE1 dimensions must be >= 1", 0);

    std::vector<std::vector<int>> raw;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue; // blank line
        std::istringstream row_in(line);
        std::vector<int> runs;
        long long v;
        while (row_in >> v) {
            if (v < 0 || v > width)
                throw CorruptRunError("run length out of range", line_number - 1);
            runs.push_back(static_cast<int>(v));
        }
        if (!row_in.eof())
            throw CorruptRunError("non-numeric run value", line_number - 1);
        raw.push_back(std::move(runs));
    }
    if (static_cast<long long>(raw.size()) != height)
        throw CorruptRunError("row count " + std::to_string(raw.size()) + " != declared height " +
                                  std::to_string(height),
                              static_cast<int>(raw.size()));
    return canonicalize_padded(raw, static_cast<int>(width));
}

Bytes write_rle_text(const RunMatrix& m) {
    validate_matrix(m);
    Bytes out;
    append(out, "RLE1 " + std::to_string(m.width) + " " + std::to_string(m.height) + "\n");
    for (const RunRow& row : m.rows) {
        std::string line;
        for (std::size_t i = 0; i < row.runs.size(); ++i) {
            if (i)
                line += ' ';
            line += std::to_string(row.runs[i]);
        }
        line += '\n';
        append(out, line);
    }
    return out;
}

namespace {
constexpr std::size_t kMhHeaderSize = 16;
}

MhBitstream read_mh_file(const Bytes& data) {
    if (data.size() < kMhHeaderSize || std::memcmp(data.data(), "MH1\0", 4) != 0)
        throw ParseError("bad MH1 header", 0);
    auto u32 = [&data](std::size_t at) {
        return static_cast<std::uint32_t>(data[at]) | (static_cast<std::uint32_t>(data[at + 1]) << 8) |
               (static_cast<std::uint32_t>(data[at + 2]) << 16) |
               (static_cast<std::uint32_t>(data[at + 3]) << 24);
    };
    MhBitstream bs;
    bs.width = static_cast<int>(u32(4));
    bs.row_count = static_cast<int>(u32(8));
    bs.eol_mode = data[12] != 0;
    if (bs.width < 1 || bs.row_count < 1)
        throw ParseError("MH1 dimensions must be >= 1", 4);
    bs.bytes.assign(data.begin() + kMhHeaderSize, data.end());
    return bs;
}

Bytes write_mh_file(const MhBitstream& bs) {
    Bytes out;
    out.reserve(kMhHeaderSize + bs.bytes.size());
    out.resize(kMhHeaderSize, 0);
    std::memcpy(out.data(), "MH1\0", 4);
    auto put_u32 = [&out](std::size_t at, std::uint32_t v) {
        out[at] = static_cast<std::uint8_t>(v);
        out[at + 1] = static_cast<std::uint8_t>(v >> 8);
        out[at + 2] = static_cast<std::uint8_t>(v >> 16);
        out[at + 3] = static_cast<std::uint8_t>(v >> 24);
    };
    put_u32(4, static_cast<std::uint32_t>(bs.width));
    put_u32(8, static_cast<std::uint32_t>(bs.row_count));
    out[12] = bs.eol_mode ? 1 : 0;
    out.insert(out.end(), bs.bytes.begin(), bs.bytes.end());
    return out;
}

FileFormat sniff_format(const Bytes& data) {
    if (data.size() >= 2 && data[0] == 'P' && (data[1] == '1' || data[1] == '4'))
        return FileFormat::Pbm;
    if (data.size() >= 4 && std::memcmp(data.data(), "RLE1", 4) == 0)
        return FileFormat::RleText;
    if (data.size() >= 4 && std::memcmp(data.data(), "MH1\0", 4) == 0)
        return FileFormat::Mh;
    return FileFormat::Unknown;
}

Bytes emit_csv(const ProfileCurve& curve) {
    Bytes out;
    append(out, curve.direction == Direction::RowWise ? "row,black_count\n" : "column,black_count\n");
    for (std::size_t i = 0; i < curve.values.size(); ++i)
        append(out, std::to_string(i + 1) + "," + std::to_string(curve.values[i]) + "\n");
    return out;
}

Bytes emit_csv(const RunHistogram& h) {
    Bytes out;
    append(out, "run_length,frequency\n");
    for (const auto& [len, freq] : h.counts)
        append(out, std::to_string(len) + "," + std::to_string(freq) + "\n");
    return out;
}

Bytes emit_csv(const LogHistogram& h) {
    Bytes out;
    append(out, "bin,frequency\n");
    for (int i = 0; i < LogHistogram::kBinCount; ++i)
        append(out, std::string(LogHistogram::bin_label(i)) + "," + std::to_string(h.bins[i]) + "\n");
    return out;
}

Bytes emit_csv(const EntropyReport& rep) {
    Bytes out;
    append(out, rep.direction == Direction::RowWise ? "row,ceq,seq,formula\n"
                                                    : "column,ceq,seq,formula\n");
    for (std::size_t i = 0; i < rep.ceq.size(); ++i)
        append(out, std::to_string(i + 1) + "," + fmt_double(rep.ceq[i]) + "," +
                        fmt_double(rep.seq[i]) + "," + kEntropyFormulaId + "\n");
    append(out, std::string("total,") + fmt_double(rep.ceq_total) + "," + fmt_double(rep.seq_total) +
                    "," + kEntropyFormulaId + "\n");
    return out;
}

Bytes emit_csv(const std::vector<Segment>& segments) {
    Bytes out;
    append(out, "kind,row_start,row_end,col_start,col_end\n");
    for (const Segment& s : segments)
        append(out, std::string(segment_kind_name(s.kind)) + "," + std::to_string(s.row_start) + "," +
                        std::to_string(s.row_end) + "," + std::to_string(s.col_start) + "," +
                        std::to_string(s.col_end) + "\n");
    return out;
}

Bytes emit_csv(const BlockCharacterization& c) {
    auto opt = [](const std::optional<double>& v) {
        return v ? fmt_double(*v) : std::string("undefined");
    };
    Bytes out;
    append(out, "density,ceq_total,seq_total,relative_density,relative_ceq,relative_seq\n");
    append(out, fmt_double(c.density) + "," + fmt_double(c.ceq_total) + "," + fmt_double(c.seq_total) +
                    "," + opt(c.relative_density) + "," + opt(c.relative_ceq) + "," +
                    opt(c.relative_seq) + "\n");
    return out;
}

namespace {

constexpr int kSvgWidth = 640;
constexpr int kSvgHeight = 400;
constexpr int kSvgMargin = 40;

std::string svg_header() {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(kSvgWidth) + "\" height=\"" + std::to_string(kSvgHeight) + "\">\n";
}

std::string svg_axes() {
    int x0 = kSvgMargin, y0 = kSvgHeight - kSvgMargin, x1 = kSvgWidth - kSvgMargin, y1 = kSvgMargin;
    return "<line x1=\"" + std::to_string(x0) + "\" y1=\"" + std::to_string(y0) + "\" x2=\"" +
           std::to_string(x1) + "\" y2=\"" + std::to_string(y0) +
           "\" stroke=\"black\"/>\n<line x1=\"" + std::to_string(x0) + "\" y1=\"" +
           std::to_string(y0) + "\" x2=\"" + std::to_string(x0) + "\" y2=\"" + std::to_string(y1) +
           "\" stroke=\"black\"/>\n";
}

Bytes svg_bars(const std::vector<std::pair<std::string, long long>>& bars) {
    long long max_v = 1;
    for (const auto& [label, v] : bars)
        max_v = std::max(max_v, v);
    double plot_w = kSvgWidth - 2.0 * kSvgMargin;
    double plot_h = kSvgHeight - 2.0 * kSvgMargin;
    double bar_w = bars.empty() ? plot_w : plot_w / bars.size();
    Bytes out;
    append(out, svg_header());
    append(out, svg_axes());
    for (std::size_t i = 0; i < bars.size(); ++i) {
        double h = plot_h * static_cast<double>(bars[i].second) / static_cast<double>(max_v);
        double x = kSvgMargin + i * bar_w;
        double y = kSvgHeight - kSvgMargin - h;
        append(out, "<rect x=\"" + fmt_double(x) + "\" y=\"" + fmt_double(y) + "\" width=\"" +
                        fmt_double(bar_w * 0.9) + "\" height=\"" + fmt_double(h) +
                        "\" fill=\"steelblue\"><title>" + bars[i].first + "</title></rect>\n");
    }
    append(out, "</svg>\n");
    return out;
}

} // namespace

Bytes emit_svg(const ProfileCurve& curve) {
    long long max_v = 1;
    for (long long v : curve.values)
        max_v = std::max(max_v, v);
    double plot_w = kSvgWidth - 2.0 * kSvgMargin;
    double plot_h = kSvgHeight - 2.0 * kSvgMargin;
    std::string points;
    std::size_t n = curve.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        double x = kSvgMargin + (n > 1 ? plot_w * i / (n - 1) : plot_w / 2);
        double y = kSvgHeight - kSvgMargin -
                   plot_h * static_cast<double>(curve.values[i]) / static_cast<double>(max_v);
        if (i)
            points += ' ';
        points += fmt_double(x) + "," + fmt_double(y);
    }
    Bytes out;
    append(out, svg_header());
    append(out, svg_axes());
    append(out, "<polyline fill=\"none\" stroke=\"steelblue\" points=\"" + points + "\"/>\n");
    append(out, "</svg>\n");
    return out;
}

Bytes emit_svg(const RunHistogram& h) {
    std::vector<std::pair<std::string, long long>> bars;
    for (const auto& [len, freq] : h.counts)
        bars.emplace_back(std::to_string(len), freq);
    return svg_bars(bars);
}

Bytes emit_svg(const LogHistogram& h) {
    std::vector<std::pair<std::string, long long>> bars;
    for (int i = 0; i < LogHistogram::kBinCount; ++i)
        bars.emplace_back(LogHistogram::bin_label(i), h.bins[i]);
    return svg_bars(bars);
}

Bytes write_model(const FontSizeModel& model) {
    Bytes out;
    append(out, "slope=" + fmt_double(model.slope) + "\n");
    append(out, "intercept=" + fmt_double(model.intercept) + "\n");
    std::string sizes;
    for (std::size_t i = 0; i < model.known_sizes.size(); ++i) {
        if (i)
            sizes += ',';
        sizes += fmt_double(model.known_sizes[i]);
    }
    append(out, "known_sizes=" + sizes + "\n");
    append(out, "training_count=" + std::to_string(model.training_count) + "\n");
    return out;
}

FontSizeModel read_model(const Bytes& data) {
    std::string text(data.begin(), data.end());
    std::istringstream in(text);
    std::string line;
    FontSizeModel model;
    bool have_slope = false, have_intercept = false, have_sizes = false;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto eq = line.find('=');
        if (line.empty()) {
            offset += line.size() + 1;
            continue;
        }
        if (eq == std::string::npos)
            throw ParseError("expected key=value line in model file", offset);
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        try {
            if (key == "slope") {
                model.slope = std::stod(value);
                have_slope = true;
            } else if (key == "intercept") {
                model.intercept = std::stod(value);
                have_intercept = true;
            } else if (key == "known_sizes") {
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ','))
                    model.known_sizes.push_back(std::stod(item));
                have_sizes = !model.known_sizes.empty();
            } else if (key == "training_count") {
                model.training_count = std::stoi(value);
            } else {
                throw ParseError("unknown model key: " + key, offset);
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("bad numeric value for " + key, offset);
        }
        offset += line.size() + 1;
    }
    if (!have_slope || !have_intercept || !have_sizes)
        throw ParseError("model file missing slope/intercept/known_sizes", offset);
    return model;
}

std::vector<FontSample> read_samples_csv(const Bytes& data) {
    std::string text(data.begin(), data.end());
    std::istringstream in(text);
    std::string line;
    std::vector<FontSample> samples;
    std::size_t offset = 0;
    bool first = true;
    while (std::getline(in, line)) {
        std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (first && line.find("line_height") != std::string::npos) {
            first = false;
            continue; // header row
        }
        first = false;
        std::istringstream fields(line);
        std::string h, a, s;
        if (!std::getline(fields, h, ',') || !std::getline(fields, a, ',') ||
            !std::getline(fields, s))
            throw ParseError("expected line_height,ascender_height,font_size", line_offset);
        try {
            LineFeature feature;
            feature.line_height = std::stoi(h);
            if (!a.empty())
                feature.ascender_height = std::stoi(a);
            samples.emplace_back(feature, std::stod(s));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad numeric value in samples row", line_offset);
        }
    }
    return samples;
}

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

void write_file(const std::string& path, const Bytes& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out)
        throw Error("write failed: " + path);
}

} // namespace rldoc
