#include "rldoc/mh.hpp"

#include <map>
#include <utility>

namespace rldoc {

using mh_tables::Codeword;

namespace {

class BitWriter {
public:
    void put(std::uint32_t bits, int count) {
        for (int i = count - 1; i >= 0; --i) {
            acc_ = (acc_ << 1) | ((bits >> i) & 1u);
            if (++fill_ == 8) {
                bytes_.push_back(static_cast<std::uint8_t>(acc_));
                acc_ = 0;
                fill_ = 0;
            }
        }
    }

    void pad_to_byte() {
        if (fill_ != 0)
            put(0, 8 - fill_);
    }

    std::vector<std::uint8_t> take() {
        pad_to_byte();
        return std::move(bytes_);
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint32_t acc_ = 0;
    int fill_ = 0;
};

class BitReader {
public:
    explicit BitReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    // -1 on end of stream
    int get() {
        if (pos_ >= bytes_.size() * 8)
            return -1;
        int bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1;
        ++pos_;
        return bit;
    }

    std::size_t bit_offset() const { return pos_; }

    void align_to_byte() { pos_ = (pos_ + 7) / 8 * 8; }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

void emit_run(BitWriter& w, long long len, bool black) {
    const Codeword* term = black ? mh_tables::kBlackTerminating : mh_tables::kWhiteTerminating;
    const Codeword* makeup = black ? mh_tables::kBlackMakeup : mh_tables::kWhiteMakeup;
    while (len > 2623) {
        const Codeword& c = mh_tables::kCommonMakeup[12]; // 2560
        w.put(c.bits, c.bit_count);
        len -= 2560;
    }
    if (len >= 1792) {
        const Codeword& c = mh_tables::kCommonMakeup[(len - 1792) / 64];
        w.put(c.bits, c.bit_count);
        len -= c.run_length;
    } else if (len >= 64) {
        const Codeword& c = makeup[len / 64 - 1];
        w.put(c.bits, c.bit_count);
        len -= c.run_length;
    }
    w.put(term[len].bits, term[len].bit_count);
}

// decode lookup: (bit_count, bits) -> run length; EOL maps to kEolMarker
constexpr int kEolMarker = -1;
using CodeMap = std::map<std::pair<int, std::uint32_t>, int>;

const CodeMap& code_map(bool black) {
    static const CodeMap white_map = [] {
        CodeMap m;
        for (const Codeword& c : mh_tables::kWhiteTerminating)
            m[{c.bit_count, c.bits}] = c.run_length;
        for (const Codeword& c : mh_tables::kWhiteMakeup)
            m[{c.bit_count, c.bits}] = c.run_length;
        for (const Codeword& c : mh_tables::kCommonMakeup)
            m[{c.bit_count, c.bits}] = c.run_length;
        m[{mh_tables::kEol.bit_count, mh_tables::kEol.bits}] = kEolMarker;
        return m;
    }();
    static const CodeMap black_map = [] {
        CodeMap m;
        for (const Codeword& c : mh_tables::kBlackTerminating)
            m[{c.bit_count, c.bits}] = c.run_length;
        for (const Codeword& c : mh_tables::kBlackMakeup)
            m[{c.bit_count, c.bits}] = c.run_length;
        for (const Codeword& c : mh_tables::kCommonMakeup)
            m[{c.bit_count, c.bits}] = c.run_length;
        m[{mh_tables::kEol.bit_count, mh_tables::kEol.bits}] = kEolMarker;
        return m;
    }();
    return black ? black_map : white_map;
}

constexpr int kMaxCodeBits = 13;

void expect_eol(BitReader& r) {
    // fill bits (zeros) may precede the EOL
    int zeros = 0;
    for (;;) {
        std::size_t at = r.bit_offset();
        int bit = r.get();
        if (bit < 0)
            throw CorruptStreamError("unexpected end of stream while seeking EOL", at);
        if (bit == 0) {
            ++zeros;
            continue;
        }
        if (zeros < 11)
            throw CorruptStreamError("expected EOL codeword", at);
        return;
    }
}

RunRow decode_mh_row(BitReader& r, int width) {
    std::vector<std::pair<int, long long>> segs; // (color, length), zero runs dropped
    auto push_seg = [&segs](int color, long long len) {
        if (len == 0)
            return;
        if (!segs.empty() && segs.back().first == color)
            segs.back().second += len;
        else
            segs.emplace_back(color, len);
    };

    long long total = 0;
    long long pending = 0; // accumulated make-up amount
    int color = 0;
    long long codewords = 0;
    const long long max_codewords = 2LL * width + 16; // stops zero-run floods
    while (total < width) {
        if (++codewords > max_codewords)
            throw CorruptStreamError("row does not converge to declared width", r.bit_offset());
        std::uint32_t bits = 0;
        int count = 0;
        int run = 0;
        for (;;) {
            std::size_t at = r.bit_offset();
            int bit = r.get();
            if (bit < 0)
                throw CorruptStreamError("unexpected end of stream inside row", at);
            bits = (bits << 1) | static_cast<std::uint32_t>(bit);
            ++count;
            const CodeMap& m = code_map(color == 1);
            auto it = m.find({count, bits});
            if (it != m.end()) {
                run = it->second;
                break;
            }
            if (count > kMaxCodeBits)
                throw CorruptStreamError("unrecognized codeword prefix", at - count + 1);
        }
        if (run == kEolMarker)
            throw CorruptStreamError("unexpected EOL inside row", r.bit_offset() - 12);
        if (run >= 64) {
            // make-up codes accumulate; a terminating code ends the run
            pending += run;
            continue;
        }
        long long full = pending + run;
        pending = 0;
        push_seg(color, full);
        total += full;
        color ^= 1;
    }
    if (total > width)
        throw CorruptStreamError("row exceeds declared width", r.bit_offset());
    if (pending != 0)
        throw CorruptStreamError("make-up codeword without terminating code", r.bit_offset());

    RunRow row;
    row.width = width;
    if (segs[0].first == 1)
        row.runs.push_back(0);
    for (const auto& [c, len] : segs)
        row.runs.push_back(static_cast<int>(len));
    return row;
}

} // namespace

MhBitstream mh_encode(const RunMatrix& m, bool eol_mode) {
    mh_tables::verify();
    validate_matrix(m);
    BitWriter w;
    for (const RunRow& row : m.rows) {
        if (eol_mode)
            w.put(mh_tables::kEol.bits, mh_tables::kEol.bit_count);
        for (std::size_t i = 0; i < row.runs.size(); ++i)
            emit_run(w, row.runs[i], i % 2 == 1);
        if (!eol_mode)
            w.pad_to_byte();
    }
    MhBitstream bs;
    bs.bytes = w.take();
    bs.row_count = m.height;
    bs.width = m.width;
    bs.eol_mode = eol_mode;
    return bs;
}

RunMatrix mh_decode(const MhBitstream& bs) {
    mh_tables::verify();
    if (bs.width < 1 || bs.row_count < 1)
        throw InvalidArgumentError("mh_decode: width and row_count must be >= 1");
    BitReader r(bs.bytes);
    RunMatrix m;
    m.width = bs.width;
    m.height = bs.row_count;
    m.rows.reserve(bs.row_count);
    for (int i = 0; i < bs.row_count; ++i) {
        if (bs.eol_mode)
            expect_eol(r);
        m.rows.push_back(decode_mh_row(r, bs.width));
        if (!bs.eol_mode)
            r.align_to_byte();
    }
    validate_matrix(m);
    return m;
}

} // namespace rldoc
