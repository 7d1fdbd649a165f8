#include "rldoc/features.hpp"

#include <cmath>

namespace rldoc {

long long RunHistogram::total() const {
    long long t = 0;
    for (const auto& [len, freq] : counts)
        t += freq;
    return t;
}

int LogHistogram::bin_for(int run_length) {
    if (run_length <= 1)
        return 0;
    if (run_length >= 129)
        return kBinCount - 1;
    int bin = 1;
    int upper = 2;
    while (run_length > upper) {
        upper *= 2;
        ++bin;
    }
    return bin;
}

const char* LogHistogram::bin_label(int bin) {
    static const char* labels[kBinCount] = {"1",     "2",     "3-4",    "5-8",  "9-16",
                                            "17-32", "33-64", "65-128", "129+"};
    return labels[bin];
}

ProfileCurve vpp(const RunMatrix& m, PerfCounters* perf) {
    validate_matrix(m);
    ProfileCurve curve;
    curve.direction = Direction::RowWise;
    curve.values.reserve(m.height);
    std::size_t visited = 0;
    for (const RunRow& row : m.rows) {
        long long black = 0;
        for (std::size_t i = 1; i < row.runs.size(); i += 2)
            black += row.runs[i];
        visited += row.runs.size();
        curve.values.push_back(black);
    }
    if (perf)
        perf->run_elements_visited += visited;
    return curve;
}

ProfileCurve hpp(const RunMatrix& m, PerfCounters* perf) {
    ColumnScanner scanner(m);
    ProfileCurve curve;
    curve.direction = Direction::ColumnWise;
    curve.values.reserve(m.width);
    std::vector<std::uint8_t> bits;
    while (scanner.next_into(bits)) {
        long long black = 0;
        for (std::uint8_t b : bits)
            black += b;
        curve.values.push_back(black);
    }
    if (perf) {
        perf->run_elements_visited += scanner.run_elements_visited();
        perf->working_set_bytes = std::max(perf->working_set_bytes,
                                           scanner.working_set_bytes() + bits.capacity());
    }
    return curve;
}

RunHistogram run_histogram(const RunMatrix& m, RunColor color) {
    validate_matrix(m);
    RunHistogram h;
    h.color = color;
    for (const RunRow& row : m.rows) {
        for (std::size_t i = 0; i < row.runs.size(); ++i) {
            if (row.runs[i] == 0)
                continue;
            bool black = i % 2 == 1;
            if (color == RunColor::Combined || (color == RunColor::Black) == black)
                ++h.counts[row.runs[i]];
        }
    }
    return h;
}

LogHistogram log_bin(const RunHistogram& h) {
    LogHistogram out;
    for (const auto& [len, freq] : h.counts)
        out.bins[LogHistogram::bin_for(len)] += freq;
    return out;
}

TransitionStats row_transitions(const RunRow& row) {
    validate_row(row);
    TransitionStats t;
    t.line_length = row.width;
    long long prefix = row.runs[0];
    for (std::size_t i = 1; i < row.runs.size(); ++i) {
        int pos = static_cast<int>(prefix) + 1;
        if (i % 2 == 1)
            t.pos_positions.push_back(pos);
        else
            t.neg_positions.push_back(pos);
        prefix += row.runs[i];
    }
    return t;
}

TransitionStats bit_transitions(const std::vector<std::uint8_t>& bits) {
    TransitionStats t;
    t.line_length = static_cast<int>(bits.size());
    std::uint8_t prev = 0;
    for (int i = 0; i < t.line_length; ++i) {
        std::uint8_t cur = bits[i] ? 1 : 0;
        if (cur != prev) {
            if (cur)
                t.pos_positions.push_back(i + 1);
            else
                t.neg_positions.push_back(i + 1);
            prev = cur;
        }
    }
    return t;
}

namespace {

double plogp(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

double binary_entropy(double p) {
    return plogp(p) + plogp(1.0 - p);
}

} // namespace

double ceq_of(const TransitionStats& t) {
    double n = t.line_length;
    return plogp(t.pos_count() / n) + plogp(t.neg_count() / n);
}

double seq_of(const TransitionStats& t) {
    double n = t.line_length;
    double total = 0.0;
    for (int x : t.pos_positions)
        total += binary_entropy(x / n);
    for (int x : t.neg_positions)
        total += binary_entropy(x / n);
    return total;
}

EntropyReport entropy_horizontal(const RunMatrix& m) {
    validate_matrix(m);
    EntropyReport rep;
    rep.direction = Direction::RowWise;
    rep.ceq.reserve(m.height);
    rep.seq.reserve(m.height);
    for (const RunRow& row : m.rows) {
        TransitionStats t = row_transitions(row);
        rep.ceq.push_back(ceq_of(t));
        rep.seq.push_back(seq_of(t));
        rep.ceq_total += rep.ceq.back();
        rep.seq_total += rep.seq.back();
    }
    return rep;
}

EntropyReport entropy_vertical(const RunMatrix& m, PerfCounters* perf) {
    ColumnScanner scanner(m);
    EntropyReport rep;
    rep.direction = Direction::ColumnWise;
    rep.ceq.reserve(m.width);
    rep.seq.reserve(m.width);
    std::vector<std::uint8_t> bits;
    while (scanner.next_into(bits)) {
        TransitionStats t = bit_transitions(bits);
        rep.ceq.push_back(ceq_of(t));
        rep.seq.push_back(seq_of(t));
        rep.ceq_total += rep.ceq.back();
        rep.seq_total += rep.seq.back();
    }
    if (perf) {
        perf->run_elements_visited += scanner.run_elements_visited();
        perf->working_set_bytes = std::max(perf->working_set_bytes,
                                           scanner.working_set_bytes() + bits.capacity());
    }
    return rep;
}

} // namespace rldoc
