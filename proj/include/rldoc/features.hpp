#ifndef RLDOC_FEATURES_HPP
#define RLDOC_FEATURES_HPP

#include <array>
#include <map>
#include <vector>

#include "rldoc/rle.hpp"

namespace rldoc {

enum class Direction { RowWise, ColumnWise };

// Black-pixel counts per row (the paper's VPP) or per column (HPP).
struct ProfileCurve {
    Direction direction = Direction::RowWise;
    std::vector<long long> values;

    bool operator==(const ProfileCurve&) const = default;
};

enum class RunColor { Black, White, Combined };

struct RunHistogram {
    RunColor color = RunColor::Black;
    std::map<int, long long> counts;

    long long total() const;
    bool operator==(const RunHistogram&) const = default;
};

// Length classes [1],[2],[3-4],[5-8],[9-16],[17-32],[33-64],[65-128],[129+]
struct LogHistogram {
    static constexpr int kBinCount = 9;
    std::array<long long, kBinCount> bins{};

    static int bin_for(int run_length);
    static const char* bin_label(int bin);
    bool operator==(const LogHistogram&) const = default;
};

// 0->1 (pos) and 1->0 (neg) transitions along one line; positions are the
// 1-based pixel index where the new run starts.
struct TransitionStats {
    std::vector<int> pos_positions;
    std::vector<int> neg_positions;
    int line_length = 0;

    int pos_count() const { return static_cast<int>(pos_positions.size()); }
    int neg_count() const { return static_cast<int>(neg_positions.size()); }
    bool operator==(const TransitionStats&) const = default;
};

// Identifies the entropy definition used in serialized reports.
inline constexpr const char* kEntropyFormulaId = "ceq-seq-v1";

struct EntropyReport {
    Direction direction = Direction::RowWise;
    std::vector<double> ceq; // one value per line
    std::vector<double> seq;
    double ceq_total = 0.0;
    double seq_total = 0.0;
};

ProfileCurve vpp(const RunMatrix& m, PerfCounters* perf = nullptr);
ProfileCurve hpp(const RunMatrix& m, PerfCounters* perf = nullptr);

RunHistogram run_histogram(const RunMatrix& m, RunColor color);
LogHistogram log_bin(const RunHistogram& h);

TransitionStats row_transitions(const RunRow& row);
TransitionStats bit_transitions(const std::vector<std::uint8_t>& bits);

// CEQ(line) = -(p/N)log2(p/N) - (n/N)log2(n/N) over transition counts p, n;
// SEQ(line) = sum of binary entropies H(x/N) over all transition positions x.
double ceq_of(const TransitionStats& t);
double seq_of(const TransitionStats& t);

EntropyReport entropy_horizontal(const RunMatrix& m);
EntropyReport entropy_vertical(const RunMatrix& m, PerfCounters* perf = nullptr);

} // namespace rldoc

#endif
