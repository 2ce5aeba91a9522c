#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclebal/truncated_series.hpp"

namespace cyclebal::detail {

/// Square matrix with entries in {0, +1, -1}, row-compressed.
struct SignedSparse {
    std::size_t dim = 0;
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> cols;
    std::vector<std::int8_t> signs;
};

struct PowerTraces {
    /// Index d holds Tr M^d and Tr |M|^d for d = 0..L.
    std::vector<BigInt> signed_traces;
    std::vector<BigInt> abs_traces;
};

/// Exact traces of M^d and |M|^d, d <= max_power, by propagating the unit
/// vector of every row index through M. Rows are swept densely when
/// dim <= dense_cap and through an active-index list otherwise.
PowerTraces power_traces(const SignedSparse& m, std::size_t max_power, std::size_t dense_cap, unsigned workers);

}  // namespace cyclebal::detail
