#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclebal/truncated_series.hpp"

namespace cyclebal {

struct SignedCount {
    BigInt positive = 0;
    BigInt negative = 0;

    BigInt total() const { return positive + negative; }
    friend bool operator==(const SignedCount&, const SignedCount&) = default;
};

/// Per-length counts of positive and negative simple cycles, lengths 1..L.
class CycleCensus {
public:
    explicit CycleCensus(std::size_t max_length = 0) : counts_(max_length) {}

    std::size_t max_length() const noexcept { return counts_.size(); }
    const SignedCount& at(std::size_t length) const { return counts_.at(length - 1); }
    SignedCount& at(std::size_t length) { return counts_.at(length - 1); }

    BigInt total_cycles() const;

    CycleCensus& operator+=(const CycleCensus& other);
    friend bool operator==(const CycleCensus&, const CycleCensus&) = default;

private:
    std::vector<SignedCount> counts_;
};

/// One length of a balance table. Ratios are empty when their denominator
/// vanishes; U is +infinity when there are negative but no positive cycles.
struct BalanceRow {
    std::size_t length = 0;
    BigInt n_pos = 0;
    BigInt n_neg = 0;
    std::optional<double> r;
    std::optional<double> u;
    std::optional<double> k;
    /// Two-sigma half width when the row is an estimate.
    std::optional<double> stderr_r;
};

struct BalanceTable {
    std::vector<BalanceRow> rows;

    /// Row for `length`, or nullptr.
    const BalanceRow* find(std::size_t length) const;
};

/// R = N-/(N- + N+), U = N-/N+, K = (N+ - N-)/(N+ + N-).
BalanceRow balance_row(std::size_t length, const BigInt& n_pos, const BigInt& n_neg);

/// Ratios for R, U and K given only R (used for estimates, where counts are
/// pooled but the ratio is an average).
void fill_from_ratio(BalanceRow& row, double r);

BalanceTable balance_table(const CycleCensus& census);

/// Lossless enough for ratios: both operands go through long double.
double ratio(const BigInt& numerator, const BigInt& denominator);

}  // namespace cyclebal
