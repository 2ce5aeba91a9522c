#include "power_traces.hpp"

#include <algorithm>
#include <memory>

#include "parallel.hpp"

namespace cyclebal::detail {
namespace {

using i128 = __int128;

struct Overflow {};

BigInt big(i128 v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return negative ? BigInt(-r) : r;
}

inline void add_to(i128& acc, i128 v, bool negate) {
    if (negate ? __builtin_sub_overflow(acc, v, &acc) : __builtin_add_overflow(acc, v, &acc)) throw Overflow{};
}
inline void add_to(BigInt& acc, const BigInt& v, bool negate) {
    if (negate)
        acc -= v;
    else
        acc += v;
}

// Walks from one start row; writes the diagonal entry after each step.
template <class Int>
class Propagator {
public:
    Propagator(const SignedSparse& m, std::size_t max_power, bool dense)
        : m_(m), L_(max_power), dense_(dense), s_(m.dim, Int(0)), a_(m.dim, Int(0)), ns_(m.dim, Int(0)),
          na_(m.dim, Int(0)), mark_(m.dim, 0) {}

    void run(std::uint32_t start, std::vector<Int>& sdiag, std::vector<Int>& adiag) {
        clear();
        s_[start] = 1;
        a_[start] = 1;
        active_.assign(1, start);
        sdiag.assign(L_ + 1, Int(0));
        adiag.assign(L_ + 1, Int(0));
        for (std::size_t d = 1; d <= L_ && !active_.empty(); ++d) {
            step();
            sdiag[d] = s_[start];
            adiag[d] = a_[start];
        }
    }

    /// Full reset after an interrupted step.
    void reset() {
        std::fill(s_.begin(), s_.end(), Int(0));
        std::fill(a_.begin(), a_.end(), Int(0));
        std::fill(ns_.begin(), ns_.end(), Int(0));
        std::fill(na_.begin(), na_.end(), Int(0));
        std::fill(mark_.begin(), mark_.end(), 0);
        active_.clear();
        next_.clear();
    }

private:
    void clear() {
        if (dense_) {
            std::fill(s_.begin(), s_.end(), Int(0));
            std::fill(a_.begin(), a_.end(), Int(0));
        } else {
            for (auto i : active_) s_[i] = a_[i] = 0;
        }
        active_.clear();
    }

    void step() {
        next_.clear();
        auto push = [&](std::uint32_t j, const Int& sv, const Int& av, std::int8_t sign) {
            if (!mark_[j]) {
                mark_[j] = 1;
                next_.push_back(j);
            }
            add_to(ns_[j], sv, sign < 0);
            add_to(na_[j], av, false);
        };
        if (dense_) {
            for (std::uint32_t i = 0; i < m_.dim; ++i) {
                if (a_[i] == 0) continue;
                for (std::size_t e = m_.offsets[i]; e < m_.offsets[i + 1]; ++e) push(m_.cols[e], s_[i], a_[i], m_.signs[e]);
            }
        } else {
            for (auto i : active_)
                for (std::size_t e = m_.offsets[i]; e < m_.offsets[i + 1]; ++e) push(m_.cols[e], s_[i], a_[i], m_.signs[e]);
        }
        for (auto i : active_) s_[i] = a_[i] = 0;
        for (auto j : next_) {
            s_[j] = std::move(ns_[j]);
            a_[j] = std::move(na_[j]);
            ns_[j] = na_[j] = 0;
            mark_[j] = 0;
        }
        active_.swap(next_);
    }

    const SignedSparse& m_;
    std::size_t L_;
    bool dense_;
    std::vector<Int> s_, a_, ns_, na_;
    std::vector<std::uint8_t> mark_;
    std::vector<std::uint32_t> active_, next_;
};

}  // namespace

PowerTraces power_traces(const SignedSparse& m, std::size_t max_power, std::size_t dense_cap, unsigned workers) {
    PowerTraces out;
    out.signed_traces.assign(max_power + 1, 0);
    out.abs_traces.assign(max_power + 1, 0);
    out.signed_traces[0] = m.dim;
    out.abs_traces[0] = m.dim;
    if (m.dim == 0 || max_power == 0) return out;
    const bool dense = m.dim <= dense_cap;
    const unsigned threads = std::max(1u, workers);
    // Each worker sums its own starts; the totals are exact integers, so the
    // order of the final reduction does not matter.
    struct Partial {
        std::vector<i128> s, a;
        std::vector<BigInt> sbig, abig;
    };
    std::vector<Partial> partial(threads);
    for (auto& p : partial) {
        p.s.assign(max_power + 1, 0);
        p.a.assign(max_power + 1, 0);
        p.sbig.assign(max_power + 1, 0);
        p.abig.assign(max_power + 1, 0);
    }
    const std::size_t chunks = threads;
    detail::parallel_for(chunks, threads, [&](std::size_t c) {
        Partial& p = partial[c];
        Propagator<i128> fast(m, max_power, dense);
        std::unique_ptr<Propagator<BigInt>> slow;
        std::vector<i128> sd, ad;
        std::vector<BigInt> sdb, adb;
        for (std::size_t start = c; start < m.dim; start += chunks) {
            try {
                fast.run(static_cast<std::uint32_t>(start), sd, ad);
                for (std::size_t d = 1; d <= max_power; ++d) {
                    i128 t;
                    if (__builtin_add_overflow(p.s[d], sd[d], &t)) {
                        p.sbig[d] += big(p.s[d]);
                        p.s[d] = sd[d];
                    } else {
                        p.s[d] = t;
                    }
                    if (__builtin_add_overflow(p.a[d], ad[d], &t)) {
                        p.abig[d] += big(p.a[d]);
                        p.a[d] = ad[d];
                    } else {
                        p.a[d] = t;
                    }
                }
            } catch (const Overflow&) {
                fast.reset();
                if (!slow) slow = std::make_unique<Propagator<BigInt>>(m, max_power, dense);
                slow->run(static_cast<std::uint32_t>(start), sdb, adb);
                for (std::size_t d = 1; d <= max_power; ++d) {
                    p.sbig[d] += sdb[d];
                    p.abig[d] += adb[d];
                }
            }
        }
    });
    for (const auto& p : partial)
        for (std::size_t d = 1; d <= max_power; ++d) {
            out.signed_traces[d] += p.sbig[d] + big(p.s[d]);
            out.abs_traces[d] += p.abig[d] + big(p.a[d]);
        }
    return out;
}

}  // namespace cyclebal::detail
