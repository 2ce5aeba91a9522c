#include <doctest.h>

#include <array>
#include <numeric>

#include "cyclebal/rng.hpp"

using namespace cyclebal;

TEST_CASE("derived seeds separate streams") {
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
    CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
    std::uint64_t s = 0;
    CHECK(splitmix64(s) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("bounded draws and shuffles") {
    Rng rng(123);
    std::array<int, 5> hist{};
    for (int i = 0; i < 50000; ++i) ++hist[rng.below(5)];
    for (int h : hist) CHECK(h == doctest::Approx(10000).epsilon(0.05));
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    std::array<int, 10> items;
    std::iota(items.begin(), items.end(), 0);
    rng.shuffle(std::span<int>(items));
    std::array<int, 10> sorted = items;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 10; ++i) CHECK(sorted[i] == i);

    Rng a(9), b(9);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
}
