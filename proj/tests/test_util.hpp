#ifndef CONICA_TEST_UTIL_HPP
#define CONICA_TEST_UTIL_HPP

#include <conica/multipoly.hpp>

// Deterministic pseudo-random source for property tests (fixed seed, no
// platform dependence).
struct TestRng {
    unsigned long long state;
    explicit TestRng(unsigned long long seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}
    unsigned long long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
    // uniform in [0, n)
    long below(long n) { return static_cast<long>(next() % static_cast<unsigned long long>(n)); }
    conica::Rational rational(long max_abs = 6) {
        long n = below(2 * max_abs + 1) - max_abs;
        long d = below(3) + 1;
        return conica::Rational(n, d);
    }
    conica::MultiPoly poly(const conica::RegistryPtr& reg, int max_terms = 5, int max_deg = 3) {
        conica::MultiPoly f(reg);
        int terms = static_cast<int>(below(max_terms)) + 1;
        for (int t = 0; t < terms; ++t) {
            conica::Exponents e(reg->size(), 0);
            int deg = static_cast<int>(below(max_deg + 1));
            for (int d = 0; d < deg; ++d) e[static_cast<std::size_t>(below(static_cast<long>(reg->size())))] += 1;
            f.add_term(e, rational());
        }
        return f;
    }
    conica::MultiPoly nonzero_poly(const conica::RegistryPtr& reg, int max_terms = 5,
                                   int max_deg = 3) {
        for (;;) {
            auto f = poly(reg, max_terms, max_deg);
            if (!f.is_zero()) return f;
        }
    }
};

#endif
