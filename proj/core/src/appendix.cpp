#include "posetsat/appendix.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"

#include <cmath>
#include <string>

namespace posetsat {

namespace {

std::string ratio_text(const Rational& r) {
    return fraction_string(r);
}

long ceil_half(long v) { return (v + 1) / 2; }

}  // namespace

CheckReport check_log_concavity(long n, long r) {
    if (n < 0 || r < 1) {
        throw ValidationError("log-concavity check needs n >= 0 and r >= 1");
    }
    CheckReport report;
    report.check = "log_concavity";
    report.n = n;
    report.details["r"] = r;
    std::vector<Integer> a = grid_level_sizes(n, r);
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i - 1] * a[i + 1] > a[i] * a[i]) {
            report.violations.push_back("i=" + std::to_string(i));
        }
    }
    return report;
}

Rational spread_weight(long n, long i, long s) {
    return make_rational(i - 2 * s, i - s) + make_rational(n - i + s, i - s + 1);
}

CheckReport check_ratio_bounds(long n) {
    if (n < 5) {
        throw ValidationError("ratio bounds are stated for n >= 5");
    }
    CheckReport report;
    report.check = "ratio_bounds";
    report.n = n;
    std::vector<Integer> l = grid_level_sizes(n, 2);
    auto ratio = [&](long i) { return make_rational(l[i + 1], l[i]); };
    auto fail = [&](const std::string& what) { report.violations.push_back(what); };

    for (long i = 1; i <= n - 3; ++i) {
        Rational lower = make_rational(n + 1, i + 1);
        long c = ceil_half(i);
        Rational upper = make_rational(c - i / 2, c) + make_rational(n - c, ceil_half(i + 2));
        Rational x = ratio(i);
        if (x < lower || x > upper) {
            fail("low-range ratio at i=" + std::to_string(i) + " is " + ratio_text(x));
        }
        for (long s = 0; s + 1 <= i / 2; ++s) {
            if (spread_weight(n, i, s + 1) < spread_weight(n, i, s)) {
                fail("f decreases at i=" + std::to_string(i) + ", s=" + std::to_string(s));
            }
        }
        if (spread_weight(n, i, 0) != lower || spread_weight(n, i, i / 2) != upper) {
            fail("f endpoints differ from the stated bounds at i=" + std::to_string(i));
        }
    }

    {
        long i = n - 2;
        Rational x = ratio(i);
        Rational lower = make_rational(n + 2, n);
        Rational upper = make_rational(4 * n + 7, 4 * n - 2);
        if (x < lower || x > upper) {
            fail("ratio at i=n-2 is " + ratio_text(x));
        }
        long turn = (n - 2) / 3;
        for (long s = 0; s + 1 <= i / 2; ++s) {
            Rational step = spread_weight(n, i, s + 1) - spread_weight(n, i, s);
            if (s + 1 <= turn && step < 0) {
                fail("f decreases before the turning point at s=" + std::to_string(s));
            }
            if (s >= turn && step > 0) {
                fail("f increases after the turning point at s=" + std::to_string(s));
            }
        }
        for (long s = 0; s <= i / 2; ++s) {
            if (spread_weight(n, i, s) < lower) {
                fail("f is below the lower bound at i=n-2, s=" + std::to_string(s));
            }
        }
    }

    // The ratio bound only needs the average of f over the level, so f itself
    // may overshoot it at an integer s near (n-2)/3. That is recorded, not
    // treated as a violation.
    {
        long i = n - 2;
        Rational upper = make_rational(4 * n + 7, 4 * n - 2);
        Rational peak = 0;
        long peak_at = 0;
        for (long s = 0; s <= i / 2; ++s) {
            if (spread_weight(n, i, s) > peak) {
                peak = spread_weight(n, i, s);
                peak_at = s;
            }
        }
        report.details["f_peak_n_minus_2"] = fraction_string(peak);
        report.details["f_peak_s"] = peak_at;
        if (peak > upper) {
            report.notes.push_back("max f(s) at i=n-2 is " + fraction_string(peak) + " at s=" +
                                   std::to_string(peak_at) + ", above (4n+7)/(4n-2); the ratio itself is within bounds");
        }
    }

    {
        long i = n - 1;
        Rational x = ratio(i);
        long c = ceil_half(n - 1);
        Rational lower = make_rational(c - (n - 1) / 2, c) + make_rational((n + 1) / 2, ceil_half(n + 1));
        Rational upper = make_rational(n + 1, n);
        if (x < lower || x > upper) {
            fail("ratio at i=n-1 is " + ratio_text(x));
        }
        for (long s = 0; s + 1 <= (n - 1) / 2; ++s) {
            if (spread_weight(n, i, s + 1) >= spread_weight(n, i, s)) {
                fail("f does not decrease at i=n-1, s=" + std::to_string(s));
            }
        }
        if (spread_weight(n, i, 0) != upper || spread_weight(n, i, (n - 1) / 2) != lower) {
            fail("f endpoints differ from the stated bounds at i=n-1");
        }
    }
    return report;
}

double subspace_growth_exponent(long n, long q) {
    if (n < 1) {
        throw ValidationError("growth exponent needs n >= 1");
    }
    Integer g = galois_number(n, q);
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, g.get_mpz_t());
    double log2g = std::log2(mantissa) + static_cast<double>(exponent);
    return log2g / std::log2(static_cast<double>(q)) / static_cast<double>(n * n);
}

}  // namespace posetsat
