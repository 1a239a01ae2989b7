#include "posetsat/exact.hpp"

#include "posetsat/errors.hpp"

#include <cmath>
#include <string>

namespace posetsat {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Integer binomial_at_most(long n, long j) {
    if (j < 0 || n < 0) {
        return 0;
    }
    if (j > n) {
        j = n;
    }
    Integer sum = 0;
    Integer term = 1;
    for (long r = 0; r <= j; ++r) {
        sum += term;
        term *= (n - r);
        term /= (r + 1);
    }
    return sum;
}

Integer power(long base, unsigned long exponent) {
    Integer b = base;
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exponent);
    return result;
}

std::string to_string(const Integer& value) {
    return value.get_str();
}

std::string fraction_string(const Rational& value) {
    Rational canonical = value;
    canonical.canonicalize();
    return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto fail = [&] { return ValidationError("not a rational number: '" + s + "'"); };
    if (s.empty()) {
        throw fail();
    }
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Integer num(s.substr(0, slash), 10);
            Integer den(s.substr(slash + 1), 10);
            if (den == 0) {
                throw fail();
            }
            return make_rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            return Rational(Integer(s, 10));
        }
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative || (!whole.empty() && whole[0] == '+')) {
            whole = whole.substr(1);
        }
        if (whole.empty()) {
            whole = "0";
        }
        if (frac.empty()) {
            frac = "0";
        }
        for (char c : whole + frac) {
            if (c < '0' || c > '9') {
                throw fail();
            }
        }
        Integer den = power(10, frac.size());
        Integer num = Integer(whole, 10) * den + Integer(frac, 10);
        if (negative) {
            num = -num;
        }
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw fail();
    }
}

double to_double(const Rational& value) {
    return value.get_d();
}

Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

// Splits x into a mantissa of at most 53 bits and an exponent so that
// mantissa * 2^exponent brackets x from the requested side.
void split_mantissa(const Integer& x, bool round_up, Integer& mantissa, unsigned long& exponent) {
    std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    exponent = bits > 53 ? bits - 53 : 0;
    mantissa = x >> exponent;
    if (round_up && (Integer(mantissa << exponent) != x)) {
        mantissa += 1;
    }
}

}  // namespace

Rational log2_upper(const Integer& x, unsigned fraction_bits) {
    if (x < 1) {
        throw ValidationError("log2_upper requires x >= 1");
    }
    Integer mantissa;
    unsigned long exponent = 0;
    split_mantissa(x, true, mantissa, exponent);

    // 2^(a / 2^b) >= mantissa  <=>  2^a >= mantissa^(2^b)
    unsigned long scale = 1UL << fraction_bits;
    Integer lifted;
    mpz_pow_ui(lifted.get_mpz_t(), mantissa.get_mpz_t(), scale);
    double estimate = std::log2(mantissa.get_d());
    long a = static_cast<long>(std::ceil(estimate * static_cast<double>(scale))) + 1;
    if (a < 0) {
        a = 0;
    }
    auto two_pow = [](long e) { return Integer(Integer(1) << static_cast<unsigned long>(e)); };
    while (two_pow(a) < lifted) {
        ++a;
    }
    while (a > 0 && two_pow(a - 1) >= lifted) {
        --a;
    }
    return make_rational(Integer(a) + Integer(exponent) * scale, Integer(scale));
}

Rational log2_lower(const Integer& x, unsigned fraction_bits) {
    if (x < 1) {
        throw ValidationError("log2_lower requires x >= 1");
    }
    Integer mantissa;
    unsigned long exponent = 0;
    split_mantissa(x, false, mantissa, exponent);

    unsigned long scale = 1UL << fraction_bits;
    Integer lifted;
    mpz_pow_ui(lifted.get_mpz_t(), mantissa.get_mpz_t(), scale);
    double estimate = std::log2(mantissa.get_d());
    long a = static_cast<long>(std::floor(estimate * static_cast<double>(scale))) - 1;
    if (a < 0) {
        a = 0;
    }
    auto two_pow = [](long e) { return Integer(Integer(1) << static_cast<unsigned long>(e)); };
    while (a > 0 && two_pow(a) > lifted) {
        --a;
    }
    while (two_pow(a + 1) <= lifted) {
        ++a;
    }
    return make_rational(Integer(a) + Integer(exponent) * scale, Integer(scale));
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor(const Rational& value) {
    return floor_div(value.get_num(), value.get_den());
}

Integer ceil(const Rational& value) {
    return ceil_div(value.get_num(), value.get_den());
}

}  // namespace posetsat
