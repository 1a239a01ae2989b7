#include "posetsat/finite_field.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/family.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

namespace posetsat {

namespace {

using Poly = std::vector<int>;  // coefficients, lowest degree first

Poly poly_mod(Poly a, const Poly& m, int p) {
    // m is monic
    int dm = static_cast<int>(m.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
        int c = a[d] % p;
        if (c == 0) {
            continue;
        }
        for (int t = 0; t <= dm; ++t) {
            a[d - dm + t] = ((a[d - dm + t] - c * m[t]) % p + p) % p;
        }
    }
    a.resize(dm);
    return a;
}

Poly digits_of(int value, int p, int length) {
    Poly out(length);
    for (int t = 0; t < length; ++t) {
        out[t] = value % p;
        value /= p;
    }
    return out;
}

int value_of(const Poly& digits, int p) {
    int v = 0;
    for (int t = static_cast<int>(digits.size()) - 1; t >= 0; --t) {
        v = v * p + digits[t];
    }
    return v;
}

bool is_zero(const Poly& a) {
    for (int c : a) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

// Monic polynomial of degree e over F_p with no monic factor of degree <= e/2.
Poly find_irreducible(int p, int e) {
    int count = 1;
    for (int t = 0; t < e; ++t) {
        count *= p;
    }
    for (int low = 0; low < count; ++low) {
        Poly f = digits_of(low, p, e);
        f.push_back(1);
        bool irreducible = true;
        for (int d = 1; d <= e / 2 && irreducible; ++d) {
            int divisors = 1;
            for (int t = 0; t < d; ++t) {
                divisors *= p;
            }
            for (int g_low = 0; g_low < divisors; ++g_low) {
                Poly g = digits_of(g_low, p, d);
                g.push_back(1);
                if (is_zero(poly_mod(f, g, p))) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) {
            return f;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q), p_(0) {
    int p = 2;
    while (q % p != 0) {
        ++p;
    }
    p_ = p;
    int e = 0;
    for (int v = q; v > 1; v /= p) {
        ++e;
    }
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    Poly modulus = e > 1 ? find_irreducible(p, e) : Poly{0, 1};
    for (int a = 0; a < q; ++a) {
        Poly da = digits_of(a, p, e);
        for (int b = 0; b < q; ++b) {
            Poly db = digits_of(b, p, e);
            Poly sum(e);
            for (int t = 0; t < e; ++t) {
                sum[t] = (da[t] + db[t]) % p;
            }
            add_[a * q + b] = static_cast<std::uint8_t>(value_of(sum, p));
            Poly prod(2 * e, 0);
            for (int s = 0; s < e; ++s) {
                for (int t = 0; t < e; ++t) {
                    prod[s + t] = (prod[s + t] + da[s] * db[t]) % p;
                }
            }
            mul_[a * q + b] = static_cast<std::uint8_t>(value_of(poly_mod(prod, modulus, p), p));
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) {
                neg_[a] = static_cast<std::uint8_t>(b);
            }
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
            }
        }
    }
}

const GaloisField& GaloisField::get(int q) {
    if (!is_prime_power(q) || q > max_order) {
        throw ValidationError("finite field arithmetic needs a prime power q <= " +
                              std::to_string(max_order) + ", got " + std::to_string(q));
    }
    static std::array<std::unique_ptr<GaloisField>, max_order + 1> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    if (!cache[q]) {
        cache[q].reset(new GaloisField(q));
    }
    return *cache[q];
}

}  // namespace posetsat
