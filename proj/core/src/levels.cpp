#include "posetsat/levels.hpp"

#include "posetsat/errors.hpp"

#include <algorithm>

namespace posetsat {

Integer gaussian_binomial(long n, long i, long q) {
    if (n < 0 || i < 0 || i > n) {
        throw ValidationError("gaussian binomial needs 0 <= i <= n");
    }
    if (q < 2) {
        throw ValidationError("gaussian binomial needs q >= 2");
    }
    Integer num = 1;
    Integer den = 1;
    for (long j = 0; j < i; ++j) {
        num *= power(q, static_cast<unsigned long>(n - j)) - 1;
        den *= power(q, static_cast<unsigned long>(j + 1)) - 1;
    }
    Integer out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Integer galois_number(long n, long q) {
    // G_{m+1} = 2 G_m + (q^m - 1) G_{m-1}
    if (n == 0) {
        return 1;
    }
    Integer prev = 1;
    Integer cur = 2;
    for (long m = 1; m < n; ++m) {
        Integer next = 2 * cur + (power(q, static_cast<unsigned long>(m)) - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Integer level_slice_size(long n, long i, long s) {
    if (s < 0 || s < i - n || 2 * s > i) {
        return 0;
    }
    return binomial(n, i - s) * binomial(i - s, s);
}

Integer multiset_level(long n, long i) {
    if (i < 0 || i > 2 * n) {
        return 0;
    }
    Integer sum = 0;
    for (long s = std::max(0L, i - n); 2 * s <= i; ++s) {
        sum += level_slice_size(n, i, s);
    }
    return sum;
}

std::vector<Integer> grid_level_sizes(long n, long r) {
    // With f = (1 + ... + x^r)^n, (1 + ... + x^r) f' = n (1 + 2x + ... + r x^(r-1)) f
    // gives i a_i = sum_{j=1}^{r} (n j - i + j) a_{i-j}.
    long top = n * r;
    std::vector<Integer> a(top + 1, 0);
    a[0] = 1;
    for (long i = 1; i <= top; ++i) {
        Integer acc = 0;
        for (long j = 1; j <= r && j <= i; ++j) {
            acc += (n * j - i + j) * a[i - j];
        }
        mpz_divexact_ui(a[i].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return a;
}

Integer level_size(const FamilySpec& spec, long i) {
    validate(spec);
    if (i < 0 || i > spec.top_rank()) {
        throw ValidationError("level index " + std::to_string(i) + " outside [0, " +
                              std::to_string(spec.top_rank()) + "]");
    }
    switch (spec.family) {
        case Family::boolean: return binomial(spec.n, i);
        case Family::subspace: return gaussian_binomial(spec.n, i, spec.q);
        case Family::rpower:
            if (spec.r == 2) {
                return multiset_level(spec.n, i);
            }
            return grid_level_sizes(spec.n, spec.r)[i];
    }
    return 0;
}

std::vector<Integer> level_sizes(const FamilySpec& spec) {
    validate(spec);
    if (spec.family == Family::rpower) {
        return grid_level_sizes(spec.n, spec.r);
    }
    std::vector<Integer> out;
    for (int i = 0; i <= spec.top_rank(); ++i) {
        out.push_back(level_size(spec, i));
    }
    return out;
}

LevelProfile::LevelProfile(const FamilySpec& spec) : spec_(spec), sizes_(level_sizes(spec)) {
    if (spec.family == Family::rpower && spec.r == 2) {
        slices_.resize(sizes_.size());
        for (int i = 0; i <= top_rank(); ++i) {
            for (int s = 0; 2 * s <= i; ++s) {
                slices_[i].push_back(level_slice_size(spec.n, i, s));
            }
        }
    }
}

Integer LevelProfile::total() const {
    Integer sum = 0;
    for (const Integer& x : sizes_) {
        sum += x;
    }
    return sum;
}

Integer LevelProfile::slice(int i, int s) const {
    if (slices_.empty()) {
        throw ValidationError("slices are only defined for {0,1,2}^n");
    }
    if (i < 0 || i > top_rank() || s < 0 || s >= static_cast<int>(slices_[i].size())) {
        return 0;
    }
    return slices_[i][s];
}

Integer LevelProfile::slices_at_least(int i, int s) const {
    Integer sum = 0;
    if (i < 0 || i > top_rank()) {
        return sum;
    }
    for (int t = std::max(s, 0); 2 * t <= i; ++t) {
        sum += slice(i, t);
    }
    return sum;
}

Integer LevelProfile::slices_at_most(int i, int s) const {
    Integer sum = 0;
    if (i < 0 || i > top_rank()) {
        return sum;
    }
    for (int t = 0; t <= s && 2 * t <= i; ++t) {
        sum += slice(i, t);
    }
    return sum;
}

std::string LevelProfile::csv() const {
    std::string out = "i,size\n";
    for (int i = 0; i <= top_rank(); ++i) {
        out += std::to_string(i) + "," + to_string(sizes_[i]) + "\n";
    }
    return out;
}

}  // namespace posetsat
