#include "posetsat/weights.hpp"

#include "posetsat/errors.hpp"

#include <algorithm>

namespace posetsat {

WeightTable::WeightTable(int n) : n_(n), profile_(n >= 1 ? FamilySpec::multiset(n) : FamilySpec::multiset(1)) {
    if (n < 1) {
        throw ValidationError("weight table needs n >= 1");
    }
    const int rows = 2 * n;
    w_.resize(rows);
    wprime_.resize(rows);
    for (int i = 0; i < rows; ++i) {
        const Integer& li = profile_.size(i);
        const Integer& lnext = profile_.size(i + 1);
        for (int s = 0; s <= i / 2; ++s) {
            Rational w = 0;
            Rational wp = 0;
            if (valid(i, s)) {
                Integer common = profile_.slice(i, s) * li * lnext;
                if (i - 2 * s > 0) {
                    Integer num = li * profile_.slices_at_least(i + 1, s + 1) - lnext * profile_.slices_at_least(i, s + 1);
                    w = make_rational(num, common * (i - 2 * s));
                }
                if (n - i + s > 0) {
                    Integer num = li * profile_.slices_at_most(i + 1, s) - lnext * profile_.slices_at_most(i, s - 1);
                    wp = make_rational(num, common * (n - i + s));
                }
            }
            w_[i].push_back(w);
            wprime_[i].push_back(wp);
        }
    }
}

bool WeightTable::valid(int n, int i, int s) {
    return i >= 0 && i <= 2 * n - 1 && s >= std::max(0, i - n) && 2 * s <= i;
}

int WeightTable::min_slice(int i) const {
    return std::max(0, i - n_);
}

Rational WeightTable::w(int i, int s) const {
    if (!valid(i, s)) {
        return 0;
    }
    return w_[i][s];
}

Rational WeightTable::wprime(int i, int s) const {
    if (!valid(i, s)) {
        return 0;
    }
    return wprime_[i][s];
}

Rational WeightTable::to_more_twos(int i, int s) const {
    return Rational(profile_.size(i)) * w(i, s);
}

Rational WeightTable::to_same_twos(int i, int s) const {
    return Rational(profile_.size(i)) * wprime(i, s);
}

std::string WeightTable::csv() const {
    std::string out = "i,s,w,wprime\n";
    for (int i = 0; i <= 2 * n_ - 1; ++i) {
        for (int s = min_slice(i); s <= max_slice(i); ++s) {
            out += std::to_string(i) + "," + std::to_string(s) + "," + fraction_string(w(i, s)) + "," +
                   fraction_string(wprime(i, s)) + "\n";
        }
    }
    return out;
}

}  // namespace posetsat
