#pragma once

#include "posetsat/exact.hpp"
#include "posetsat/levels.hpp"

#include <string>
#include <vector>

namespace posetsat {

// Exact weights of the memoryless chain distribution on {0,1,2}^n. From
// x in slice s of level i the chain moves to a given cover with one more 2
// with probability |L_i| w(i,s), and to a given cover with one more 1 with
// probability |L_i| wprime(i,s). Rows run over 0 <= i <= 2n-1 and the valid
// slices max(0, i-n) <= s <= floor(i/2).
class WeightTable {
public:
    explicit WeightTable(int n);

    int n() const { return n_; }
    const LevelProfile& profile() const { return profile_; }

    static bool valid(int n, int i, int s);
    bool valid(int i, int s) const { return valid(n_, i, s); }
    int min_slice(int i) const;
    int max_slice(int i) const { return i / 2; }

    // Zero for (i, s) outside the table.
    Rational w(int i, int s) const;
    Rational wprime(int i, int s) const;

    // Transition probability to a single cover of the given kind.
    Rational to_more_twos(int i, int s) const;
    Rational to_same_twos(int i, int s) const;

    // "i,s,w,wprime" with one row per valid entry.
    std::string csv() const;

private:
    int n_;
    LevelProfile profile_;
    std::vector<std::vector<Rational>> w_;
    std::vector<std::vector<Rational>> wprime_;
};

}  // namespace posetsat
