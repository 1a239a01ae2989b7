#pragma once

#include "posetsat/exact.hpp"
#include "posetsat/family.hpp"

#include <string>
#include <vector>

namespace posetsat {

// Number of i-dimensional subspaces of F_q^n; throws unless 0 <= i <= n.
Integer gaussian_binomial(long n, long i, long q);

// Total number of subspaces of F_q^n.
Integer galois_number(long n, long q);

// |L_i^s| in {0,1,2}^n: vectors with coordinate sum i and exactly s twos.
// Zero outside max(0, i-n) <= s <= floor(i/2).
Integer level_slice_size(long n, long i, long s);

// Number of vectors in {0,1,2}^n with coordinate sum i; zero outside [0, 2n].
Integer multiset_level(long n, long i);

// Coefficients of (1 + x + ... + x^r)^n, i.e. the level sizes of {0..r}^n.
std::vector<Integer> grid_level_sizes(long n, long r);

// Level size by family; throws ValidationError when i is outside [0, N].
Integer level_size(const FamilySpec& spec, long i);
std::vector<Integer> level_sizes(const FamilySpec& spec);

// Level sizes plus, for {0,1,2}^n, the slice sizes and their cumulative sums.
class LevelProfile {
public:
    explicit LevelProfile(const FamilySpec& spec);

    const FamilySpec& spec() const { return spec_; }
    int top_rank() const { return static_cast<int>(sizes_.size()) - 1; }
    const std::vector<Integer>& sizes() const { return sizes_; }
    const Integer& size(int i) const { return sizes_.at(i); }
    Integer total() const;

    bool has_slices() const { return !slices_.empty(); }
    // |L_i^s|, zero outside the valid range (also for out of range i).
    Integer slice(int i, int s) const;
    // |L_i^{>=s}| and |L_i^{<=s}|.
    Integer slices_at_least(int i, int s) const;
    Integer slices_at_most(int i, int s) const;

    // "i,size" CSV with header.
    std::string csv() const;

private:
    FamilySpec spec_;
    std::vector<Integer> sizes_;
    std::vector<std::vector<Integer>> slices_;
};

}  // namespace posetsat
