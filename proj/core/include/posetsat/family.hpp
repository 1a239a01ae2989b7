#pragma once

#include "posetsat/exact.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace posetsat {

enum class Family { boolean, subspace, rpower };

// Boolean lattice on n points, subspaces of F_q^n, or {0,...,r}^n.
struct FamilySpec {
    Family family = Family::boolean;
    int n = 0;
    int q = 0;
    int r = 0;

    static FamilySpec boolean_lattice(int n) { return {Family::boolean, n, 0, 0}; }
    static FamilySpec subspaces(int n, int q) { return {Family::subspace, n, q, 0}; }
    static FamilySpec grid(int n, int r) { return {Family::rpower, n, 0, r}; }
    static FamilySpec multiset(int n) { return grid(n, 2); }

    // Rank of the top element: n, n, or r*n.
    int top_rank() const;
    // Number of values a single coordinate may take (2 for boolean, r+1 for rpower).
    int radix() const;

    bool operator==(const FamilySpec&) const = default;
};

// Throws ValidationError on a malformed spec.
void validate(const FamilySpec& spec);

bool is_prime_power(long q);

Integer ground_size(const FamilySpec& spec);

std::string family_name(Family family);
Family parse_family(const std::string& name);

// Short human label such as "P(4)", "V(2,3)" or "{0..2}^3".
std::string describe(const FamilySpec& spec);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);

}  // namespace posetsat
