#pragma once

#include "posetsat/family.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace posetsat {

// Canonical element encoding. Boolean and rpower elements store their n
// coordinates; a subspace of dimension k stores its reduced row echelon basis
// as k rows of n field elements, row-major. Ordering compares rank first and
// then the payload lexicographically, which is the canonical total order.
struct ElementCode {
    int rank = 0;
    std::vector<std::uint8_t> payload;

    auto operator<=>(const ElementCode&) const = default;
};

struct ElementCodeHash {
    std::size_t operator()(const ElementCode& x) const;
};

enum class Relation { less, greater, equal, incomparable };

std::string relation_name(Relation r);

Relation compare(const FamilySpec& spec, const ElementCode& x, const ElementCode& y);

inline bool comparable(const FamilySpec& spec, const ElementCode& x, const ElementCode& y) {
    Relation r = compare(spec, x, y);
    return r == Relation::less || r == Relation::greater;
}

// Digit string for boolean/rpower ("0121", "()" when n = 0); "[r1|r2|...]"
// of row digit strings for subspaces ("[]" for the zero subspace).
std::string encode(const FamilySpec& spec, const ElementCode& x);
ElementCode decode(const FamilySpec& spec, std::string_view text);

// Checks shape and canonical form; throws ValidationError otherwise.
void check_element(const FamilySpec& spec, const ElementCode& x);

ElementCode bottom_element(const FamilySpec& spec);
ElementCode top_element(const FamilySpec& spec);

ElementCode from_digits(std::vector<std::uint8_t> digits);

// Number of coordinates equal to 2 (the slice index for {0,1,2}^n).
int count_twos(const ElementCode& x);

// Elements covering x, sorted in canonical order.
std::vector<ElementCode> upper_covers(const FamilySpec& spec, const ElementCode& x);

// Calls fn on every element of rank i in canonical order.
void for_each_in_level(const FamilySpec& spec, int i, const std::function<void(const ElementCode&)>& fn);

// Row reduction helpers for subspaces of F_q^n (rows given row-major).
namespace subspace {

// Reduced row echelon form of the span of the given rows; zero rows dropped.
ElementCode reduce(int n, int q, std::vector<std::uint8_t> rows);
bool contains_vector(int n, int q, const ElementCode& x, const std::uint8_t* v);
bool is_contained(int n, int q, const ElementCode& x, const ElementCode& y);

}  // namespace subspace

}  // namespace posetsat
