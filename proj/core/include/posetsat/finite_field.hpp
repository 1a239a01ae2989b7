#pragma once

#include <cstdint>
#include <vector>

namespace posetsat {

// Arithmetic in F_q through lookup tables. Elements are 0..q-1; for prime q
// they are residues, for q = p^e they are base-p digit strings of polynomials
// modulo a fixed irreducible polynomial of degree e.
class GaloisField {
public:
    static constexpr int max_order = 32;

    // Shared immutable instance; throws ValidationError unless q is a prime
    // power no larger than max_order.
    static const GaloisField& get(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    // Multiplicative inverse; a must be non-zero.
    std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

private:
    explicit GaloisField(int q);

    int q_;
    int p_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

}  // namespace posetsat
