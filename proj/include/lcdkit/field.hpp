// Exact arithmetic in a prime field GF(p), including the quadratic
// character and sum-of-two-squares decompositions used by the
// odd-characteristic code constructions.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace lcdkit {

// A residue in [0, p). Reduction is enforced at the Field boundary.
using Element = std::uint32_t;

class Field {
public:
    // Throws std::invalid_argument unless p is prime (p = 2 allowed).
    explicit Field(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    bool is_binary() const { return p_ == 2; }

    Element reduce(std::int64_t x) const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;  // throws on a = 0
    Element pow(Element a, std::uint64_t e) const;

    // Legendre character: 0 -> 0, nonzero squares -> +1, nonsquares -> -1.
    // Odd p only.
    int legendre(Element x) const;

    // The canonical nonsquare: smallest positive residue with legendre -1.
    // Odd p only.
    Element nonsquare() const;

    // A square root of x (x must satisfy legendre(x) >= 0). Odd p only.
    // Returns the smaller of the two roots.
    Element sqrt(Element x) const;

    // Deterministic (x, y) with x^2 + y^2 = z: smallest x in residue order
    // for which z - x^2 is a square, then the smaller matching y. Odd p only.
    std::pair<Element, Element> two_squares(Element z) const;

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return p_ != other.p_; }

private:
    void require_odd(const char* op) const;

    std::uint32_t p_;
    std::uint32_t nonsquare_ = 0;  // 0 when p = 2
};

}  // namespace lcdkit
