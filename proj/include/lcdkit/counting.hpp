// Exact arbitrary-precision evaluation of the group orders, Gaussian
// binomials, orbit-size counts of complementary-dual codes, and the
// asymptotic density constants they converge to.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "lcdkit/code.hpp"

namespace lcdkit::counting {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Number of k-dimensional subspaces of an n-dimensional space over a
// q-element field; defined for any integer q >= 2.
BigInt gaussian_binomial(unsigned n, unsigned k, const BigInt& q);

// |O_k| over GF(2): matrices with Q Q^T = I.
BigInt order_orthogonal_gf2(unsigned k);

// |Sp_k| over GF(2): matrices preserving the block-J2 alternating form.
// k must be even.
BigInt order_symplectic_gf2(unsigned k);

// |O_n^delta(q)| for odd prime q: matrices preserving diag(1,..,1,delta)
// under congruence, keyed by delta_class = legendre(delta) in {+1,-1}.
BigInt order_orthogonal_q(unsigned n, int delta_class, std::uint32_t q);

// Exact |LCD[n,k]| over GF(2), total or restricted to one type.
// OE is 0 when n-k is odd, EO is 0 when k is odd. Requires 0 < k < n.
BigInt count_lcd_binary(unsigned n, unsigned k, std::optional<LcdType> type = std::nullopt);

// Exact |LCD[n,k]_q| for odd prime q, total or one square class
// (LcdType::Plus / LcdType::Minus). Requires 0 < k < n.
BigInt count_lcd_q(unsigned n, unsigned k, std::uint32_t q,
                   std::optional<LcdType> sign = std::nullopt);

// Partial product g_{q,m} = prod_{i=1..m} (1 - q^-i); strictly decreasing
// in m with a positive limit.
BigRational g_partial(const BigInt& q, unsigned m);

// Finite density ratios and the constants they approach.
enum class RatioKind {
    OddOddOverPower,       // |LCD_oo[n,k]| / 2^{k(n-k)}          -> 1/g_{4,inf}
    OddOddOverSubspaces,   // |LCD_oo[n,k]| / [n k]_2             -> 1/prod(1+2^-i)
    OddEvenOverSubspaces,  // 2^{n-k} |LCD_oe[n,k]| / [n k]_2     -> 1/prod(1+2^-i)
    EvenOddOverSubspaces,  // 2^k |LCD_eo[n,k]| / [n k]_2         -> 1/prod(1+2^-i)
    TotalOverSubspaces,    // |LCD[n,k]| / [n k]_2                -> 1/prod(1+2^-i)
    PlusOverSubspaces,     // |LCD_+[n,k]_q| / [n k]_q            -> 1/(2 prod(1+q^-i))
    MinusOverSubspaces,    // |LCD_-[n,k]_q| / [n k]_q            -> 1/(2 prod(1+q^-i))
    TotalOverSubspacesQ,   // |LCD[n,k]_q| / [n k]_q              -> 1/prod(1+q^-i)
};

struct AsymptoticReport {
    unsigned n = 0, k = 0;
    std::uint32_t q = 2;
    RatioKind kind = RatioKind::TotalOverSubspaces;
    unsigned terms = 0;            // m used for the partial products
    BigRational partial_product;   // m-term partial product behind the limit
    BigRational limit_lower;       // rigorous rational bracket of the limit
    BigRational limit_upper;
    BigRational ratio;             // exact finite ratio at (n, k)

    double limit_estimate() const;
    // Upper bound on |ratio - limit|, usable for exact-threshold checks.
    BigRational gap_upper() const;
};

// Evaluates the selected finite ratio exactly and brackets its limit constant
// to the requested number of decimal digits via partial products with an
// explicit tail bound.
AsymptoticReport asymptotic_ratio(unsigned n, unsigned k, std::uint32_t q, RatioKind kind,
                                  unsigned digits = 12);

}  // namespace lcdkit::counting
