// Symmetric congruence normal forms and everything built on them:
// orthonormal / symplectic / diag(1,..,1,delta) code bases, the
// distance-preserving dimension reduction, canonical codes per type,
// transporters between same-type codes, and stabilizer elements.
#pragma once

#include "lcdkit/code.hpp"

namespace lcdkit {

enum class CongruenceShape { AlternatingJBlocks, IdentityBlock, DiagOneDelta };

struct CongruenceResult {
    Matrix q_transform;     // invertible; q_transform * M * q_transform^T = normal
    Matrix normal;
    std::size_t rank;
    CongruenceShape shape;
    Element delta;          // odd p only: 1 or the canonical nonsquare (1 if rank 0)
};

// Congruence normalization of a symmetric matrix.
// GF(2): diag[J2,...,J2,0,..] when the diagonal is zero (a congruence
// invariant), else diag[1,..,1,0,..].
// Odd p: diag[1,..,1,delta,0,..] with delta normalized to 1 or the
// canonical nonsquare.
CongruenceResult congruence_normalize(const Matrix& m);

enum class BasisKind { Orthonormal, Symplectic, DiagOneDelta };

struct LcdBasis {
    Matrix rows;      // k x n, spans the originating code
    BasisKind kind;
    Element delta;    // DiagOneDelta only
};

// A generator basis realizing the code's Gram normal form:
// GF(2) odd-like -> orthonormal, GF(2) even-like -> symplectic,
// odd p -> diag(1,..,1,delta). Requires is_lcd(c), k >= 1.
LcdBasis lcd_basis(const LinearCode& c);

// A symplectic basis whose pairs additionally agree at the given coordinate.
// Binary even-like complementary-dual codes only.
LcdBasis adjusted_symplectic_basis(const LinearCode& c, std::size_t coord);

// An [n, k-1] complementary-dual code with minimum distance >= that of c.
// Binary, is_lcd(c), k >= 2.
LinearCode shorten_lcd(const LinearCode& c, std::size_t coord = 0);

struct CanonicalPair {
    Matrix gen;     // k x n
    Matrix parity;  // (n-k) x n, gen * parity^T = 0
};

// The reference generator/parity pair of the requested type.
// OE requires n-k even, EO requires k even, always 0 < k < n.
CanonicalPair canonical_code(LcdType t, std::size_t n, std::size_t k, const Field& f);

// An orthogonal Q with rowspace(gen1 * Q) = rowspace(gen2); both codes must
// be complementary-dual of the same type over the same field.
Matrix transporter(const LinearCode& c1, const LinearCode& c2);

// Q = [G;H]^{-1} diag(q1,q2) [G;H]: orthogonal, fixes c and its dual.
// q1 must preserve G G^T under congruence, q2 likewise for H H^T.
Matrix stabilizer_element(const LinearCode& c, const Matrix& q1, const Matrix& q2);

// True iff q is orthogonal and maps the code onto itself.
bool in_stabilizer(const LinearCode& c, const Matrix& q);

}  // namespace lcdkit
