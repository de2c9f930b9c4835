#include "lcdkit/normal_form.hpp"

#include <algorithm>
#include <cassert>

namespace lcdkit {

namespace {

// Symmetric congruence workspace: every row operation on W is mirrored as a
// column operation and recorded as a row operation on Q, so Q M Q^T = W
// throughout.
struct SymWork {
    Matrix w;
    Matrix q;

    explicit SymWork(const Matrix& m) : w(m), q(Matrix::identity(m.field(), m.rows())) {}

    void swap(std::size_t i, std::size_t j) {
        w.swap_rows(i, j);
        w.swap_cols(i, j);
        q.swap_rows(i, j);
    }
    void add(std::size_t dst, std::size_t src, Element s) {
        w.add_row_multiple(dst, src, s);
        w.add_col_multiple(dst, src, s);
        q.add_row_multiple(dst, src, s);
    }
    void scale(std::size_t i, Element s) {
        w.scale_row(i, s);
        w.scale_col(i, s);
        q.scale_row(i, s);
    }

    bool all_zero_from(std::size_t t) const {
        for (std::size_t i = t; i < w.rows(); ++i) {
            for (std::size_t j = i; j < w.cols(); ++j) {
                if (w.at(i, j) != 0) return false;
            }
        }
        return true;
    }
};

// Moves a unit pair of the zero-diagonal submatrix starting at t into
// positions (t, t+1) and clears it against the remaining rows.
void isolate_alternating_pair(SymWork& sw, std::size_t t) {
    const std::size_t k = sw.w.rows();
    std::size_t pi = k, pj = k;
    for (std::size_t i = t; i < k && pi == k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (sw.w.at(i, j) != 0) {
                pi = i;
                pj = j;
                break;
            }
        }
    }
    assert(pi < k);
    sw.swap(pi, t);      // pj > pi >= t, so the partner's index is unaffected
    sw.swap(pj, t + 1);
    const Field& f = sw.w.field();
    Element unit = f.inv(sw.w.at(t, t + 1));
    if (unit != 1) sw.scale(t, unit);
    for (std::size_t r = t + 2; r < k; ++r) {
        Element a = sw.w.at(r, t);
        if (a != 0) sw.add(r, t + 1, f.neg(a));
        Element b = sw.w.at(r, t + 1);
        if (b != 0) sw.add(r, t, f.neg(b));
    }
}

CongruenceResult normalize_gf2(const Matrix& m) {
    const std::size_t k = m.rows();
    SymWork sw(m);
    bool zero_diag = true;
    for (std::size_t i = 0; i < k; ++i) {
        if (m.at(i, i) != 0) {
            zero_diag = false;
            break;
        }
    }
    std::size_t t = 0;
    if (zero_diag) {
        // A zero diagonal survives congruence over GF(2), so the result is a
        // chain of J2 blocks.
        while (t + 1 < k && !sw.all_zero_from(t)) {
            isolate_alternating_pair(sw, t);
            t += 2;
        }
        return CongruenceResult{std::move(sw.q), std::move(sw.w), t,
                                CongruenceShape::AlternatingJBlocks, 1};
    }
    // Some diagonal entry is 1: reduce to diag[1,..,1,0,..]. Whenever the
    // remaining block has an all-zero diagonal, extract one J2 pair and
    // absorb it with the previous 1 via a 3x3 congruence taking
    // diag[1] (+) J2 to I3.
    while (t < k) {
        std::size_t piv = k;
        for (std::size_t i = t; i < k; ++i) {
            if (sw.w.at(i, i) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < k) {
            sw.swap(piv, t);
            for (std::size_t r = t + 1; r < k; ++r) {
                if (sw.w.at(r, t) != 0) sw.add(r, t, 1);
            }
            t += 1;
            continue;
        }
        if (sw.all_zero_from(t)) break;
        assert(t >= 1);
        isolate_alternating_pair(sw, t);
        sw.add(t, t - 1, 1);
        sw.add(t + 1, t - 1, 1);
        sw.add(t - 1, t, 1);
        sw.add(t - 1, t + 1, 1);
        t += 2;
    }
    return CongruenceResult{std::move(sw.q), std::move(sw.w), t, CongruenceShape::IdentityBlock,
                            1};
}

CongruenceResult normalize_odd(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t k = m.rows();
    SymWork sw(m);
    std::size_t t = 0;
    while (t < k) {
        if (sw.w.at(t, t) == 0) {
            std::size_t piv = k;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (sw.w.at(i, i) != 0) {
                    piv = i;
                    break;
                }
            }
            if (piv < k) {
                sw.swap(piv, t);
            } else {
                // zero diagonal: fold a nonzero off-diagonal entry onto it
                // (2 M_ij != 0 in odd characteristic)
                std::size_t pi = k, pj = k;
                for (std::size_t i = t; i < k && pi == k; ++i) {
                    for (std::size_t j = i + 1; j < k; ++j) {
                        if (sw.w.at(i, j) != 0) {
                            pi = i;
                            pj = j;
                            break;
                        }
                    }
                }
                if (pi == k) break;  // remaining block is zero
                sw.add(pi, pj, 1);
                sw.swap(pi, t);
            }
        }
        Element pinv = f.inv(sw.w.at(t, t));
        for (std::size_t r = t + 1; r < k; ++r) {
            Element a = sw.w.at(r, t);
            if (a != 0) sw.add(r, t, f.neg(f.mul(a, pinv)));
        }
        ++t;
    }
    const std::size_t rank = t;
    // Squares on the diagonal scale to 1, nonsquares to the canonical gamma.
    const Element gamma = f.nonsquare();
    std::vector<std::size_t> gammas;
    for (std::size_t i = 0; i < rank; ++i) {
        Element d = sw.w.at(i, i);
        if (f.legendre(d) == 1) {
            sw.scale(i, f.inv(f.sqrt(d)));
        } else {
            sw.scale(i, f.inv(f.sqrt(f.mul(d, f.inv(gamma)))));
            gammas.push_back(i);
        }
    }
    // A gamma pair becomes a 1 pair through the rotation [[x,y],[-y,x]] with
    // x^2 + y^2 = gamma^{-1}.
    if (gammas.size() >= 2) {
        auto [x, y] = f.two_squares(f.inv(gamma));
        auto rotate = [&](Matrix& mat, std::size_t i, std::size_t j, bool columns) {
            const std::size_t extent = columns ? mat.rows() : mat.cols();
            for (std::size_t c = 0; c < extent; ++c) {
                Element vi = columns ? mat.at(c, i) : mat.at(i, c);
                Element vj = columns ? mat.at(c, j) : mat.at(j, c);
                Element ni = f.add(f.mul(x, vi), f.mul(y, vj));
                Element nj = f.add(f.mul(f.neg(y), vi), f.mul(x, vj));
                if (columns) {
                    mat.set(c, i, ni);
                    mat.set(c, j, nj);
                } else {
                    mat.set(i, c, ni);
                    mat.set(j, c, nj);
                }
            }
        };
        for (std::size_t g = 0; g + 1 < gammas.size(); g += 2) {
            std::size_t i = gammas[g], j = gammas[g + 1];
            rotate(sw.w, i, j, false);
            rotate(sw.w, i, j, true);
            rotate(sw.q, i, j, false);
        }
    }
    Element delta = 1;
    if (gammas.size() % 2 == 1) {
        delta = gamma;
        std::size_t pos = gammas.back();
        if (pos != rank - 1) sw.swap(pos, rank - 1);
    }
    return CongruenceResult{std::move(sw.q), std::move(sw.w), rank,
                            CongruenceShape::DiagOneDelta, delta};
}

void copy_row(Matrix& dst, std::size_t dr, const Matrix& src, std::size_t sr) {
    for (std::size_t c = 0; c < dst.cols(); ++c) dst.set(dr, c, src.at(sr, c));
}

void add_row_into(Matrix& dst, std::size_t dr, const Matrix& src, std::size_t sr) {
    const Field& f = dst.field();
    for (std::size_t c = 0; c < dst.cols(); ++c) {
        dst.set(dr, c, f.add(dst.at(dr, c), src.at(sr, c)));
    }
}

}  // namespace

CongruenceResult congruence_normalize(const Matrix& m) {
    if (!m.is_symmetric()) {
        throw std::invalid_argument("congruence_normalize: matrix not symmetric");
    }
    return m.field().is_binary() ? normalize_gf2(m) : normalize_odd(m);
}

LcdBasis lcd_basis(const LinearCode& c) {
    const std::size_t k = c.dimension();
    if (k < 1) throw std::invalid_argument("lcd_basis: requires k >= 1");
    CongruenceResult res = congruence_normalize(c.generator().gram());
    if (res.rank != k) throw std::invalid_argument("lcd_basis: code is not LCD");
    Matrix rows = res.q_transform.mul(c.generator());
    BasisKind kind;
    switch (res.shape) {
        case CongruenceShape::AlternatingJBlocks: kind = BasisKind::Symplectic; break;
        case CongruenceShape::IdentityBlock: kind = BasisKind::Orthonormal; break;
        default: kind = BasisKind::DiagOneDelta; break;
    }
    return LcdBasis{std::move(rows), kind, res.delta};
}

LcdBasis adjusted_symplectic_basis(const LinearCode& c, std::size_t coord) {
    if (!c.field().is_binary()) {
        throw std::invalid_argument("adjusted_symplectic_basis: binary codes only");
    }
    if (coord >= c.length()) {
        throw std::invalid_argument("adjusted_symplectic_basis: coordinate out of range");
    }
    LcdBasis basis = lcd_basis(c);
    if (basis.kind != BasisKind::Symplectic) {
        throw std::invalid_argument("adjusted_symplectic_basis: code is not even-like");
    }
    Matrix& rows = basis.rows;
    for (std::size_t pair = 0; pair + 1 < rows.rows(); pair += 2) {
        Element a = rows.at(pair, coord);
        Element b = rows.at(pair + 1, coord);
        if (a == b) continue;
        // put the vector carrying the 1 first, then absorb it into its mate
        if (a == 0) rows.swap_rows(pair, pair + 1);
        rows.add_row_multiple(pair + 1, pair, 1);
    }
    return basis;
}

LinearCode shorten_lcd(const LinearCode& c, std::size_t coord) {
    if (!c.field().is_binary()) throw std::invalid_argument("shorten_lcd: binary codes only");
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    if (k < 2) throw std::invalid_argument("shorten_lcd: requires k >= 2");
    if (coord >= n) throw std::invalid_argument("shorten_lcd: coordinate out of range");
    if (!is_lcd(c)) throw std::invalid_argument("shorten_lcd: code is not LCD");
    const Field& f = c.field();

    if (!is_even_like(c)) {
        // drop the last vector of an orthonormal basis
        LcdBasis basis = lcd_basis(c);
        Matrix kept(f, k - 1, n);
        for (std::size_t i = 0; i + 1 < k; ++i) copy_row(kept, i, basis.rows, i);
        return LinearCode(kept);
    }

    bool column_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
        if (c.generator().at(i, coord) != 0) {
            column_zero = false;
            break;
        }
    }
    if (column_zero) {
        // every codeword vanishes at coord: add e_coord to the last pair's
        // first vector, keep the first k-1 vectors of the modified list
        LcdBasis basis = lcd_basis(c);
        Matrix kept(f, k - 1, n);
        for (std::size_t i = 0; i + 1 < k; ++i) copy_row(kept, i, basis.rows, i);
        kept.set(k - 2, coord, f.add(kept.at(k - 2, coord), 1));
        return LinearCode(kept);
    }

    // Some codeword is nonzero at coord: from a coordinate-adjusted
    // symplectic basis (pairs agree at coord), span
    //   {c_1' + c_1 + e_coord}
    //   + {c_i + c_1, c_i' + c_1 : remaining pairs with a 1 at coord}
    //   + {c_i, c_i'            : pairs with a 0 at coord}.
    LcdBasis basis = adjusted_symplectic_basis(c, coord);
    std::vector<std::size_t> ones, zeros;
    for (std::size_t pair = 0; pair < k / 2; ++pair) {
        if (basis.rows.at(2 * pair, coord) != 0) {
            ones.push_back(pair);
        } else {
            zeros.push_back(pair);
        }
    }
    assert(!ones.empty());
    const std::size_t c1 = 2 * ones[0];
    Matrix out(f, k - 1, n);
    std::size_t row = 0;
    copy_row(out, row, basis.rows, c1 + 1);
    add_row_into(out, row, basis.rows, c1);
    out.set(row, coord, f.add(out.at(row, coord), 1));
    ++row;
    for (std::size_t idx = 1; idx < ones.size(); ++idx) {
        for (std::size_t half = 0; half < 2; ++half, ++row) {
            copy_row(out, row, basis.rows, 2 * ones[idx] + half);
            add_row_into(out, row, basis.rows, c1);
        }
    }
    for (std::size_t pair : zeros) {
        copy_row(out, row++, basis.rows, 2 * pair);
        copy_row(out, row++, basis.rows, 2 * pair + 1);
    }
    assert(row == k - 1);
    return LinearCode(out);
}

CanonicalPair canonical_code(LcdType t, std::size_t n, std::size_t k, const Field& f) {
    if (!(0 < k && k < n)) throw std::invalid_argument("canonical_code: requires 0 < k < n");
    const bool binary_type = (t == LcdType::OO || t == LcdType::OE || t == LcdType::EO);
    if (binary_type != f.is_binary()) {
        throw std::invalid_argument("canonical_code: type does not match field characteristic");
    }
    Matrix gen(f, k, n);
    Matrix parity(f, n - k, n);
    // row 2j-1 (1-based) = e_1 + .. + e_{2j-1} + e_{2j}; row 2j = e_{2j} + e_{2j+1}
    auto chain = [](Matrix& m, std::size_t count) {
        for (std::size_t j = 1; 2 * j <= count; ++j) {
            for (std::size_t i = 1; i <= 2 * j; ++i) m.set(2 * j - 2, i - 1, 1);
            m.set(2 * j - 1, 2 * j - 1, 1);
            m.set(2 * j - 1, 2 * j, 1);
        }
    };
    switch (t) {
        case LcdType::OO:
        case LcdType::Plus:
            for (std::size_t i = 0; i < k; ++i) gen.set(i, i, 1);
            for (std::size_t i = 0; i < n - k; ++i) parity.set(i, k + i, 1);
            break;
        case LcdType::OE: {
            if ((n - k) % 2 != 0) {
                throw std::invalid_argument("canonical_code: OE requires n-k even");
            }
            for (std::size_t i = 0; i <= n - k; ++i) gen.set(0, i, 1);
            for (std::size_t i = 1; i < k; ++i) gen.set(i, n - k + i, 1);
            chain(parity, n - k);
            break;
        }
        case LcdType::EO: {
            if (k % 2 != 0) {
                throw std::invalid_argument(
                    "canonical_code: EO requires k even (no even-like LCD code of odd "
                    "dimension)");
            }
            chain(gen, k);
            for (std::size_t i = 0; i <= k; ++i) parity.set(0, i, 1);
            for (std::size_t i = 1; i < n - k; ++i) parity.set(i, k + i, 1);
            break;
        }
        case LcdType::Minus: {
            auto [a, b] = f.two_squares(f.nonsquare());
            for (std::size_t i = 0; i + 1 < k; ++i) gen.set(i, i, 1);
            gen.set(k - 1, k - 1, a);
            gen.set(k - 1, k, b);
            for (std::size_t i = 0; i + 1 < n - k; ++i) parity.set(i, k + 1 + i, 1);
            parity.set(n - k - 1, k - 1, f.neg(b));
            parity.set(n - k - 1, k, a);
            break;
        }
    }
    return CanonicalPair{std::move(gen), std::move(parity)};
}

namespace {

Matrix stacked_basis(const LinearCode& c) {
    LcdBasis top = lcd_basis(c);
    LcdBasis bottom = lcd_basis(dual(c));
    return top.rows.vstack(bottom.rows);
}

}  // namespace

Matrix transporter(const LinearCode& c1, const LinearCode& c2) {
    if (c1.field() != c2.field()) throw std::invalid_argument("transporter: field mismatch");
    if (c1.length() != c2.length() || c1.dimension() != c2.dimension()) {
        throw std::invalid_argument("transporter: dimension mismatch");
    }
    if (classify(c1) != classify(c2)) {
        throw std::invalid_argument("transporter: codes are not of the same type");
    }
    Matrix q1 = stacked_basis(c1);
    Matrix q2 = stacked_basis(c2);
    return q1.inverse().mul(q2);
}

Matrix stabilizer_element(const LinearCode& c, const Matrix& q1, const Matrix& q2) {
    const Matrix& g = c.generator();
    Matrix h = dual(c).generator();
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    if (q1.rows() != k || q1.cols() != k || q1.field() != c.field()) {
        throw std::invalid_argument("stabilizer_element: q1 must be k x k over the same field");
    }
    if (q2.rows() != n - k || q2.cols() != n - k || q2.field() != c.field()) {
        throw std::invalid_argument(
            "stabilizer_element: q2 must be (n-k) x (n-k) over the same field");
    }
    Matrix gg = g.gram();
    Matrix hh = h.gram();
    if (q1.mul(gg).mul(q1.transpose()) != gg) {
        throw std::invalid_argument("stabilizer_element: q1 does not preserve G G^T");
    }
    if (q2.mul(hh).mul(q2.transpose()) != hh) {
        throw std::invalid_argument("stabilizer_element: q2 does not preserve H H^T");
    }
    Matrix a = g.vstack(h);
    Matrix block(c.field(), n, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) block.set(i, j, q1.at(i, j));
    }
    for (std::size_t i = 0; i < n - k; ++i) {
        for (std::size_t j = 0; j < n - k; ++j) block.set(k + i, k + j, q2.at(i, j));
    }
    return a.inverse().mul(block).mul(a);
}

bool in_stabilizer(const LinearCode& c, const Matrix& q) {
    const std::size_t n = c.length();
    if (q.rows() != n || q.cols() != n || q.field() != c.field()) {
        throw std::invalid_argument("in_stabilizer: q must be n x n over the same field");
    }
    if (q.mul(q.transpose()) != Matrix::identity(c.field(), n)) return false;
    return LinearCode(c.generator().mul(q)) == c;
}

}  // namespace lcdkit
