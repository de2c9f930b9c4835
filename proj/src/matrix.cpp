#include "lcdkit/matrix.hpp"

#include <bit>
#include <sstream>

namespace lcdkit {

namespace {

void check_same_field(const Field& a, const Field& b, const char* op) {
    if (a != b) throw std::invalid_argument(std::string(op) + ": field mismatch");
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (field_.is_binary()) {
        wpr_ = (cols_ + 63) / 64;
        bits_.assign(rows_ * wpr_, 0);
    } else {
        vals_.assign(rows_ * cols_, 0);
    }
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Element Matrix::at(std::size_t r, std::size_t c) const {
    if (field_.is_binary()) {
        return static_cast<Element>((bits_[r * wpr_ + c / 64] >> (c % 64)) & 1u);
    }
    return vals_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
    if (field_.is_binary()) {
        std::uint64_t& w = bits_[r * wpr_ + c / 64];
        std::uint64_t mask = std::uint64_t(1) << (c % 64);
        if (v & 1) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    } else {
        vals_[r * cols_ + c] = v % field_.modulus();
    }
}

Matrix Matrix::from_text(Field f, std::string_view text) {
    std::vector<std::vector<Element>> rows;
    std::vector<Element> cur;
    auto flush_row = [&]() {
        if (!cur.empty()) {
            rows.push_back(cur);
            cur.clear();
        }
    };
    std::size_t i = 0;
    const bool digits = f.modulus() < 10;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ';' || ch == '\n') {
            flush_row();
            ++i;
        } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
            ++i;
        } else if (ch >= '0' && ch <= '9') {
            if (digits) {
                Element v = static_cast<Element>(ch - '0');
                if (v >= f.modulus()) throw ParseError("matrix text: entry out of range");
                cur.push_back(v);
                ++i;
            } else {
                std::uint64_t v = 0;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                    v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
                    if (v > 0xffffffffull) throw ParseError("matrix text: entry too large");
                    ++i;
                }
                if (v >= f.modulus()) throw ParseError("matrix text: entry out of range");
                cur.push_back(static_cast<Element>(v));
            }
        } else {
            throw ParseError(std::string("matrix text: unexpected character '") + ch + "'");
        }
    }
    flush_row();
    if (rows.empty()) throw ParseError("matrix text: empty input");
    std::size_t cols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw ParseError("matrix text: ragged rows");
    }
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

std::string Matrix::to_text() const {
    std::ostringstream out;
    const bool digits = field_.modulus() < 10;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r != 0) out << ';';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!digits && c != 0) out << ',';
            out << at(r, c);
        }
    }
    return out.str();
}

Element Matrix::dot_rows(const Matrix& other, std::size_t i, std::size_t j) const {
    if (field_.is_binary()) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < wpr_; ++w) {
            acc ^= bits_[i * wpr_ + w] & other.bits_[j * other.wpr_ + w];
        }
        return static_cast<Element>(std::popcount(acc) & 1);
    }
    std::uint64_t acc = 0;
    const std::uint64_t p = field_.modulus();
    for (std::size_t c = 0; c < cols_; ++c) {
        acc += std::uint64_t(vals_[i * cols_ + c]) * other.vals_[j * cols_ + c] % p;
    }
    return static_cast<Element>(acc % p);
}

Matrix Matrix::mul(const Matrix& rhs) const {
    check_same_field(field_, rhs.field_, "mul");
    if (cols_ != rhs.rows_) throw std::invalid_argument("mul: dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    if (field_.is_binary()) {
        // out.row[i] = xor of rhs rows selected by bits of this->row[i]
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (at(i, c)) {
                    for (std::size_t w = 0; w < out.wpr_; ++w) {
                        out.bits_[i * out.wpr_ + w] ^= rhs.bits_[c * rhs.wpr_ + w];
                    }
                }
            }
        }
        return out;
    }
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < cols_; ++c) {
                acc += std::uint64_t(vals_[i * cols_ + c]) * rhs.vals_[c * rhs.cols_ + j] % p;
            }
            out.vals_[i * rhs.cols_ + j] = static_cast<Element>(acc % p);
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    }
    return out;
}

Matrix Matrix::gram() const {
    Matrix out(field_, rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < rows_; ++j) {
            Element d = dot_rows(*this, i, j);
            out.set(i, j, d);
            out.set(j, i, d);
        }
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    check_same_field(field_, below.field_, "vstack");
    if (cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
    Matrix out(field_, rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    }
    for (std::size_t r = 0; r < below.rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.set(rows_ + r, c, below.at(r, c));
    }
    return out;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    if (field_.is_binary()) {
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::swap(bits_[i * wpr_ + w], bits_[j * wpr_ + w]);
        }
    } else {
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap(vals_[i * cols_ + c], vals_[j * cols_ + c]);
        }
    }
}

void Matrix::scale_row(std::size_t i, Element s) {
    if (field_.is_binary()) {
        if (s == 0) {
            for (std::size_t w = 0; w < wpr_; ++w) bits_[i * wpr_ + w] = 0;
        }
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        vals_[i * cols_ + c] = field_.mul(vals_[i * cols_ + c], s);
    }
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, Element s) {
    if (s == 0) return;
    if (field_.is_binary()) {
        for (std::size_t w = 0; w < wpr_; ++w) {
            bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
        }
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        vals_[dst * cols_ + c] =
            field_.add(vals_[dst * cols_ + c], field_.mul(vals_[src * cols_ + c], s));
    }
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        Element a = at(r, i), b = at(r, j);
        set(r, i, b);
        set(r, j, a);
    }
}

void Matrix::scale_col(std::size_t i, Element s) {
    for (std::size_t r = 0; r < rows_; ++r) set(r, i, field_.mul(at(r, i), s));
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, Element s) {
    if (s == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        set(r, dst, field_.add(at(r, dst), field_.mul(at(r, src), s)));
    }
}

Matrix::Rref Matrix::rref() const {
    Matrix r = *this;
    Matrix t = Matrix::identity(field_, rows_);
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t piv = lead;
        while (piv < rows_ && r.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        r.swap_rows(lead, piv);
        t.swap_rows(lead, piv);
        Element s = field_.inv(r.at(lead, c));
        if (s != 1) {
            r.scale_row(lead, s);
            t.scale_row(lead, s);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead) continue;
            Element f = r.at(i, c);
            if (f != 0) {
                Element m = field_.neg(f);
                r.add_row_multiple(i, lead, m);
                t.add_row_multiple(i, lead, m);
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    return Rref{std::move(r), pivots.size(), std::move(pivots), std::move(t)};
}

Element Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    Matrix a = *this;
    Element d = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = c;
        while (piv < rows_ && a.at(piv, c) == 0) ++piv;
        if (piv == rows_) return 0;
        if (piv != c) {
            a.swap_rows(c, piv);
            d = field_.neg(d);
        }
        Element pv = a.at(c, c);
        d = field_.mul(d, pv);
        Element pinv = field_.inv(pv);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            Element f = a.at(i, c);
            if (f != 0) a.add_row_multiple(i, c, field_.neg(field_.mul(f, pinv)));
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
    Rref r = rref();
    if (r.rank != rows_) throw std::invalid_argument("inverse: matrix is singular");
    return r.transform;
}

Matrix Matrix::right_kernel() const {
    Rref r = rref();
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pi < r.pivots.size() && r.pivots[pi] == c) {
                ++pi;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    Matrix basis(field_, free_cols.size(), cols_);
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        std::size_t c = free_cols[idx];
        basis.set(idx, c, 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            Element v = r.reduced.at(i, c);
            if (v != 0) basis.set(idx, r.pivots[i], field_.neg(v));
        }
    }
    Rref canon = basis.rref();
    return canon.reduced;
}

bool Matrix::is_zero() const {
    if (field_.is_binary()) {
        for (std::uint64_t w : bits_) {
            if (w != 0) return false;
        }
        return true;
    }
    for (Element v : vals_) {
        if (v != 0) return false;
    }
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    if (field_ != other.field_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (field_.is_binary()) return bits_ == other.bits_;
    return vals_ == other.vals_;
}

}  // namespace lcdkit
