#include "lcdkit/code.hpp"

#include <bit>

namespace lcdkit {

LinearCode::LinearCode(const Matrix& spanning_rows) : gen_(spanning_rows.field(), 0, 0) {
    Matrix::Rref r = spanning_rows.rref();
    Matrix gen(spanning_rows.field(), r.rank, spanning_rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t c = 0; c < spanning_rows.cols(); ++c) {
            gen.set(i, c, r.reduced.at(i, c));
        }
    }
    gen_ = std::move(gen);
}

LinearCode LinearCode::from_text(Field f, std::string_view gen_text) {
    return LinearCode(Matrix::from_text(f, gen_text));
}

const char* to_string(LcdType t) {
    switch (t) {
        case LcdType::OO: return "OO";
        case LcdType::OE: return "OE";
        case LcdType::EO: return "EO";
        case LcdType::Plus: return "Plus";
        case LcdType::Minus: return "Minus";
    }
    return "?";
}

LcdType lcd_type_from_string(std::string_view s) {
    if (s == "OO" || s == "oo") return LcdType::OO;
    if (s == "OE" || s == "oe") return LcdType::OE;
    if (s == "EO" || s == "eo") return LcdType::EO;
    if (s == "Plus" || s == "plus" || s == "+") return LcdType::Plus;
    if (s == "Minus" || s == "minus" || s == "-") return LcdType::Minus;
    throw ParseError("unknown LCD type: " + std::string(s));
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.generator().right_kernel()); }

bool is_lcd(const LinearCode& c) { return c.generator().gram().det() != 0; }

bool is_even_like(const LinearCode& c) {
    if (!c.field().is_binary()) {
        throw std::invalid_argument("is_even_like: binary codes only");
    }
    // Weight parity is additive over GF(2), so checking generators suffices.
    const Matrix& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        unsigned acc = 0;
        for (std::size_t w = 0; w < g.words_per_row(); ++w) {
            acc ^= std::popcount(g.row_word(i, w)) & 1u;
        }
        if (acc) return false;
    }
    return true;
}

namespace {

// Membership of the all-ones vector in the row space of an RREF generator.
bool all_ones_in_code(const LinearCode& c) {
    const Matrix& g = c.generator();
    Matrix v(c.field(), 1, c.length());
    for (std::size_t j = 0; j < c.length(); ++j) v.set(0, j, 1);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < c.length() && g.at(i, lead) == 0) ++lead;
        if (v.at(0, lead)) {
            for (std::size_t w = 0; w < v.words_per_row(); ++w) {
                v.xor_row_word(0, w, g.row_word(i, w));
            }
        }
    }
    return v.is_zero();
}

}  // namespace

LcdType classify(const LinearCode& c) {
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    if (k == 0 || k == n) {
        throw std::invalid_argument("classify: requires 0 < k < n");
    }
    if (!c.field().is_binary()) {
        Element d = c.generator().gram().det();
        if (d == 0) throw std::invalid_argument("classify: code is not LCD");
        return c.field().legendre(d) == 1 ? LcdType::Plus : LcdType::Minus;
    }
    if (!is_lcd(c)) throw std::invalid_argument("classify: code is not LCD");
    bool even_code = is_even_like(c);
    // The dual is even-like iff the all-ones vector lies in (C^perp)^perp = C.
    bool even_dual = all_ones_in_code(c);
    if (even_code && even_dual) {
        throw std::logic_error("classify: even-like LCD code with even-like dual");
    }
    if (even_code) return LcdType::EO;
    if (even_dual) return LcdType::OE;
    return LcdType::OO;
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    if (k < 1) throw std::invalid_argument("min_distance: requires k >= 1");
    const std::uint64_t p = c.field().modulus();
    // number of messages p^k, with overflow guard
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > budget / p) throw BudgetError("min_distance: p^k exceeds budget");
        count *= p;
    }
    if (count > budget) throw BudgetError("min_distance: p^k exceeds budget");

    const Matrix& g = c.generator();
    std::size_t best = n + 1;
    if (c.field().is_binary()) {
        const std::size_t wpr = g.words_per_row();
        std::vector<std::uint64_t> word(wpr, 0);
        std::vector<unsigned> digit(k, 0);
        for (std::uint64_t step = 1; step < count; ++step) {
            std::size_t i = 0;
            for (;;) {
                for (std::size_t w = 0; w < wpr; ++w) word[w] ^= g.row_word(i, w);
                if (++digit[i] == 2) {
                    digit[i] = 0;
                    ++i;
                } else {
                    break;
                }
            }
            std::size_t wt = 0;
            for (std::size_t w = 0; w < wpr; ++w) wt += std::popcount(word[w]);
            if (wt < best) best = wt;
        }
        return best;
    }
    const Field& f = c.field();
    std::vector<Element> word(n, 0);
    std::vector<unsigned> digit(k, 0);
    for (std::uint64_t step = 1; step < count; ++step) {
        std::size_t i = 0;
        for (;;) {
            for (std::size_t ccol = 0; ccol < n; ++ccol) {
                word[ccol] = f.add(word[ccol], g.at(i, ccol));
            }
            if (++digit[i] == p) {
                digit[i] = 0;
                ++i;
            } else {
                break;
            }
        }
        std::size_t wt = 0;
        for (Element v : word) wt += (v != 0);
        if (wt < best) best = wt;
    }
    return best;
}

}  // namespace lcdkit
