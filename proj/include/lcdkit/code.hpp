// Linear codes stored by canonical reduced-row-echelon generator matrices,
// with duality, the complementary-dual predicate, parity typing, and
// exhaustive minimum distance.
#pragma once

#include <cstdint>
#include <string_view>

#include "lcdkit/matrix.hpp"

namespace lcdkit {

// Raised when an exhaustive computation would exceed its stated budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMinDistanceBudget = std::uint64_t(1) << 24;

class LinearCode {
public:
    // Canonicalizes the spanning rows: the stored generator is the unique
    // RREF basis of the row space (zero rows dropped).
    explicit LinearCode(const Matrix& spanning_rows);
    static LinearCode from_text(Field f, std::string_view gen_text);

    const Field& field() const { return gen_.field(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }

    bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }
    bool operator!=(const LinearCode& other) const { return !(*this == other); }

private:
    Matrix gen_;
};

// Classification of a complementary-dual code: (code parity, dual parity)
// over GF(2), or the square class of det(G G^T) over odd fields.
enum class LcdType { OO, OE, EO, Plus, Minus };

const char* to_string(LcdType t);
LcdType lcd_type_from_string(std::string_view s);

LinearCode dual(const LinearCode& c);

// True iff det(G G^T) != 0, equivalently the code meets its dual trivially.
bool is_lcd(const LinearCode& c);

// GF(2) only: true iff every codeword has even weight.
bool is_even_like(const LinearCode& c);

// Requires is_lcd(c) and 0 < k < n.
LcdType classify(const LinearCode& c);

// Minimum weight over all p^k - 1 nonzero codewords, by exhaustive message
// enumeration. Throws BudgetError when p^k exceeds the budget.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kMinDistanceBudget);

}  // namespace lcdkit
