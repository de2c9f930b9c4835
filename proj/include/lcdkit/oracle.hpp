// Ground truth by exhaustion: enumerate every [n,k] code over GF(q) at small
// n through canonical RREF generators, classify and count them, compute
// maximum-distance tables, brute-force the small matrix groups, and check the
// mass formula for permutation classes.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcdkit/counting.hpp"
#include "lcdkit/normal_form.hpp"

namespace lcdkit::oracle {

using counting::BigInt;
using counting::BigRational;

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t(1) << 25;
inline constexpr std::uint64_t kDefaultMatrixBudget = std::uint64_t(1) << 30;
inline constexpr int kCensusFormatVersion = 1;

// Yields each k-dimensional subspace of GF(p)^n exactly once, as canonical
// RREF generator matrices, in lexicographic pivot order. Throws BudgetError
// when the subspace count exceeds the budget.
void enumerate_codes(unsigned n, unsigned k, const Field& f,
                     const std::function<void(const LinearCode&)>& visit,
                     std::uint64_t budget = kDefaultEnumBudget);

std::vector<LinearCode> collect_codes(unsigned n, unsigned k, const Field& f,
                                      std::uint64_t budget = kDefaultEnumBudget);

struct CensusRow {
    unsigned k = 0;
    BigInt total;  // all k-dimensional subspaces
    BigInt lcd;
    BigInt oo, oe, eo;      // binary type counts
    BigInt plus, minus;     // odd-characteristic square-class counts
    std::optional<unsigned> d_lcd;  // max min-distance among LCD codes
    std::string witness;            // generator text of one maximizer
    bool match_total = false;   // subspace count equals the Gaussian binomial
    bool match_lcd = false;     // LCD total equals the closed formula
    bool match_types = false;   // every per-type count equals its formula

    bool formula_match() const { return match_total && match_lcd && match_types; }
};

struct CensusReport {
    std::uint32_t p = 2;
    unsigned n = 0;
    std::uint64_t budget = kDefaultEnumBudget;
    std::vector<CensusRow> rows;  // k = 1 .. n-1

    bool all_match() const;
    nlohmann::ordered_json to_json() const;
    static CensusReport from_json(const nlohmann::ordered_json& j);
    std::string to_csv() const;
};

// Full classification census of GF(p)^n with formula agreement flags.
CensusReport census(unsigned n, const Field& f, std::uint64_t budget = kDefaultEnumBudget);

struct DlcdEntry {
    unsigned n = 0, k = 0, d = 0;
    bool monotone_ok = true;  // d(n,k) <= d(n,k-1), vacuous at k = 1
    std::string witness;
};

// Exact d_LCD(n,k) for 1 <= k <= n <= n_max with per-entry monotonicity flags.
std::vector<DlcdEntry> dlcd_table(unsigned n_max, const Field& f,
                                  std::uint64_t budget = kDefaultEnumBudget);

enum class GroupKind { OrthogonalGF2, SymplecticGF2, OrthogonalQ };

// Count of size x size matrices satisfying the defining congruence identity,
// by exhaustive matrix enumeration. For OrthogonalQ the preserved form is
// diag(1,..,1,delta) with legendre(delta) = delta_class.
BigInt brute_force_group_order(GroupKind kind, unsigned size, const Field& f,
                               int delta_class = +1,
                               std::uint64_t budget = kDefaultMatrixBudget);

struct MassFormulaReport {
    unsigned n = 0, k = 0;
    std::size_t class_count = 0;
    BigRational sum_inverse_aut;
    BigRational rhs;
    bool match = false;
};

// Partitions the odd/odd binary LCD codes into permutation-equivalence
// classes and checks sum(1/|Aut|) against the group-order ratio. Binary,
// n <= 6.
MassFormulaReport mass_formula_check(unsigned n, unsigned k,
                                     std::uint64_t budget = kDefaultEnumBudget);

}  // namespace lcdkit::oracle
