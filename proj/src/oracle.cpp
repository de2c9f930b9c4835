#include "lcdkit/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lcdkit::oracle {

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned e, std::uint64_t budget,
                          const char* what) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > budget / base) throw BudgetError(std::string(what) + ": budget exceeded");
        r *= base;
    }
    if (r > budget) throw BudgetError(std::string(what) + ": budget exceeded");
    return r;
}

}  // namespace

void enumerate_codes(unsigned n, unsigned k, const Field& f,
                     const std::function<void(const LinearCode&)>& visit,
                     std::uint64_t budget) {
    if (k > n) throw std::invalid_argument("enumerate_codes: requires k <= n");
    BigInt total = counting::gaussian_binomial(n, k, f.modulus());
    if (total > budget) throw BudgetError("enumerate_codes: subspace count exceeds budget");
    if (k == 0) {
        visit(LinearCode(Matrix(f, 0, n)));
        return;
    }
    const std::uint32_t p = f.modulus();
    // pivot columns in lexicographic order
    std::vector<unsigned> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0u);
    for (;;) {
        // free positions: non-pivot columns to the right of each row's pivot
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        {
            std::vector<bool> is_pivot(n, false);
            for (unsigned c : pivots) is_pivot[c] = true;
            for (unsigned i = 0; i < k; ++i) {
                for (unsigned c = pivots[i] + 1; c < n; ++c) {
                    if (!is_pivot[c]) free_pos.emplace_back(i, c);
                }
            }
        }
        Matrix gen(f, k, n);
        for (unsigned i = 0; i < k; ++i) gen.set(i, pivots[i], 1);
        std::vector<Element> vals(free_pos.size(), 0);
        for (;;) {
            visit(LinearCode(gen));
            // base-p odometer over the free entries
            std::size_t d = 0;
            while (d < vals.size()) {
                Element v = vals[d] + 1;
                if (v == p) {
                    vals[d] = 0;
                    gen.set(free_pos[d].first, free_pos[d].second, 0);
                    ++d;
                } else {
                    vals[d] = v;
                    gen.set(free_pos[d].first, free_pos[d].second, v);
                    break;
                }
            }
            if (d == vals.size()) break;
        }
        // next pivot combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (pivots[i] + (k - i) < n) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

std::vector<LinearCode> collect_codes(unsigned n, unsigned k, const Field& f,
                                      std::uint64_t budget) {
    std::vector<LinearCode> out;
    enumerate_codes(n, k, f, [&](const LinearCode& c) { out.push_back(c); }, budget);
    return out;
}

bool CensusReport::all_match() const {
    for (const CensusRow& r : rows) {
        if (!r.formula_match()) return false;
    }
    return true;
}

namespace {

std::string dec(const BigInt& v) { return v.str(); }

}  // namespace

nlohmann::ordered_json CensusReport::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = kCensusFormatVersion;
    j["kind"] = "census";
    j["p"] = p;
    j["n"] = n;
    j["budget"] = budget;
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    const bool binary = (p == 2);
    for (const CensusRow& r : rows) {
        nlohmann::ordered_json row;
        row["k"] = r.k;
        row["total"] = dec(r.total);
        row["lcd"] = dec(r.lcd);
        if (binary) {
            row["oo"] = dec(r.oo);
            row["oe"] = dec(r.oe);
            row["eo"] = dec(r.eo);
        } else {
            row["plus"] = dec(r.plus);
            row["minus"] = dec(r.minus);
        }
        if (r.d_lcd) {
            row["d_lcd"] = *r.d_lcd;
        } else {
            row["d_lcd"] = nullptr;
        }
        row["witness"] = r.witness;
        row["formula_match"] = {
            {"total", r.match_total}, {"lcd", r.match_lcd}, {"types", r.match_types}};
        rows_json.push_back(std::move(row));
    }
    j["rows"] = std::move(rows_json);
    return j;
}

CensusReport CensusReport::from_json(const nlohmann::ordered_json& j) {
    if (!j.contains("version") || j["version"].get<int>() != kCensusFormatVersion) {
        throw ParseError("census json: unsupported version");
    }
    CensusReport rep;
    rep.p = j.at("p").get<std::uint32_t>();
    rep.n = j.at("n").get<unsigned>();
    rep.budget = j.at("budget").get<std::uint64_t>();
    const bool binary = (rep.p == 2);
    for (const auto& row : j.at("rows")) {
        CensusRow r;
        r.k = row.at("k").get<unsigned>();
        r.total = BigInt(row.at("total").get<std::string>());
        r.lcd = BigInt(row.at("lcd").get<std::string>());
        if (binary) {
            r.oo = BigInt(row.at("oo").get<std::string>());
            r.oe = BigInt(row.at("oe").get<std::string>());
            r.eo = BigInt(row.at("eo").get<std::string>());
        } else {
            r.plus = BigInt(row.at("plus").get<std::string>());
            r.minus = BigInt(row.at("minus").get<std::string>());
        }
        if (!row.at("d_lcd").is_null()) r.d_lcd = row.at("d_lcd").get<unsigned>();
        r.witness = row.at("witness").get<std::string>();
        r.match_total = row.at("formula_match").at("total").get<bool>();
        r.match_lcd = row.at("formula_match").at("lcd").get<bool>();
        r.match_types = row.at("formula_match").at("types").get<bool>();
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

std::string CensusReport::to_csv() const {
    std::ostringstream out;
    const bool binary = (p == 2);
    out << (binary ? "p,n,k,total,lcd,oo,oe,eo,d_lcd,formula_match\n"
                   : "p,n,k,total,lcd,plus,minus,d_lcd,formula_match\n");
    for (const CensusRow& r : rows) {
        out << p << ',' << n << ',' << r.k << ',' << dec(r.total) << ',' << dec(r.lcd) << ',';
        if (binary) {
            out << dec(r.oo) << ',' << dec(r.oe) << ',' << dec(r.eo) << ',';
        } else {
            out << dec(r.plus) << ',' << dec(r.minus) << ',';
        }
        if (r.d_lcd) out << *r.d_lcd;
        out << ',' << (r.formula_match() ? "true" : "false") << '\n';
    }
    return out.str();
}

CensusReport census(unsigned n, const Field& f, std::uint64_t budget) {
    if (n < 1) throw std::invalid_argument("census: requires n >= 1");
    CensusReport rep;
    rep.p = f.modulus();
    rep.n = n;
    rep.budget = budget;
    const bool binary = f.is_binary();
    for (unsigned k = 1; k < n; ++k) {
        CensusRow row;
        row.k = k;
        unsigned best_d = 0;
        std::string witness;
        enumerate_codes(n, k, f, [&](const LinearCode& c) {
            row.total += 1;
            Element det = c.generator().gram().det();
            if (det == 0) return;
            row.lcd += 1;
            if (binary) {
                switch (classify(c)) {
                    case LcdType::OO: row.oo += 1; break;
                    case LcdType::OE: row.oe += 1; break;
                    default: row.eo += 1; break;
                }
            } else if (f.legendre(det) == 1) {
                row.plus += 1;
            } else {
                row.minus += 1;
            }
            unsigned d = static_cast<unsigned>(min_distance(c, budget));
            if (d > best_d) {
                best_d = d;
                witness = c.generator().to_text();
            }
        }, budget);
        if (row.lcd != 0) {
            row.d_lcd = best_d;
            row.witness = witness;
        }
        BigInt type_sum = binary ? BigInt(row.oo + row.oe + row.eo)
                                 : BigInt(row.plus + row.minus);
        if (type_sum != row.lcd) {
            throw std::logic_error("census: type counts do not sum to the LCD total");
        }
        row.match_total = (row.total == counting::gaussian_binomial(n, k, f.modulus()));
        if (binary) {
            row.match_lcd = (row.lcd == counting::count_lcd_binary(n, k));
            row.match_types = (row.oo == counting::count_lcd_binary(n, k, LcdType::OO)) &&
                              (row.oe == counting::count_lcd_binary(n, k, LcdType::OE)) &&
                              (row.eo == counting::count_lcd_binary(n, k, LcdType::EO));
        } else {
            row.match_lcd = (row.lcd == counting::count_lcd_q(n, k, f.modulus()));
            row.match_types =
                (row.plus == counting::count_lcd_q(n, k, f.modulus(), LcdType::Plus)) &&
                (row.minus == counting::count_lcd_q(n, k, f.modulus(), LcdType::Minus));
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<DlcdEntry> dlcd_table(unsigned n_max, const Field& f, std::uint64_t budget) {
    std::vector<DlcdEntry> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        unsigned prev_d = 0;
        for (unsigned k = 1; k <= n; ++k) {
            DlcdEntry e;
            e.n = n;
            e.k = k;
            unsigned best = 0;
            enumerate_codes(n, k, f, [&](const LinearCode& c) {
                if (!is_lcd(c)) return;
                unsigned d = static_cast<unsigned>(min_distance(c, budget));
                if (d > best) {
                    best = d;
                    e.witness = c.generator().to_text();
                }
            }, budget);
            e.d = best;
            e.monotone_ok = (k == 1) || (best <= prev_d);
            prev_d = best;
            out.push_back(std::move(e));
        }
    }
    return out;
}

BigInt brute_force_group_order(GroupKind kind, unsigned size, const Field& f, int delta_class,
                               std::uint64_t budget) {
    if (size == 0) return 1;
    if (kind == GroupKind::SymplecticGF2 && size % 2 != 0) {
        throw std::invalid_argument("brute_force_group_order: symplectic size must be even");
    }
    if ((kind == GroupKind::OrthogonalGF2 || kind == GroupKind::SymplecticGF2) &&
        !f.is_binary()) {
        throw std::invalid_argument("brute_force_group_order: kind requires GF(2)");
    }
    if (kind == GroupKind::OrthogonalQ && f.is_binary()) {
        throw std::invalid_argument("brute_force_group_order: OrthogonalQ requires odd field");
    }
    const std::uint32_t p = f.modulus();
    std::uint64_t count = checked_pow(p, size * size, budget, "brute_force_group_order");

    // the preserved bilinear form
    Matrix form(f, size, size);
    switch (kind) {
        case GroupKind::OrthogonalGF2:
            form = Matrix::identity(f, size);
            break;
        case GroupKind::SymplecticGF2:
            for (unsigned b = 0; b + 1 < size; b += 2) {
                form.set(b, b + 1, 1);
                form.set(b + 1, b, 1);
            }
            break;
        case GroupKind::OrthogonalQ:
            form = Matrix::identity(f, size);
            if (delta_class == -1) {
                form.set(size - 1, size - 1, f.nonsquare());
            } else if (delta_class != 1) {
                throw std::invalid_argument(
                    "brute_force_group_order: delta_class must be +1 or -1");
            }
            break;
    }

    BigInt found = 0;
    Matrix q(f, size, size);
    std::vector<Element> digits(size * size, 0);
    for (std::uint64_t step = 0;; ++step) {
        // check q * form * q^T == form via dot products weighted by the form
        bool ok = true;
        for (unsigned i = 0; i < size && ok; ++i) {
            for (unsigned j = i; j < size && ok; ++j) {
                Element acc = 0;
                for (unsigned a = 0; a < size; ++a) {
                    for (unsigned b = 0; b < size; ++b) {
                        Element fab = form.at(a, b);
                        if (fab == 0) continue;
                        acc = f.add(acc, f.mul(f.mul(q.at(i, a), fab), q.at(j, b)));
                    }
                }
                if (acc != form.at(i, j)) ok = false;
            }
        }
        if (ok) found += 1;
        if (step + 1 == count) break;
        std::size_t d = 0;
        while (true) {
            Element v = digits[d] + 1;
            if (v == p) {
                digits[d] = 0;
                q.set(d / size, d % size, 0);
                ++d;
            } else {
                digits[d] = v;
                q.set(d / size, d % size, v);
                break;
            }
        }
    }
    return found;
}

namespace {

LinearCode apply_permutation(const LinearCode& c, const std::vector<unsigned>& src_col) {
    const Matrix& g = c.generator();
    Matrix out(c.field(), g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t j = 0; j < g.cols(); ++j) out.set(r, j, g.at(r, src_col[j]));
    }
    return LinearCode(out);
}

}  // namespace

MassFormulaReport mass_formula_check(unsigned n, unsigned k, std::uint64_t budget) {
    if (n > 6) throw std::invalid_argument("mass_formula_check: requires n <= 6");
    if (!(0 < k && k < n)) throw std::invalid_argument("mass_formula_check: requires 0 < k < n");
    Field f(2);
    std::vector<LinearCode> oo_codes;
    enumerate_codes(n, k, f, [&](const LinearCode& c) {
        if (is_lcd(c) && classify(c) == LcdType::OO) oo_codes.push_back(c);
    }, budget);

    std::vector<std::vector<unsigned>> perms;
    {
        std::vector<unsigned> idx(n);
        std::iota(idx.begin(), idx.end(), 0u);
        do {
            perms.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }

    MassFormulaReport rep;
    rep.n = n;
    rep.k = k;
    std::map<std::string, bool> seen;
    for (const LinearCode& c : oo_codes) seen[c.generator().to_text()] = false;
    for (const LinearCode& c : oo_codes) {
        const std::string key = c.generator().to_text();
        if (seen[key]) continue;
        // orbit of c under coordinate permutations; |Aut| counted on the way
        std::size_t orbit = 0;
        std::size_t aut = 0;
        std::map<std::string, bool> in_orbit;
        for (const auto& perm : perms) {
            LinearCode image = apply_permutation(c, perm);
            if (image == c) ++aut;
            std::string ikey = image.generator().to_text();
            if (!in_orbit[ikey]) {
                in_orbit[ikey] = true;
                ++orbit;
                seen[ikey] = true;
            }
        }
        if (orbit * aut != perms.size()) {
            throw std::logic_error("mass_formula_check: orbit-stabilizer mismatch");
        }
        rep.class_count += 1;
        rep.sum_inverse_aut += BigRational(1, aut);
    }
    BigInt n_fact = 1;
    for (unsigned i = 2; i <= n; ++i) n_fact *= i;
    rep.rhs = BigRational(counting::order_orthogonal_gf2(n),
                          counting::order_orthogonal_gf2(k) *
                              counting::order_orthogonal_gf2(n - k) * n_fact);
    rep.match = (rep.sum_inverse_aut == rep.rhs);
    return rep;
}

}  // namespace lcdkit::oracle
