#include "lcdkit/counting.hpp"

namespace lcdkit::counting {

namespace {

BigInt pow_int(const BigInt& base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// Exact division with a hard integrality check.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw std::logic_error(std::string("counting: non-exact division in ") + what);
    }
    return num / den;
}

// legendre((-1)^m) over GF(q), evaluated on the reduced residue.
int eta_minus_one_pow(unsigned m, std::uint32_t q) {
    Field f(q);
    return f.legendre(f.pow(q - 1, m));
}

BigInt two_pow(unsigned e) { return pow_int(2, e); }

}  // namespace

BigInt gaussian_binomial(unsigned n, unsigned k, const BigInt& q) {
    if (k > n) throw std::invalid_argument("gaussian_binomial: requires k <= n");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: requires q >= 2");
    BigInt r = 1;
    // Every prefix is itself a Gaussian binomial, so division stays exact.
    for (unsigned j = 0; j < k; ++j) {
        r *= pow_int(q, n - j) - 1;
        r = exact_div(r, pow_int(q, j + 1) - 1, "gaussian_binomial");
    }
    return r;
}

BigInt order_orthogonal_gf2(unsigned k) {
    if (k == 0) return 1;
    BigInt r;
    if (k % 2 == 0) {
        r = two_pow(k * k / 4);
        for (unsigned i = 1; i + 1 <= k / 2; ++i) r *= two_pow(2 * i) - 1;
    } else {
        r = two_pow((k - 1) * (k - 1) / 4);
        for (unsigned i = 1; i <= (k - 1) / 2; ++i) r *= two_pow(2 * i) - 1;
    }
    return r;
}

BigInt order_symplectic_gf2(unsigned k) {
    if (k == 0 || k % 2 != 0) {
        throw std::invalid_argument("order_symplectic_gf2: requires k even and positive");
    }
    BigInt r = two_pow(k * k / 4);
    for (unsigned i = 1; i <= k / 2; ++i) r *= two_pow(2 * i) - 1;
    return r;
}

BigInt order_orthogonal_q(unsigned n, int delta_class, std::uint32_t q) {
    if (q == 2) throw std::invalid_argument("order_orthogonal_q: requires odd q");
    if (delta_class != 1 && delta_class != -1) {
        throw std::invalid_argument("order_orthogonal_q: delta_class must be +1 or -1");
    }
    if (n == 0) return 1;
    BigInt Q = q;
    if (n % 2 == 1) {
        BigInt r = 2 * pow_int(Q, (n - 1) * (n - 1) / 4);
        for (unsigned i = 1; i <= (n - 1) / 2; ++i) r *= pow_int(Q, 2 * i) - 1;
        return r;
    }
    int e = eta_minus_one_pow(n / 2, q) * delta_class;
    BigInt r = 2 * pow_int(Q, n * (n - 2) / 4) * (pow_int(Q, n / 2) - e);
    for (unsigned i = 1; i + 1 <= n / 2; ++i) r *= pow_int(Q, 2 * i) - 1;
    return r;
}

namespace {

BigInt lcd_oo(unsigned n, unsigned k) {
    const bool ko = k % 2, no = n % 2;
    if (ko && !no) return two_pow((n * k - k * k + n - 1) / 2) * gaussian_binomial(n / 2 - 1, (k - 1) / 2, 4);
    if (ko && no)
        return two_pow((n - k) * (k - 1) / 2) * (two_pow(n - k) - 1) *
               gaussian_binomial((n - 1) / 2, (k - 1) / 2, 4);
    if (!ko && no)
        return two_pow(k * (n - k - 1) / 2) * (two_pow(k) - 1) *
               gaussian_binomial((n - 1) / 2, k / 2, 4);
    return two_pow(k * (n - k) / 2) * (two_pow(k) - 1) * gaussian_binomial(n / 2 - 1, k / 2, 4);
}

BigInt lcd_oe(unsigned n, unsigned k) {
    if ((n - k) % 2 != 0) return 0;
    if (k % 2 == 1) {
        return two_pow((k - 1) * (n - k) / 2) * gaussian_binomial((n - 1) / 2, (k - 1) / 2, 4);
    }
    return two_pow(k * (n - k) / 2) * gaussian_binomial(n / 2 - 1, k / 2 - 1, 4);
}

BigInt lcd_eo(unsigned n, unsigned k) {
    if (k % 2 != 0) return 0;
    if (n % 2 == 1) {
        return two_pow(k * (n - k - 1) / 2) * gaussian_binomial((n - 1) / 2, k / 2, 4);
    }
    return two_pow(k * (n - k) / 2) * gaussian_binomial(n / 2 - 1, k / 2, 4);
}

// Closed form for the untyped total, independent of the per-type formulas
// (the partition identity across the two routes is a test invariant).
BigInt lcd_total_binary(unsigned n, unsigned k) {
    const bool ko = k % 2, no = n % 2;
    if (ko && !no) {
        return two_pow((n * k - k * k + n - 1) / 2) *
               gaussian_binomial(n / 2 - 1, (k - 1) / 2, 4);
    }
    if (ko && no) {
        return two_pow((n - k) * (k + 1) / 2) * gaussian_binomial((n - 1) / 2, (k - 1) / 2, 4);
    }
    if (!ko && no) {
        return two_pow(k * (n - k + 1) / 2) * gaussian_binomial((n - 1) / 2, k / 2, 4);
    }
    return two_pow(k * (n - k) / 2) *
           (two_pow(n - k) * gaussian_binomial(n / 2 - 1, k / 2 - 1, 4) +
            gaussian_binomial(n / 2 - 1, k / 2, 4));
}

}  // namespace

BigInt count_lcd_binary(unsigned n, unsigned k, std::optional<LcdType> type) {
    if (!(0 < k && k < n)) throw std::invalid_argument("count_lcd_binary: requires 0 < k < n");
    if (!type) return lcd_total_binary(n, k);
    switch (*type) {
        case LcdType::OO: return lcd_oo(n, k);
        case LcdType::OE: return lcd_oe(n, k);
        case LcdType::EO: return lcd_eo(n, k);
        default:
            throw std::invalid_argument("count_lcd_binary: type must be OO, OE or EO");
    }
}

namespace {

// Signed variant of the orbit-size formulas over odd q; sign = +1 or -1.
BigInt lcd_q_signed(unsigned n, unsigned k, std::uint32_t q, int sign) {
    const bool ko = k % 2, no = n % 2;
    BigInt Q = q;
    BigInt num;
    if (ko && !no) {
        num = pow_int(Q, (k * (n - k) - 1) / 2) * (pow_int(Q, n / 2) - eta_minus_one_pow(n / 2, q)) *
              gaussian_binomial(n / 2 - 1, (k - 1) / 2, BigInt(q) * q);
    } else if (ko && no) {
        num = pow_int(Q, k * (n - k) / 2) *
              (pow_int(Q, (n - k) / 2) + sign * eta_minus_one_pow((n - k) / 2, q)) *
              gaussian_binomial((n - 1) / 2, (k - 1) / 2, BigInt(q) * q);
    } else if (!ko && no) {
        num = pow_int(Q, k * (n - k) / 2) *
              (pow_int(Q, k / 2) + sign * eta_minus_one_pow(k / 2, q)) *
              gaussian_binomial((n - 1) / 2, k / 2, BigInt(q) * q);
    } else {
        BigInt a = pow_int(Q, k / 2) + sign * eta_minus_one_pow(k / 2, q);
        BigInt b = pow_int(Q, (n - k) / 2) + sign * eta_minus_one_pow((n - k) / 2, q);
        BigInt den = pow_int(Q, n / 2) + eta_minus_one_pow(n / 2, q);
        num = exact_div(pow_int(Q, k * (n - k) / 2) * a * b *
                            gaussian_binomial(n / 2, k / 2, BigInt(q) * q),
                        den, "lcd_q_signed");
    }
    return exact_div(num, 2, "lcd_q_signed halving");
}

}  // namespace

namespace {

// Closed form for the untyped total over odd q, independent of the signed
// formulas (Plus + Minus = total is a test invariant across the two routes).
BigInt lcd_total_q(unsigned n, unsigned k, std::uint32_t q) {
    const bool ko = k % 2, no = n % 2;
    BigInt Q = q;
    BigInt qq = Q * Q;
    if (ko && !no) {
        return pow_int(Q, (k * (n - k) - 1) / 2) *
               (pow_int(Q, n / 2) - eta_minus_one_pow(n / 2, q)) *
               gaussian_binomial(n / 2 - 1, (k - 1) / 2, qq);
    }
    if (ko && no) {
        return pow_int(Q, (k + 1) * (n - k) / 2) *
               gaussian_binomial((n - 1) / 2, (k - 1) / 2, qq);
    }
    if (!ko && no) {
        return pow_int(Q, k * (n - k + 1) / 2) * gaussian_binomial((n - 1) / 2, k / 2, qq);
    }
    return pow_int(Q, k * (n - k) / 2) * gaussian_binomial(n / 2, k / 2, qq);
}

}  // namespace

BigInt count_lcd_q(unsigned n, unsigned k, std::uint32_t q, std::optional<LcdType> sign) {
    if (!(0 < k && k < n)) throw std::invalid_argument("count_lcd_q: requires 0 < k < n");
    if (q == 2) throw std::invalid_argument("count_lcd_q: requires odd q");
    Field f(q);  // validates primality
    if (!sign) return lcd_total_q(n, k, q);
    switch (*sign) {
        case LcdType::Plus: return lcd_q_signed(n, k, q, +1);
        case LcdType::Minus: return lcd_q_signed(n, k, q, -1);
        default: throw std::invalid_argument("count_lcd_q: sign must be Plus or Minus");
    }
}

BigRational g_partial(const BigInt& q, unsigned m) {
    if (q < 2) throw std::invalid_argument("g_partial: requires q >= 2");
    BigRational r = 1;
    BigInt qi = 1;
    for (unsigned i = 1; i <= m; ++i) {
        qi *= q;
        r *= BigRational(qi - 1, qi);
    }
    return r;
}

double AsymptoticReport::limit_estimate() const {
    return ((limit_lower + limit_upper) / 2).convert_to<double>();
}

BigRational AsymptoticReport::gap_upper() const {
    BigRational lo = ratio - limit_upper;
    if (lo < 0) lo = -lo;
    BigRational hi = ratio - limit_lower;
    if (hi < 0) hi = -hi;
    return lo > hi ? lo : hi;
}

namespace {

// prod_{i=1..m} (1 + q^-i) as an exact rational.
BigRational prod_one_plus(const BigInt& q, unsigned m) {
    BigRational r = 1;
    BigInt qi = 1;
    for (unsigned i = 1; i <= m; ++i) {
        qi *= q;
        r *= BigRational(qi + 1, qi);
    }
    return r;
}

// Terms needed so the tail beyond m changes the product by a relative factor
// within 10^-(digits+2): sum_{i>m} q^-i = q^-m / (q-1) <= 10^-(digits+2).
unsigned terms_for(const BigInt& q, unsigned digits) {
    BigInt bound = pow_int(10, digits + 2);
    BigInt qm = 1;
    unsigned m = 0;
    while (qm <= bound) {  // until q^m (q-1) > 10^(digits+2), with margin
        qm *= q;
        ++m;
    }
    return m + 1;
}

}  // namespace

AsymptoticReport asymptotic_ratio(unsigned n, unsigned k, std::uint32_t q, RatioKind kind,
                                  unsigned digits) {
    AsymptoticReport rep;
    rep.n = n;
    rep.k = k;
    rep.q = q;
    rep.kind = kind;

    const bool binary_kind = kind == RatioKind::OddOddOverPower ||
                             kind == RatioKind::OddOddOverSubspaces ||
                             kind == RatioKind::OddEvenOverSubspaces ||
                             kind == RatioKind::EvenOddOverSubspaces ||
                             kind == RatioKind::TotalOverSubspaces;
    if (binary_kind && q != 2) {
        throw std::invalid_argument("asymptotic_ratio: selected ratio requires q = 2");
    }
    if (!binary_kind && q == 2) {
        throw std::invalid_argument("asymptotic_ratio: selected ratio requires odd q");
    }

    // finite ratio
    switch (kind) {
        case RatioKind::OddOddOverPower:
            rep.ratio = BigRational(count_lcd_binary(n, k, LcdType::OO), two_pow(k * (n - k)));
            break;
        case RatioKind::OddOddOverSubspaces:
            rep.ratio = BigRational(count_lcd_binary(n, k, LcdType::OO), gaussian_binomial(n, k, 2));
            break;
        case RatioKind::OddEvenOverSubspaces:
            if ((n - k) % 2 != 0) {
                throw std::invalid_argument("asymptotic_ratio: OE ratio requires n-k even");
            }
            rep.ratio = BigRational(two_pow(n - k) * count_lcd_binary(n, k, LcdType::OE),
                                    gaussian_binomial(n, k, 2));
            break;
        case RatioKind::EvenOddOverSubspaces:
            if (k % 2 != 0) {
                throw std::invalid_argument("asymptotic_ratio: EO ratio requires k even");
            }
            rep.ratio = BigRational(two_pow(k) * count_lcd_binary(n, k, LcdType::EO),
                                    gaussian_binomial(n, k, 2));
            break;
        case RatioKind::TotalOverSubspaces:
            rep.ratio = BigRational(count_lcd_binary(n, k), gaussian_binomial(n, k, 2));
            break;
        case RatioKind::PlusOverSubspaces:
            rep.ratio = BigRational(count_lcd_q(n, k, q, LcdType::Plus),
                                    gaussian_binomial(n, k, q));
            break;
        case RatioKind::MinusOverSubspaces:
            rep.ratio = BigRational(count_lcd_q(n, k, q, LcdType::Minus),
                                    gaussian_binomial(n, k, q));
            break;
        case RatioKind::TotalOverSubspacesQ:
            rep.ratio = BigRational(count_lcd_q(n, k, q), gaussian_binomial(n, k, q));
            break;
    }

    // limit constant bracket
    if (kind == RatioKind::OddOddOverPower) {
        // 1 / g_{4,inf}: g_inf lies in [g_m (1 - T), g_m] with T the tail sum.
        BigInt base = 4;
        unsigned m = terms_for(base, digits);
        rep.terms = m;
        BigRational gm = g_partial(base, m);
        rep.partial_product = gm;
        BigRational tail = BigRational(1, pow_int(base, m)) / (base - 1);
        rep.limit_lower = 1 / gm;
        rep.limit_upper = 1 / (gm * (1 - tail));
    } else {
        // 1 / (c * prod(1+q^-i)) with c = 1 or 2;
        // the product lies in [P_m, P_m / (1 - T)].
        BigInt base = q;
        BigInt c = (kind == RatioKind::PlusOverSubspaces || kind == RatioKind::MinusOverSubspaces)
                       ? 2
                       : 1;
        unsigned m = terms_for(base, digits);
        rep.terms = m;
        BigRational pm = prod_one_plus(base, m);
        rep.partial_product = pm;
        BigRational tail = BigRational(1, pow_int(base, m)) / (base - 1);
        rep.limit_lower = (1 - tail) / (pm * c);
        rep.limit_upper = 1 / (pm * c);
    }
    return rep;
}

}  // namespace lcdkit::counting
