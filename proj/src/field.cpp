#include "lcdkit/field.hpp"

#include <string>

namespace lcdkit {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("Field: modulus must be prime");
    }
    if (p_ > 2) {
        for (Element g = 2; g < p_; ++g) {
            if (legendre(g) == -1) {
                nonsquare_ = g;
                break;
            }
        }
    }
}

Element Field::reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

Element Field::add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? static_cast<Element>(s - p_) : static_cast<Element>(s);
}

Element Field::sub(Element a, Element b) const {
    return a >= b ? a - b : static_cast<Element>(a + p_ - b);
}

Element Field::neg(Element a) const { return a == 0 ? 0 : p_ - a; }

Element Field::mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t(a) * b) % p_);
}

Element Field::inv(Element a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    return pow(a, p_ - 2);
}

Element Field::pow(Element a, std::uint64_t e) const {
    std::uint64_t base = a % p_;
    std::uint64_t r = 1;
    while (e != 0) {
        if (e & 1) r = (r * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return static_cast<Element>(r);
}

void Field::require_odd(const char* op) const {
    if (p_ == 2) {
        throw std::invalid_argument(std::string(op) + ": requires odd characteristic");
    }
}

int Field::legendre(Element x) const {
    require_odd("legendre");
    x %= p_;
    if (x == 0) return 0;
    Element t = pow(x, (p_ - 1) / 2);
    return t == 1 ? 1 : -1;
}

Element Field::nonsquare() const {
    require_odd("nonsquare");
    return nonsquare_;
}

Element Field::sqrt(Element x) const {
    require_odd("sqrt");
    x %= p_;
    if (x == 0) return 0;
    if (legendre(x) != 1) throw std::domain_error("Field: sqrt of a nonsquare");
    Element r;
    if (p_ % 4 == 3) {
        r = pow(x, (p_ + 1) / 4);
    } else {
        // Tonelli-Shanks, using the stored nonsquare as the seed.
        std::uint32_t q = p_ - 1;
        unsigned s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        Element z = nonsquare_;
        Element c = pow(z, q);
        Element t = pow(x, q);
        r = pow(x, (q + 1) / 2);
        unsigned m = s;
        while (t != 1) {
            Element t2 = t;
            unsigned i = 0;
            while (t2 != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            Element b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    Element other = neg(r);
    return r <= other ? r : other;
}

std::pair<Element, Element> Field::two_squares(Element z) const {
    require_odd("two_squares");
    z %= p_;
    for (Element x = 0; x < p_; ++x) {
        Element t = sub(z, mul(x, x));
        if (t == 0) return {x, 0};
        if (legendre(t) == 1) return {x, sqrt(t)};
    }
    throw std::logic_error("two_squares: no decomposition found");  // unreachable
}

}  // namespace lcdkit
