#include "rs12/extalg.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace rs12 {

int wedge_sign(unsigned a, unsigned b) {
    // parity of the number of pairs (i, j), i in a, j in b, with i > j
    int inv = 0;
    for (int j = 0; j < kVars; ++j)
        if (b & (1u << j)) inv += std::popcount(a >> (j + 1));
    return (inv & 1) ? -1 : 1;
}

int contract_sign(unsigned s, unsigned t) {
    // apply the generators of s from the largest index down
    int sign = 1;
    unsigned cur = t;
    for (int j = kVars - 1; j >= 0; --j) {
        if (!(s & (1u << j))) continue;
        if (std::popcount(cur & ((1u << j) - 1)) & 1) sign = -sign;
        cur &= ~(1u << j);
    }
    return sign;
}

ExtElem ExtAlg::monomial(unsigned mask, Field::Elem coeff) const {
    ExtElem r;
    if (F_.is_zero(coeff)) return r;
    r.word = std::popcount(mask);
    r.c[mask] = coeff;
    return r;
}

ExtElem ExtAlg::normalized(ExtElem a, int word) const {
    bool any = false;
    for (int m = 0; m < kMasks; ++m)
        if (!F_.is_zero(a.c[m])) { any = true; break; }
    a.word = any ? word : -1;
    if (!any) a.c.fill(0);
    return a;
}

ExtElem ExtAlg::add(const ExtElem& a, const ExtElem& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.word != b.word) throw std::invalid_argument("adding inhomogeneous exterior elements");
    ExtElem r;
    for (int m = 0; m < kMasks; ++m) r.c[m] = F_.add(a.c[m], b.c[m]);
    return normalized(r, a.word);
}

ExtElem ExtAlg::scale(Field::Elem f, const ExtElem& a) const {
    if (a.is_zero() || F_.is_zero(f)) return ExtElem{};
    ExtElem r;
    for (int m = 0; m < kMasks; ++m) r.c[m] = F_.mul(f, a.c[m]);
    return normalized(r, a.word);
}

ExtElem ExtAlg::wedge(const ExtElem& a, const ExtElem& b) const {
    if (a.is_zero() || b.is_zero()) return ExtElem{};
    ExtElem r;
    for (int ma = 0; ma < kMasks; ++ma) {
        if (F_.is_zero(a.c[ma])) continue;
        for (int mb = 0; mb < kMasks; ++mb) {
            if (F_.is_zero(b.c[mb]) || (ma & mb)) continue;
            Field::Elem t = F_.mul(a.c[ma], b.c[mb]);
            if (wedge_sign(ma, mb) < 0) t = F_.neg(t);
            r.c[ma | mb] = F_.add(r.c[ma | mb], t);
        }
    }
    return normalized(r, a.word + b.word);
}

ExtElem ExtAlg::contract(const ExtElem& omega, const ExtElem& tau) const {
    if (omega.is_zero() || tau.is_zero()) return ExtElem{};
    if (omega.word > tau.word) return ExtElem{};
    ExtElem r;
    for (int s = 0; s < kMasks; ++s) {
        if (F_.is_zero(omega.c[s])) continue;
        for (int t = 0; t < kMasks; ++t) {
            if (F_.is_zero(tau.c[t]) || (s & ~t)) continue;
            Field::Elem v = F_.mul(omega.c[s], tau.c[t]);
            if (contract_sign(s, t) < 0) v = F_.neg(v);
            r.c[t & ~s] = F_.add(r.c[t & ~s], v);
        }
    }
    return normalized(r, tau.word - omega.word);
}

bool ExtAlg::equal(const ExtElem& a, const ExtElem& b) const {
    for (int m = 0; m < kMasks; ++m)
        if (a.c[m] != b.c[m]) return false;
    return a.word == b.word || (a.is_zero() && b.is_zero());
}

std::vector<unsigned> ExtAlg::graded_basis(int degree) {
    if (degree > 0 || degree < -kVars) throw std::out_of_range("exterior degree out of range");
    std::vector<unsigned> r;
    for (unsigned m = 0; m < kMasks; ++m)
        if (std::popcount(m) == -degree) r.push_back(m);
    return r;
}

std::string mask_indices(unsigned mask) {
    std::string s;
    for (int i = 0; i < kVars; ++i)
        if (mask & (1u << i)) s += char('0' + i);
    return s;
}

std::string ExtAlg::str(const ExtElem& a, char letter) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (int m = 0; m < kMasks; ++m) {
        if (F_.is_zero(a.c[m])) continue;
        int64_t v = F_.symmetric(a.c[m]);
        std::string coeff;
        if (v < 0) coeff = "-", v = -v;
        else if (!out.empty()) coeff = "+";
        if (v != 1 || m == 0) coeff += std::to_string(v);
        out += coeff;
        if (m != 0) {
            out += letter;
            out += "_{" + mask_indices(unsigned(m)) + "}";
        }
    }
    return out;
}

ExtElem ExtAlg::parse(const std::string& s, char letter) const {
    ExtElem r;
    int word = -2;  // unset
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(uint8_t(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("empty exterior element");
    bool any = false;
    while (i < s.size()) {
        skip_ws();
        int64_t sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        bool have_digits = false;
        int64_t mag = 0;
        while (i < s.size() && std::isdigit(uint8_t(s[i]))) {
            have_digits = true;
            mag = mag * 10 + (s[i] - '0');
            ++i;
        }
        skip_ws();
        unsigned mask = 0;
        int w = 0;
        if (i < s.size() && s[i] == letter) {
            ++i;
            if (i < s.size() && s[i] == '_') ++i;
            bool brace = i < s.size() && s[i] == '{';
            if (brace) ++i;
            while (i < s.size() && std::isdigit(uint8_t(s[i]))) {
                int idx = s[i] - '0';
                if (idx >= kVars) throw std::invalid_argument("generator index out of range");
                if (mask & (1u << idx)) throw std::invalid_argument("repeated generator index");
                mask |= 1u << idx;
                ++w;
                ++i;
            }
            if (brace) {
                if (i >= s.size() || s[i] != '}') throw std::invalid_argument("missing closing brace");
                ++i;
            }
            if (w == 0) throw std::invalid_argument("generator token without indices");
        } else if (!have_digits) {
            throw std::invalid_argument("malformed exterior element: " + s);
        }
        if (!have_digits) mag = 1;
        Field::Elem coeff = F_.from_int(sign * mag);
        if (!F_.is_zero(coeff)) {
            if (word == -2) word = w;
            else if (word != w) throw std::invalid_argument("inhomogeneous exterior element");
            r.c[mask] = F_.add(r.c[mask], coeff);
            any = true;
        }
        skip_ws();
    }
    if (!any) return ExtElem{};
    return normalized(r, word);
}

ExtElem ExtAlg::random(Rng& rng, int word) const {
    ExtElem r;
    for (unsigned m : graded_basis(-word)) r.c[m] = F_.from_int(int64_t(rng.below(F_.p())));
    return normalized(r, word);
}

}  // namespace rs12
