#pragma once

// Exact sparse arithmetic for formal sums  sum_k c * q^m * X_b  over the
// weight lattice, with rational q-exponents in intermediate values, the
// star involution, orbit sums, and the A[c]/q^e text format used for
// golden data.

#include "affine.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <sstream>

namespace extremal {

using QPoly = std::map<Rat, Int>;  // q-exponent -> coefficient, zero-free

class QLaurent {
public:
    QLaurent() : R_(nullptr) {}
    explicit QLaurent(const RootSystem& R) : R_(&R) {}

    static QLaurent monomial(const RootSystem& R, const Vec& b, Rat exp = Rat(0), Int coef = 1) {
        QLaurent p(R);
        p.add_term(b, exp, coef);
        return p;
    }

    const RootSystem& system() const { return *R_; }
    const std::map<Vec, QPoly>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    std::size_t monomial_count() const {
        std::size_t k = 0;
        for (auto& [b, poly] : terms_) k += poly.size();
        return k;
    }

    void add_term(const Vec& b, Rat exp, Int coef) {
        if (coef == 0) return;
        QPoly& poly = terms_[b];
        Int& c = poly[exp];
        c += coef;
        if (c == 0) {
            poly.erase(exp);
            if (poly.empty()) terms_.erase(b);
        }
    }

    QLaurent& operator+=(const QLaurent& o) {
        for (auto& [b, poly] : o.terms_)
            for (auto& [e, c] : poly) add_term(b, e, c);
        return *this;
    }
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }

    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    QLaurent scaled_q(const Rat& m) const {
        QLaurent out(*R_);
        for (auto& [b, poly] : terms_)
            for (auto& [e, c] : poly) out.add_term(b, e + m, c);
        return out;
    }

    QLaurent scaled(Int k) const {
        QLaurent out(*R_);
        for (auto& [b, poly] : terms_)
            for (auto& [e, c] : poly) out.add_term(b, e, k * c);
        return out;
    }

    QLaurent apply_finite(const WeylElement& w) const {
        QLaurent out(*R_);
        for (auto& [b, poly] : terms_) {
            Vec img = w.act(b);
            for (auto& [e, c] : poly) out.add_term(img, e, c);
        }
        return out;
    }

    QLaurent apply_affine(const AffineElement& wh) const {
        QLaurent out(*R_);
        for (auto& [b, poly] : terms_) {
            auto [img, shift] = wh.act_monomial(b);
            for (auto& [e, c] : poly) out.add_term(img, e + shift, c);
        }
        return out;
    }

    QLaurent apply_translation(Setting s, const Vec& t) const {
        return apply_affine(AffineElement::translation(s, t));
    }

    /// (q^m X_b)^* = q^{-m} X_{-b}
    QLaurent star() const {
        QLaurent out(*R_);
        for (auto& [b, poly] : terms_)
            for (auto& [e, c] : poly) out.add_term(-b, -e, c);
        return out;
    }

    /// Specialization q -> 1: weight -> total coefficient.
    std::map<Vec, Int> at_q1() const {
        std::map<Vec, Int> out;
        for (auto& [b, poly] : terms_) {
            Int s = 0;
            for (auto& [e, c] : poly) s += c;
            if (s != 0) out[b] = s;
        }
        return out;
    }

    bool integral_exponents() const {
        for (auto& [b, poly] : terms_)
            for (auto& [e, c] : poly)
                if (e.denominator() != 1) return false;
        return true;
    }

    /// Restrict the support to a set of weights.
    QLaurent restricted(const std::set<Vec>& keep) const {
        QLaurent out(*R_);
        for (auto& [b, poly] : terms_)
            if (keep.count(b))
                for (auto& [e, c] : poly) out.add_term(b, e, c);
        return out;
    }

private:
    const RootSystem* R_;
    std::map<Vec, QPoly> terms_;
};

/// M_b = sum of X_c over the orbit of an antidominant b.
inline QLaurent orbit_sum(const RootSystem& R, const Vec& b) {
    if (!R.antidominant(b)) throw std::invalid_argument("orbit_sum needs an antidominant weight");
    QLaurent p(R);
    for (const Vec& c : orbit(R, b)) p.add_term(c, Rat(0), 1);
    return p;
}

// ---------------------------------------------------------------------------
// the paper text format:  terms "k*A[c1,...,cn]/q^e" joined by "+"
// ---------------------------------------------------------------------------

/// Root-coordinate displacement of every monomial against a base weight;
/// throws if any displacement leaves the root lattice.
inline Vec displacement(const RootSystem& R, const Vec& b, const Vec& base) {
    return to_int_vec(R.weight_to_root(b - base), "displacement");
}

inline std::string format_paper(const QLaurent& P, const Vec& base) {
    const RootSystem& R = P.system();
    // (c, e, k) sorted lexicographically by c, then by e — the appendix order
    std::vector<std::tuple<Vec, Int, Int>> rows;
    for (auto& [b, poly] : P.terms()) {
        Vec c = displacement(R, b, base);
        for (auto& [exp, k] : poly) {
            if (exp.denominator() != 1 || exp > Rat(0))
                throw std::runtime_error("paper format needs coefficients k*q^{-e}, e >= 0");
            if (k < 0) throw std::runtime_error("paper format needs positive coefficients");
            rows.emplace_back(c, -exp.numerator(), k);
        }
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (auto& [c, e, k] : rows) {
        if (!out.empty()) out += "+";
        if (k != 1) out += std::to_string(k) + "*";
        if (is_zero(c) && e == 0 && k == 1) {
            out += "1";
        } else if (is_zero(c)) {
            out += "1";
        } else {
            out += "A[";
            for (int i = 0; i < R.n; ++i) {
                if (i) out += ",";
                out += std::to_string(c[i]);
            }
            out += "]";
        }
        if (e == 1) out += "/q";
        else if (e > 1) out += "/q^" + std::to_string(e);
    }
    return out;
}

inline QLaurent parse_paper(const std::string& text, const RootSystem& R, const Vec& base) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    QLaurent P(R);
    if (s.empty()) return P;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw std::invalid_argument("empty term in paper format");

        Int k = 1;
        std::size_t star = term.find('*');
        if (star != std::string::npos) {
            k = std::stoll(term.substr(0, star));
            term = term.substr(star + 1);
        }
        Vec c(R.n, 0);
        std::size_t at = 0;
        if (term[0] == '1') {
            at = 1;
        } else if (term.compare(0, 2, "A[") == 0) {
            std::size_t close = term.find(']');
            if (close == std::string::npos) throw std::invalid_argument("unterminated A[...]");
            std::string inside = term.substr(2, close - 2);
            std::stringstream ss(inside);
            std::string tok;
            int i = 0;
            while (std::getline(ss, tok, ',')) {
                if (i >= R.n) throw std::invalid_argument("too many coordinates in A[...]");
                c[i++] = std::stoll(tok);
            }
            if (i != R.n) throw std::invalid_argument("wrong arity in A[...]");
            at = close + 1;
        } else {
            throw std::invalid_argument("bad term: " + term);
        }
        Int e = 0;
        if (at < term.size()) {
            if (term.compare(at, 2, "/q") != 0) throw std::invalid_argument("bad term tail: " + term);
            at += 2;
            if (at < term.size()) {
                if (term[at] != '^') throw std::invalid_argument("bad exponent: " + term);
                e = std::stoll(term.substr(at + 1));
                if (e <= 0) throw std::invalid_argument("exponent must be positive: " + term);
            } else {
                e = 1;
            }
        }
        P.add_term(base + R.root_to_weight(c), Rat(-e), k);
    }
    return P;
}

inline nlohmann::json to_json(const QLaurent& P, const Vec& base) {
    const RootSystem& R = P.system();
    std::vector<std::tuple<Vec, Int, Int>> rows;
    for (auto& [b, poly] : P.terms()) {
        Vec c = displacement(R, b, base);
        for (auto& [exp, k] : poly) {
            if (exp.denominator() != 1)
                throw std::runtime_error("json export needs integral exponents");
            rows.emplace_back(c, -exp.numerator(), k);
        }
    }
    std::sort(rows.begin(), rows.end());
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [c, e, k] : rows)
        terms.push_back({{"c", c}, {"e", e}, {"k", k}});
    return nlohmann::json{{"terms", terms}};
}

inline QLaurent from_json(const nlohmann::json& j, const RootSystem& R, const Vec& base) {
    QLaurent P(R);
    for (auto& t : j.at("terms")) {
        Vec c = t.at("c").get<Vec>();
        P.add_term(base + R.root_to_weight(c), Rat(-t.at("e").get<Int>()), t.at("k").get<Int>());
    }
    return P;
}

}  // namespace extremal
