#pragma once

// Extended affine Weyl groups for the twisted and untwisted settings.
// Elements are stored as (translation, finite part) with the translation in
// lattice coordinates: the fundamental-coweight basis of P^vee in the
// untwisted setting, the fundamental-weight basis of P in the twisted one.
// An element (t,w) acts on [z,zeta] as [w(z), zeta - (w(z),t)].

#include "rootsystem.hpp"

#include <functional>
#include <optional>

namespace extremal {

struct Setting {
    const RootSystem* R = nullptr;
    bool twisted = false;

    const RootSystem& sys() const { return *R; }
    int n() const { return R->n; }

    const Vec& theta_eps() const { return twisted ? R->theta_sht : R->theta_lng; }

    /// (rho_check^eps, z): rho_check untwisted, rho twisted.
    Rat pair_rho_check_eps(const Vec& weight) const {
        return twisted ? R->pair_rho(weight) : R->pair_rho_check(weight);
    }

    /// Pairing of a lattice vector with a root (integer valued).
    Int pair_lattice_root(const Vec& t, const Vec& c) const {
        Int s = 0;
        for (int i = 0; i < R->n; ++i) s += t[i] * (twisted ? R->nu_simple[i] : 1) * c[i];
        return s;
    }

    Rat pair_lattice_weight(const Vec& t, const Vec& m) const {
        RatVec c = R->weight_to_root(m);
        Rat s(0);
        for (int i = 0; i < R->n; ++i) s += Rat(t[i] * (twisted ? R->nu_simple[i] : 1)) * c[i];
        return s;
    }

    /// Finite Weyl action on lattice coordinates.
    Vec lattice_act(const WeylElement& w, const Vec& t) const {
        if (twisted) return w.act(t);
        // coweight coords: t'_j = sum_i t_i * (w^{-1} alpha_j)_i
        WeylElement winv = w.inverse();
        Vec out(R->n, 0);
        for (int j = 0; j < R->n; ++j) {
            Vec aj(R->n, 0);
            aj[j] = 1;
            Vec pre = winv.act_root(aj);
            Int s = 0;
            for (int i = 0; i < R->n; ++i) s += t[i] * pre[i];
            out[j] = s;
        }
        return out;
    }

    const std::vector<int>& orbit_O() const {
        return twisted ? R->orbit_O_twisted : R->orbit_O_untwisted;
    }

    /// Coordinates of (theta^eps)^vee in the translation lattice.
    Vec theta_covector() const {
        const Vec& th = theta_eps();
        Vec t(R->n);
        for (int j = 0; j < R->n; ++j) {
            Vec ej(R->n, 0);
            ej[j] = 1;
            Int p = R->pair_root_root(th, ej);  // (theta^eps, alpha_j)
            if (twisted) {
                assert(p % R->nu_simple[j] == 0);
                t[j] = p / R->nu_simple[j];  // (vartheta, alpha_j^vee)
            } else {
                Int nu = R->nu_of_root(th);
                assert(p % nu == 0);
                t[j] = p / nu;  // (theta^vee, alpha_j)
            }
        }
        return t;
    }

    bool operator==(const Setting& o) const { return R == o.R && twisted == o.twisted; }
};

inline Setting setting(const RootSystem& R, bool twisted) { return Setting{&R, twisted}; }

struct AffineRoot {
    Vec alpha;  // finite part, root coordinates
    Rat level;

    bool positive() const {
        if (level > Rat(0)) return true;
        if (level < Rat(0)) return false;
        for (Int x : alpha)
            if (x != 0) return x > 0;
        return false;
    }
    bool operator==(const AffineRoot& o) const { return alpha == o.alpha && level == o.level; }
    bool operator<(const AffineRoot& o) const {
        return alpha != o.alpha ? alpha < o.alpha : level < o.level;
    }
};

class AffineElement {
public:
    AffineElement(Setting s, Vec t, WeylElement w)
        : s_(s), t_(std::move(t)), w_(std::move(w)) {}

    static AffineElement identity(Setting s) {
        return AffineElement(s, Vec(s.n(), 0), s.sys().identity());
    }
    static AffineElement translation(Setting s, Vec t) {
        return AffineElement(s, std::move(t), s.sys().identity());
    }
    static AffineElement finite(Setting s, WeylElement w) {
        return AffineElement(s, Vec(s.n(), 0), std::move(w));
    }
    /// Simple reflection s_i, 0 <= i <= n.
    static AffineElement simple(Setting s, int i) {
        if (i >= 1) return finite(s, s.sys().simple_reflection(i));
        return AffineElement(s, s.theta_covector(), s.sys().reflection(s.theta_eps()));
    }
    /// Reflection in an arbitrary affine root [alpha, j]: translation by -j alpha^vee
    /// composed with s_alpha.
    static AffineElement reflection(Setting s, const AffineRoot& ar) {
        const RootSystem& R = s.sys();
        Int nu = R.nu_of_root(ar.alpha);
        Vec t(R.n);
        for (int j = 0; j < R.n; ++j) {
            Vec ej(R.n, 0);
            ej[j] = 1;
            Int p = R.pair_root_root(ar.alpha, ej);
            Rat coef = -ar.level * Rat(p, nu * (s.twisted ? R.nu_simple[j] : 1));
            if (coef.denominator() != 1) throw std::runtime_error("reflection outside lattice");
            t[j] = coef.numerator();
        }
        return AffineElement(s, std::move(t), R.reflection(ar.alpha));
    }

    const Setting& context() const { return s_; }
    const Vec& translation_part() const { return t_; }
    const WeylElement& finite_part() const { return w_; }

    bool operator==(const AffineElement& o) const { return t_ == o.t_ && w_ == o.w_; }

    AffineElement operator*(const AffineElement& o) const {
        return AffineElement(s_, t_ + s_.lattice_act(w_, o.t_), w_ * o.w_);
    }
    AffineElement inverse() const {
        WeylElement wi = w_.inverse();
        return AffineElement(s_, -s_.lattice_act(wi, t_), wi);
    }

    AffineRoot act(const AffineRoot& x) const {
        Vec img = w_.act_root(x.alpha);
        Rat lev = x.level - Rat(s_.pair_lattice_root(t_, img));
        return AffineRoot{std::move(img), lev};
    }

    /// Image of the monomial X_b: returns (w(b), q-exponent shift).
    std::pair<Vec, Rat> act_monomial(const Vec& b) const {
        Vec img = w_.act(b);
        Rat e = -s_.pair_lattice_weight(t_, img);
        return {std::move(img), e};
    }

    AffineRoot simple_root(int i) const {
        if (i >= 1) {
            Vec a(s_.n(), 0);
            a[i - 1] = 1;
            return AffineRoot{a, Rat(0)};
        }
        return AffineRoot{-s_.theta_eps(), Rat(1)};
    }

    /// l(s_i w) < l(w), i in 0..n.
    bool left_descent(int i) const { return !inverse().act(simple_root(i)).positive(); }
    /// l(w s_i) < l(w).
    bool right_descent(int i) const { return !act(simple_root(i)).positive(); }

    bool is_identity() const { return is_zero(t_) && w_.is_identity(); }

private:
    Setting s_;
    Vec t_;
    WeylElement w_;
};

inline AffineRoot affine_simple_root(Setting s, int i) {
    return AffineElement::identity(s).simple_root(i);
}

// ---------------------------------------------------------------------------
// lambda sets and lengths
// ---------------------------------------------------------------------------

/// All positive affine roots of R~^eps sent negative by w-hat.
/// The image of [alpha, j] is [w(alpha), j - p] with p = (w(alpha), t)
/// independent of j, so the negative images form a bounded level range.
inline std::vector<AffineRoot> lambda_set(const AffineElement& wh) {
    const Setting& s = wh.context();
    const RootSystem& R = s.sys();
    std::vector<AffineRoot> out;
    auto scan = [&](const Vec& alpha) {
        Int nu = s.twisted ? R.nu_of_root(alpha) : 1;
        bool pos_alpha = false;
        for (Int x : alpha)
            if (x != 0) { pos_alpha = x > 0; break; }
        Vec img = wh.finite_part().act_root(alpha);
        Int p = s.pair_lattice_root(wh.translation_part(), img);
        bool img_neg = false;
        for (Int x : img)
            if (x != 0) { img_neg = x < 0; break; }
        for (Int k = pos_alpha ? 0 : 1; nu * k <= p; ++k)
            if (nu * k < p || img_neg) out.push_back(AffineRoot{alpha, Rat(nu * k)});
    };
    for (const Vec& c : R.positive_roots) {
        scan(c);
        scan(-c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Int affine_length(const AffineElement& wh) { return Int(lambda_set(wh).size()); }

// ---------------------------------------------------------------------------
// the group Pi and reduced words
// ---------------------------------------------------------------------------

/// pi_r = omega_r^(vee) * u_r^{-1} for r in O; pi_0 = id.
inline AffineElement pi_element(Setting s, int r) {
    const RootSystem& R = s.sys();
    if (r == 0) return AffineElement::identity(s);
    Vec t(R.n, 0);
    t[r - 1] = 1;
    WeylElement ur = R.u_min(R.fundamental_weight(r));
    return AffineElement(s, std::move(t), ur.inverse());
}

struct ReducedWord {
    int r = 0;                 // Pi component
    std::vector<int> letters;  // i_1 .. i_l in application order: w = pi_r s_{i_l} ... s_{i_1}
};

inline AffineElement compose(Setting s, const ReducedWord& rw) {
    AffineElement w = pi_element(s, rw.r);
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it)
        w = w * AffineElement::simple(s, *it);
    return w;
}

/// Reduced word by greedy left-descent stripping, normalized to the form
/// pi_r s_{i_l} ... s_{i_1}. The default chooser takes the smallest descent
/// index, which makes the word canonical; a custom chooser picks among the
/// available descents (used to exercise word-independence).
inline ReducedWord reduce(const AffineElement& wh,
                          const std::function<std::size_t(std::size_t)>& pick = {}) {
    const Setting& s = wh.context();
    AffineElement w = wh;
    std::vector<int> stripped;  // left letters in stripping order
    for (;;) {
        std::vector<int> descents;
        for (int i = 0; i <= s.n(); ++i)
            if (w.left_descent(i)) descents.push_back(i);
        if (descents.empty()) break;
        int found = descents[pick ? pick(descents.size()) : 0];
        stripped.push_back(found);
        w = AffineElement::simple(s, found) * w;
    }
    // w now has no descents: it must be some pi_r
    int r = -1;
    for (int cand : s.orbit_O())
        if (pi_element(s, cand) == w) { r = cand; break; }
    if (r < 0) throw std::logic_error("greedy reduction did not land in Pi");
    // w-hat = s_{a_1} ... s_{a_k} pi_r = pi_r s_{b_1} ... s_{b_k},
    // alpha_{b_m} = pi_r^{-1}(alpha_{a_m})
    AffineElement pir_inv = w.inverse();
    ReducedWord rw;
    rw.r = r;
    std::vector<int> b;
    for (int a : stripped) {
        AffineRoot img = pir_inv.act(AffineElement::identity(s).simple_root(a));
        int idx = -1;
        for (int i = 0; i <= s.n(); ++i)
            if (img == AffineElement::identity(s).simple_root(i)) { idx = i; break; }
        if (idx < 0) throw std::logic_error("Pi conjugation left the simple roots");
        b.push_back(idx);
    }
    rw.letters.assign(b.rbegin(), b.rend());
    return rw;
}

// ---------------------------------------------------------------------------
// pi_rho^eps and its alpha-sequence
// ---------------------------------------------------------------------------

/// The element rho_check^eps * w_0 with its canonical reduced word.
inline AffineElement pi_rho(Setting s) {
    return AffineElement(s, Vec(s.n(), 1), s.sys().longest_element());
}

inline ReducedWord pi_rho_word(Setting s) {
    AffineElement p = pi_rho(s);
    ReducedWord rw = reduce(p);
    if (!(compose(s, rw) == p)) throw std::logic_error("pi_rho word does not recompose");
    return rw;
}

/// alpha^p = s_{i_1} ... s_{i_{p-1}} (alpha_{i_p}); this lists lambda(pi_r s_{i_l}...s_{i_1})
/// in the canonical order.
inline std::vector<AffineRoot> alpha_sequence(Setting s, const std::vector<int>& letters) {
    std::vector<AffineRoot> seq;
    AffineElement g = AffineElement::identity(s);
    for (std::size_t p = 0; p < letters.size(); ++p) {
        seq.push_back(g.act(AffineElement::identity(s).simple_root(letters[p])));
        g = g * AffineElement::simple(s, letters[p]);
    }
    return seq;
}

}  // namespace extremal
