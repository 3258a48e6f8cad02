#pragma once

// Operator pipelines for extremal dag-polynomials: the T-natural family,
// the G'-family, the bar operators, the master operator built from the
// canonical reduced word of pi_rho^eps, and the resulting polynomials
// with their degree tables.

#include "qlaurent.hpp"

#include <optional>

namespace extremal {

/// Degrees of orbit monomials: value[w(lambda)] = degree for dominant lambda.
struct DegreeTable {
    Vec lambda;
    std::map<Vec, Int> value;

    Int at(const Vec& orbit_point) const {
        auto it = value.find(orbit_point);
        if (it == value.end()) throw std::out_of_range("orbit point not in degree table");
        return it->second;
    }
};

namespace ops {

/// Pairing (b, alpha_i) with alpha_0 = [-theta^eps, 1].
inline Int simple_pairing(Setting s, int i, const Vec& b) {
    if (i >= 1) return s.sys().nu_simple[i - 1] * b[i - 1];
    return -s.sys().pair_weight_root(b, s.theta_eps());
}

/// One monomial through the affine reflection s_i (exponent shift included).
inline std::pair<Vec, Rat> reflect_monomial(Setting s, int i, const Vec& b) {
    return AffineElement::simple(s, i).act_monomial(b);
}

}  // namespace ops

/// T-natural_i: keeps and reflects when (b, alpha_i) < 0, keeps when = 0,
/// annihilates when > 0.
inline QLaurent t_nat(Setting s, int i, const QLaurent& P) {
    QLaurent out(P.system());
    for (auto& [b, poly] : P.terms()) {
        Int sign = ops::simple_pairing(s, i, b);
        if (sign > 0) continue;
        for (auto& [e, c] : poly) out.add_term(b, e, c);
        if (sign < 0) {
            auto [img, shift] = ops::reflect_monomial(s, i, b);
            for (auto& [e, c] : poly) out.add_term(img, e + shift, c);
        }
    }
    return out;
}

/// G'_{[alpha,j]}: reflects with q^{j(b,alpha^vee)} when (b,alpha) > 0.
inline QLaurent g_prime(Setting s, const AffineRoot& ar, const QLaurent& P) {
    const RootSystem& R = P.system();
    WeylElement sa = R.reflection(ar.alpha);
    Int nu = R.nu_of_root(ar.alpha);
    QLaurent out(R);
    for (auto& [b, poly] : P.terms()) {
        Int p = R.pair_weight_root(b, ar.alpha);
        if (p < 0) continue;
        for (auto& [e, c] : poly) out.add_term(b, e, c);
        if (p > 0) {
            Rat shift = ar.level * Rat(p, nu);
            Vec img = sa.act(b);
            for (auto& [e, c] : poly) out.add_term(img, e + shift, c);
        }
    }
    return out;
}

/// T-sharp_{[alpha,j]}: the q -> 1/q, opposite-inequality variant of G'.
inline QLaurent t_sharp(Setting s, const AffineRoot& ar, const QLaurent& P) {
    const RootSystem& R = P.system();
    WeylElement sa = R.reflection(ar.alpha);
    Int nu = R.nu_of_root(ar.alpha);
    QLaurent out(R);
    for (auto& [b, poly] : P.terms()) {
        Int p = R.pair_weight_root(b, ar.alpha);
        if (p > 0) continue;
        for (auto& [e, c] : poly) out.add_term(b, e, c);
        if (p < 0) {
            Rat shift = -ar.level * Rat(p, nu);
            Vec img = sa.act(b);
            for (auto& [e, c] : poly) out.add_term(img, e + shift, c);
        }
    }
    return out;
}

/// T-bar'_i: keeps and reflects when (b, alpha_i) > 0, keeps when = 0,
/// annihilates when < 0.
inline QLaurent tbar_prime(Setting s, int i, const QLaurent& P) {
    QLaurent out(P.system());
    for (auto& [b, poly] : P.terms()) {
        Int sign = ops::simple_pairing(s, i, b);
        if (sign < 0) continue;
        for (auto& [e, c] : poly) out.add_term(b, e, c);
        if (sign > 0) {
            auto [img, shift] = ops::reflect_monomial(s, i, b);
            for (auto& [e, c] : poly) out.add_term(img, e + shift, c);
        }
    }
    return out;
}

/// T-bar_i = T-bar'_i - 1.
inline QLaurent tbar(Setting s, int i, const QLaurent& P) {
    QLaurent out(P.system());
    for (auto& [b, poly] : P.terms()) {
        Int sign = ops::simple_pairing(s, i, b);
        if (sign == 0) continue;
        if (sign > 0) {
            auto [img, shift] = ops::reflect_monomial(s, i, b);
            for (auto& [e, c] : poly) out.add_term(img, e + shift, c);
        } else {
            for (auto& [e, c] : poly) out.add_term(b, e, -c);
        }
    }
    return out;
}

/// Compose a per-letter operator along w = s_{j_1} ... s_{j_m} (reduced),
/// applying the rightmost letter first.
template <typename Op>
inline QLaurent along_finite_word(Setting s, const WeylElement& w, QLaurent P, Op&& op) {
    std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) P = op(s, *it, P);
    return P;
}

inline QLaurent tbar_word(Setting s, const WeylElement& w, QLaurent P) {
    return along_finite_word(s, w, std::move(P), [](Setting t, int i, const QLaurent& Q) {
        return tbar(t, i, Q);
    });
}

inline QLaurent tbar_prime_word(Setting s, const WeylElement& w, QLaurent P) {
    return along_finite_word(s, w, std::move(P), [](Setting t, int i, const QLaurent& Q) {
        return tbar_prime(t, i, Q);
    });
}

/// T-bar'_{w-hat} = pi_r T-bar'_{i_l} ... T-bar'_{i_1} along a reduced word.
inline QLaurent tbar_prime_affine(Setting s, const ReducedWord& rw, QLaurent P) {
    for (int i : rw.letters) P = tbar_prime(s, i, P);
    return P.apply_affine(pi_element(s, rw.r));
}

// ---------------------------------------------------------------------------
// the master operator and extremal dag-polynomials
// ---------------------------------------------------------------------------

/// T^eps applied along an explicit reduced word of pi_rho^eps.
inline QLaurent frak_T_along(Setting s, const ReducedWord& rw, QLaurent P) {
    for (int i : rw.letters) P = t_nat(s, i, P);
    return P.apply_affine(pi_element(s, rw.r));
}

inline QLaurent frak_T(Setting s, const QLaurent& P) {
    return frak_T_along(s, pi_rho_word(s), P);
}

struct DagResult {
    QLaurent poly;
    DegreeTable degrees;  // degrees.lambda = -b, keyed by w(-b)
    Setting context;
    Vec base;  // the antidominant b

    std::string format() const { return format_paper(poly, base); }
};

namespace detail {
/// Validate purity and extract degrees: every coefficient q^{-e}, e >= 0,
/// with e = 0 exactly at X_b; support exactly W(b).
inline DagResult make_dag_result(Setting s, const Vec& b, QLaurent P) {
    const RootSystem& R = P.system();
    DagResult out{std::move(P), DegreeTable{-b, {}}, s, b};
    std::set<Vec> expect;
    for (const Vec& c : orbit(R, b)) expect.insert(c);
    if (out.poly.terms().size() != expect.size())
        throw std::runtime_error("dag polynomial support is not the full orbit");
    for (auto& [c, poly] : out.poly.terms()) {
        if (!expect.count(c)) throw std::runtime_error("dag polynomial leaves the orbit");
        if (poly.size() != 1) throw std::runtime_error("dag coefficient is not a pure q-power");
        auto& [e, k] = *poly.begin();
        if (k != 1 || e.denominator() != 1 || e > Rat(0))
            throw std::runtime_error("dag coefficient is not q^{-e} with e >= 0");
        if ((e == Rat(0)) != (c == b))
            throw std::runtime_error("unit coefficient exactly at X_b violated");
        out.degrees.value[-c] = -e.numerator();
    }
    return out;
}
}  // namespace detail

/// E-dag_b = q^{(rho-check^eps, b)} T^eps(M_b) for antidominant b.
inline DagResult extremal_dag(Setting s, const Vec& b) {
    const RootSystem& R = s.sys();
    if (!R.antidominant(b)) throw std::invalid_argument("extremal_dag needs antidominant b");
    QLaurent P = frak_T(s, orbit_sum(R, b)).scaled_q(s.pair_rho_check_eps(b));
    return detail::make_dag_result(s, b, std::move(P));
}

/// The independent G'-pipeline route along the alpha-sequence.
inline DagResult extremal_dag_via_g(Setting s, const Vec& b) {
    const RootSystem& R = s.sys();
    if (!R.antidominant(b)) throw std::invalid_argument("extremal_dag_via_g needs antidominant b");
    ReducedWord rw = pi_rho_word(s);
    QLaurent P = orbit_sum(R, b);
    for (const AffineRoot& ar : alpha_sequence(s, rw.letters)) P = g_prime(s, ar, P);
    P = P.apply_translation(s, Vec(R.n, 1));
    P = P.scaled_q(s.pair_rho_check_eps(b));
    return detail::make_dag_result(s, b, std::move(P));
}

/// Blocks T^eps(X_{u(b_+)}) of the orbit-sum pipeline, indexed by the
/// minimal-length coset representatives u of W/W^{b_+} for the dominant
/// representative b_+ of the orbit of an antidominant b.
inline std::vector<std::pair<WeylElement, QLaurent>> block_decomposition(Setting s, const Vec& b) {
    const RootSystem& R = s.sys();
    if (!R.antidominant(b)) throw std::invalid_argument("block_decomposition needs antidominant b");
    Vec bplus = R.longest_element().act(b);
    ReducedWord rw = pi_rho_word(s);
    std::vector<std::pair<WeylElement, QLaurent>> blocks;
    for (auto& pt : orbit_with_reps(R, bplus))
        blocks.emplace_back(pt.rep, frak_T_along(s, rw, QLaurent::monomial(R, pt.weight)));
    return blocks;
}

/// E-bar_b = T-bar'_{u_b^{-1} w_0} (X_{b_+}): unit coefficients on the
/// Bruhat-upward part of the orbit.
inline QLaurent extremal_bar(Setting s, const Vec& b) {
    const RootSystem& R = s.sys();
    WeylElement u = R.u_min(b);
    Vec bplus = R.longest_element().act(u.act(b));
    return tbar_prime_word(s, u.inverse() * R.longest_element(), QLaurent::monomial(R, bplus));
}

/// T-bar_u T-bar'_v (X_b) for l(uv) = l(u) + l(v) and dominant b.
inline QLaurent mixed_bar(Setting s, const WeylElement& u, const WeylElement& v, const Vec& b) {
    if (!s.sys().dominant(b)) throw std::invalid_argument("mixed_bar needs dominant b");
    if ((u * v).length() != u.length() + v.length())
        throw std::invalid_argument("mixed_bar needs l(uv) = l(u) + l(v)");
    return tbar_word(s, u, tbar_prime_word(s, v, QLaurent::monomial(s.sys(), b)));
}

/// -w_0 on weights.
inline Vec iota(const RootSystem& R, const Vec& b) { return -R.longest_element().act(b); }

/// E-dag_b for arbitrary b in P, through the bar-operator factorization
/// with pi_c = u_{b^iota}^{-1} pi_{rho-check^eps}.
inline QLaurent extremal_dag_general(Setting s, const Vec& b) {
    const RootSystem& R = s.sys();
    WeylElement w0 = R.longest_element();
    Vec biota = iota(R, b);
    WeylElement u = R.u_min(biota);
    WeylElement v = u.inverse() * w0;
    Vec biota_plus = w0.act(u.act(biota));
    QLaurent inner = mixed_bar(s, u, v, biota_plus);
    QLaurent mid = tbar_prime_affine(s, pi_rho_word(s), std::move(inner));
    QLaurent outer = tbar_word(s, u.inverse(), std::move(mid));
    Vec bplus = w0.act(R.u_min(b).act(b));
    return outer.star().scaled_q(-s.pair_rho_check_eps(bplus));
}

/// Degree table e(lambda, w) for dominant lambda, from the pipeline.
inline DegreeTable dag_degree_table(Setting s, const Vec& lambda) {
    if (!s.sys().dominant(lambda)) throw std::invalid_argument("dag_degree_table needs dominant lambda");
    return extremal_dag(s, -lambda).degrees;
}

/// All coefficients pure powers q^{-e}, e >= 0?
inline bool is_pure_qpowers(const QLaurent& P) {
    for (auto& [b, poly] : P.terms()) {
        if (poly.size() != 1) return false;
        auto& [e, k] = *poly.begin();
        if (k != 1 || e.denominator() != 1 || e > Rat(0)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// the A_n closed form
// ---------------------------------------------------------------------------

/// t -> infinity limit of the HHL formula: sum over i-subsets J of {1..n+1}
/// of q^{-n_i(J)} times the orbit monomial of x_J on the sl weight lattice.
inline QLaurent hhl_dag_An(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("index out of range for A_n");
    const RootSystem& R = root_system(TypeLabel{Family::A, n});
    QLaurent out(R);
    std::vector<int> J(i);
    for (int k = 0; k < i; ++k) J[k] = k + 1;
    auto emit = [&]() {
        int ni = 0;
        for (int j : J)
            if (j <= n + 1 - i) ++ni;
        // x_J corresponds to the weight with gl indicator reversed and negated
        Vec g(n + 2, 0);
        for (int j : J) g[n + 2 - j] = -1;  // g indexed 1..n+1
        Vec m(n);
        for (int k = 1; k <= n; ++k) m[k - 1] = g[k] - g[k + 1];
        out.add_term(m, Rat(-ni), 1);
    };
    for (;;) {
        emit();
        int k = i - 1;
        while (k >= 0 && J[k] == n + 1 - (i - 1 - k)) --k;
        if (k < 0) break;
        ++J[k];
        for (int j = k + 1; j < i; ++j) J[j] = J[j - 1] + 1;
    }
    return out;
}

}  // namespace extremal
