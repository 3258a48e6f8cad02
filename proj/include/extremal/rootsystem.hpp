#pragma once

// Root-system tables and finite Weyl groups for the reduced irreducible
// types A..G, normalized so that (alpha,alpha) = 2 for short roots.
// Weights are stored in fundamental-weight coordinates, roots in
// simple-root coordinates; conversions go through the exact rational
// inverse of the transposed Cartan matrix.

#include "core.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace extremal {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
    Family fam;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(fam)) + std::to_string(rank); }
    bool operator==(const TypeLabel& o) const { return fam == o.fam && rank == o.rank; }
};

inline TypeLabel parse_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type label: " + s);
    int rank = 0;
    try {
        rank = std::stoi(s.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad type label: " + s);
    }
    switch (s[0]) {
        case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
            return TypeLabel{static_cast<Family>(s[0]), rank};
        default:
            throw std::invalid_argument("bad type label: " + s);
    }
}

class RootSystem;
const RootSystem& root_system(const TypeLabel& label);
inline const RootSystem& root_system(const std::string& s) { return root_system(parse_type(s)); }

/// A finite Weyl group element, canonicalized by its integer action
/// matrix on fundamental-weight coordinates.
class WeylElement {
public:
    WeylElement() : R_(nullptr) {}
    WeylElement(const RootSystem* R, Vec mat, Vec inv)
        : R_(R), mat_(std::move(mat)), inv_(std::move(inv)) {}

    const RootSystem& system() const { return *R_; }
    bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
    bool operator!=(const WeylElement& o) const { return mat_ != o.mat_; }
    bool operator<(const WeylElement& o) const { return mat_ < o.mat_; }

    Vec act(const Vec& weight) const;           // weight coords
    Vec act_root(const Vec& root) const;        // root coords
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const { return WeylElement(R_, inv_, mat_); }
    bool is_identity() const;

    Int length() const;
    std::vector<int> reduced_word() const;      // letters in 1..n, leftmost first
    bool left_descent(int i) const;             // l(s_i w) < l(w)
    bool right_descent(int i) const;            // l(w s_i) < l(w)

    /// Signed one-line form for the classical types (plain permutation of
    /// length n+1 for A_n). Entry j is w_j with w(eps_j) = sgn(w_j) eps_{|w_j|}.
    std::vector<int> one_line() const;

    const Vec& matrix() const { return mat_; }

    struct Hash {
        std::size_t operator()(const WeylElement& w) const noexcept { return VecHash{}(w.matrix()); }
    };

private:
    const RootSystem* R_;
    Vec mat_, inv_;  // n*n row-major, mutually inverse
};

class RootSystem {
public:
    TypeLabel label;
    int n = 0;
    std::vector<Vec> cartan;           // cartan[i][j] = (alpha_i, alpha_j^vee)
    Vec nu_simple;                     // nu_i = (alpha_i,alpha_i)/2
    Int nu_lng = 1;
    std::vector<Vec> positive_roots;   // simple-root coordinates, by increasing height
    Vec nu_positive;                   // nu per positive root
    std::vector<RatVec> inv_cartan_t;  // (cartan^T)^{-1}
    Vec theta_lng, theta_sht;          // root coords
    std::vector<int> orbit_O_untwisted, orbit_O_twisted;  // indices in {0..n}

    // ---- coordinate conversions ----

    Vec root_to_weight(const Vec& c) const {
        Vec m(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) m[i] += c[j] * cartan[j][i];
        return m;
    }

    RatVec weight_to_root(const Vec& m) const {
        RatVec c(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i] += inv_cartan_t[i][j] * m[j];
        return c;
    }

    bool in_root_lattice(const Vec& m) const {
        for (const Rat& x : weight_to_root(m))
            if (x.denominator() != 1) return false;
        return true;
    }

    // ---- the normalized symmetric form ----

    Int pair_root_root(const Vec& c1, const Vec& c2) const {  // (alpha, beta)
        Int s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += c1[i] * cartan[i][j] * nu_simple[j] * c2[j];
        return s;
    }

    Int nu_of_root(const Vec& c) const { return pair_root_root(c, c) / 2; }

    Int pair_weight_root(const Vec& m, const Vec& c) const {  // (lambda, alpha)
        Int s = 0;
        for (int j = 0; j < n; ++j) s += c[j] * nu_simple[j] * m[j];
        return s;
    }

    Int pair_weight_coroot(const Vec& m, const Vec& c) const {  // (lambda, alpha^vee)
        Int p = pair_weight_root(m, c), nu = nu_of_root(c);
        assert(p % nu == 0);
        return p / nu;
    }

    Rat pair_weight_weight(const Vec& m1, const Vec& m2) const {
        RatVec c2 = weight_to_root(m2);
        Rat s(0);
        for (int j = 0; j < n; ++j) s += c2[j] * nu_simple[j] * m1[j];
        return s;
    }

    /// (rho_check, z) = sum of the root coordinates of z.
    Rat pair_rho_check(const Vec& m) const {
        RatVec c = weight_to_root(m);
        Rat s(0);
        for (const Rat& x : c) s += x;
        return s;
    }

    /// (rho, z), rho the half sum of positive roots.
    Rat pair_rho(const Vec& m) const {
        RatVec c = weight_to_root(m);
        Rat s(0);
        for (int j = 0; j < n; ++j) s += c[j] * nu_simple[j];
        return s;
    }

    // ---- distinguished weights ----

    Vec fundamental_weight(int i) const {  // 1-based
        Vec m(n, 0);
        m[i - 1] = 1;
        return m;
    }

    Vec rho() const { return Vec(n, 1); }

    bool dominant(const Vec& m) const {
        return std::all_of(m.begin(), m.end(), [](Int x) { return x >= 0; });
    }
    bool antidominant(const Vec& m) const {
        return std::all_of(m.begin(), m.end(), [](Int x) { return x <= 0; });
    }

    // ---- Weyl group ----

    WeylElement identity() const {
        Vec m(n * n, 0);
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        return WeylElement(this, m, m);
    }

    WeylElement simple_reflection(int i) const {  // 1-based
        Vec m(n * n, 0);
        for (int j = 0; j < n; ++j) m[j * n + j] = 1;
        for (int j = 0; j < n; ++j) m[j * n + (i - 1)] -= cartan[i - 1][j];
        return WeylElement(this, m, m);
    }

    /// Reflection in an arbitrary positive root (root coordinates).
    WeylElement reflection(const Vec& c) const {
        Vec aw = root_to_weight(c);
        Int nu = nu_of_root(c);
        Vec m(n * n, 0);
        for (int k = 0; k < n; ++k) {
            // image of omega_{k+1}: e_k - (omega_k, alpha^vee) * alpha
            Int pk = c[k] * nu_simple[k];
            assert(pk % nu == 0);
            Int coef = pk / nu;
            for (int j = 0; j < n; ++j) m[j * n + k] = (j == k ? 1 : 0) - coef * aw[j];
        }
        return WeylElement(this, m, m);
    }

    WeylElement from_word(const std::vector<int>& word) const {
        WeylElement w = identity();
        for (int i : word) w = w * simple_reflection(i);
        return w;
    }

    WeylElement from_one_line(const std::vector<int>& line) const;

    WeylElement longest_element() const;

    /// Minimal-length u with u(b) antidominant.
    WeylElement u_min(const Vec& b) const {
        WeylElement u = identity();
        Vec c = b;
        for (;;) {
            int i = 0;
            for (int k = 0; k < n; ++k)
                if (c[k] > 0) { i = k + 1; break; }
            if (i == 0) return u;
            u = simple_reflection(i) * u;
            Vec d = c;
            for (int j = 0; j < n; ++j) d[j] -= c[i - 1] * cartan[i - 1][j];
            c = std::move(d);
        }
    }

    friend const RootSystem& root_system(const TypeLabel&);

    // epsilon-basis vectors in weight coordinates (classical types only);
    // for A_n these are the n+1 mean-zero images of the gl basis.
    std::vector<Vec> epsilon_basis() const;

private:
    void build(const TypeLabel& lab);
};

// ---------------------------------------------------------------------------
// WeylElement methods
// ---------------------------------------------------------------------------

inline Vec WeylElement::act(const Vec& weight) const {
    const int n = R_->n;
    Vec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += mat_[i * n + j] * weight[j];
    return r;
}

inline Vec WeylElement::act_root(const Vec& root) const {
    RatVec c = R_->weight_to_root(act(R_->root_to_weight(root)));
    return to_int_vec(c, "root image");
}

inline WeylElement WeylElement::operator*(const WeylElement& o) const {
    const int n = R_->n;
    Vec m(n * n, 0), inv(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Int a = mat_[i * n + k];
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) m[i * n + j] += a * o.mat_[k * n + j];
        }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Int a = o.inv_[i * n + k];
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) inv[i * n + j] += a * inv_[k * n + j];
        }
    return WeylElement(R_, std::move(m), std::move(inv));
}

inline bool WeylElement::is_identity() const {
    const int n = R_->n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mat_[i * n + j] != (i == j)) return false;
    return true;
}

inline Int WeylElement::length() const {
    Int l = 0;
    for (const Vec& c : R_->positive_roots) {
        Vec img = act_root(c);
        bool neg = false;
        for (Int x : img)
            if (x < 0) { neg = true; break; }
        if (neg) ++l;
    }
    return l;
}

inline bool WeylElement::right_descent(int i) const {
    // l(w s_i) < l(w) iff w(alpha_i) < 0
    Vec ai(R_->n, 0);
    ai[i - 1] = 1;
    Vec img = act_root(ai);
    for (Int x : img)
        if (x < 0) return true;
    return false;
}

inline bool WeylElement::left_descent(int i) const { return inverse().right_descent(i); }

inline std::vector<int> WeylElement::reduced_word() const {
    std::vector<int> word;
    WeylElement w = *this;
    for (;;) {
        int i = 0;
        for (int k = 1; k <= R_->n; ++k)
            if (w.left_descent(k)) { i = k; break; }
        if (i == 0) break;
        word.push_back(i);
        w = R_->simple_reflection(i) * w;
    }
    assert(w.is_identity());
    return word;
}

inline std::vector<Vec> RootSystem::epsilon_basis() const {
    std::vector<Vec> eps;
    auto fw = [&](int i) { return i >= 1 && i <= n ? fundamental_weight(i) : Vec(n, 0); };
    switch (label.fam) {
        case Family::A:
            for (int j = 1; j <= n + 1; ++j) eps.push_back(fw(j) - fw(j - 1));
            break;
        case Family::B:
            for (int j = 1; j < n; ++j) eps.push_back(fw(j) - fw(j - 1));
            eps.push_back(2 * fw(n) - fw(n - 1));
            break;
        case Family::C:
            for (int j = 1; j <= n; ++j) eps.push_back(fw(j) - fw(j - 1));
            break;
        case Family::D:
            for (int j = 1; j <= n - 2; ++j) eps.push_back(fw(j) - fw(j - 1));
            eps.push_back(fw(n - 1) + fw(n) - fw(n - 2));
            eps.push_back(fw(n) - fw(n - 1));
            break;
        default:
            throw std::logic_error("epsilon basis is classical-only");
    }
    return eps;
}

inline std::vector<int> WeylElement::one_line() const {
    const RootSystem& R = *R_;
    std::vector<Vec> eps = R.epsilon_basis();
    std::vector<int> line;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        Vec img = act(eps[j]);
        int found = 0;
        for (std::size_t k = 0; k < eps.size() && !found; ++k) {
            if (img == eps[k]) found = static_cast<int>(k) + 1;
            else if (img == -eps[k]) found = -(static_cast<int>(k) + 1);
        }
        if (!found) throw std::logic_error("not a signed permutation image");
        line.push_back(found);
    }
    return line;
}

inline WeylElement RootSystem::from_one_line(const std::vector<int>& line) const {
    std::vector<Vec> eps = epsilon_basis();
    const std::size_t N = eps.size();
    if (line.size() != N) throw std::invalid_argument("one-line length mismatch");
    {
        std::vector<bool> hit(N, false);
        int negs = 0;
        for (int v : line) {
            int a = std::abs(v);
            if (a < 1 || a > static_cast<int>(N) || hit[a - 1])
                throw std::invalid_argument("not a signed permutation");
            hit[a - 1] = true;
            if (v < 0) ++negs;
        }
        if (label.fam == Family::A && negs > 0)
            throw std::invalid_argument("type A takes plain permutations");
        if (label.fam == Family::D && negs % 2 != 0)
            throw std::invalid_argument("type D needs an even number of sign changes");
    }

    // column i of the action matrix = w(omega_i), assembled from the images
    // of the eps vectors via the per-family prefix-sum expressions
    auto build_matrix = [&](const std::vector<int>& ln) {
        auto image_eps = [&](int j) {  // 1-based
            int v = ln[j - 1];
            Vec r = eps[std::abs(v) - 1];
            return v > 0 ? r : -r;
        };
        Vec mat(n * n, 0);
        for (int i = 1; i <= n; ++i) {
            Vec img(n, 0);
            bool halve = false;
            if (label.fam == Family::B && i == n) {
                for (int j = 1; j <= n; ++j) img = img + image_eps(j);
                halve = true;
            } else if (label.fam == Family::D && i == n - 1) {
                for (int j = 1; j < n; ++j) img = img + image_eps(j);
                img = img - image_eps(n);
                halve = true;
            } else if (label.fam == Family::D && i == n) {
                for (int j = 1; j <= n; ++j) img = img + image_eps(j);
                halve = true;
            } else {
                for (int j = 1; j <= i; ++j) img = img + image_eps(j);
            }
            if (halve)
                for (Int& x : img) {
                    assert(x % 2 == 0);
                    x /= 2;
                }
            for (int j = 0; j < n; ++j) mat[j * n + (i - 1)] = img[j];
        }
        return mat;
    };

    std::vector<int> invline(N);
    for (std::size_t j = 1; j <= N; ++j) {
        int v = line[j - 1];
        invline[std::abs(v) - 1] = v > 0 ? static_cast<int>(j) : -static_cast<int>(j);
    }
    return WeylElement(this, build_matrix(line), build_matrix(invline));
}

// ---------------------------------------------------------------------------
// orbits, cosets, Bruhat order
// ---------------------------------------------------------------------------

/// W-orbit of a weight in BFS order from the starting point; each entry
/// carries a minimal-length representative of the coset sending the start
/// to that point.
struct OrbitPoint {
    Vec weight;
    WeylElement rep;  // rep.act(start) == weight, minimal length
    Int depth;
};

inline std::vector<OrbitPoint> orbit_with_reps(const RootSystem& R, const Vec& start) {
    std::vector<OrbitPoint> out;
    std::unordered_map<Vec, std::size_t, VecHash> seen;
    std::deque<std::size_t> queue;
    out.push_back({start, R.identity(), 0});
    seen[start] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        for (int i = 1; i <= R.n; ++i) {
            Vec cur = out[at].weight;
            if (cur[i - 1] == 0) continue;
            Vec img = cur;
            for (int j = 0; j < R.n; ++j) img[j] -= cur[i - 1] * R.cartan[i - 1][j];
            if (seen.count(img)) continue;
            seen[img] = out.size();
            out.push_back({img, R.simple_reflection(i) * out[at].rep, out[at].depth + 1});
            queue.push_back(out.size() - 1);
        }
    }
    return out;
}

inline std::vector<Vec> orbit(const RootSystem& R, const Vec& start) {
    std::vector<Vec> v;
    for (auto& p : orbit_with_reps(R, start)) v.push_back(p.weight);
    return v;
}

/// Minimal-length coset representatives of W / W^{omega_i}.
inline std::vector<WeylElement> coset_reps(const RootSystem& R, int i) {
    std::vector<WeylElement> reps;
    for (auto& p : orbit_with_reps(R, R.fundamental_weight(i))) reps.push_back(p.rep);
    return reps;
}

inline std::vector<WeylElement> enumerate_weyl(const RootSystem& R) {
    std::vector<WeylElement> out;
    std::unordered_set<Vec, VecHash> seen;
    out.push_back(R.identity());
    seen.insert(out.back().matrix());
    for (std::size_t at = 0; at < out.size(); ++at) {
        for (int i = 1; i <= R.n; ++i) {
            WeylElement w = R.simple_reflection(i) * out[at];
            if (seen.insert(w.matrix()).second) out.push_back(w);
        }
    }
    return out;
}

inline WeylElement RootSystem::longest_element() const { return u_min(rho()); }

/// Bruhat order u <= v via the standard descent recursion.
inline bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
    Int lu = u.length(), lv = v.length();
    if (lu > lv) return false;
    if (lv == 0) return lu == 0;
    const RootSystem& R = u.system();
    int i = 0;
    for (int k = 1; k <= R.n; ++k)
        if (v.left_descent(k)) { i = k; break; }
    WeylElement si = R.simple_reflection(i);
    if (u.left_descent(i)) return bruhat_leq(si * u, si * v);
    return bruhat_leq(u, si * v);
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

inline void RootSystem::build(const TypeLabel& lab) {
    label = lab;
    n = lab.rank;
    auto bad = [&]() { throw std::invalid_argument("unsupported type/rank: " + lab.str()); };
    switch (lab.fam) {
        case Family::A: if (n < 1) bad(); break;
        case Family::B: case Family::C: if (n < 2) bad(); break;
        case Family::D: if (n < 4) bad(); break;
        case Family::E: if (n < 6 || n > 8) bad(); break;
        case Family::F: if (n != 4) bad(); break;
        case Family::G: if (n != 2) bad(); break;
    }

    cartan.assign(n, Vec(n, 0));
    nu_simple.assign(n, 1);
    auto chain = [&](int a, int b) {  // simply-laced bond, 1-based
        cartan[a - 1][b - 1] = -1;
        cartan[b - 1][a - 1] = -1;
    };
    for (int i = 0; i < n; ++i) cartan[i][i] = 2;
    switch (lab.fam) {
        case Family::A:
            for (int i = 1; i < n; ++i) chain(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i + 1 < n; ++i) chain(i, i + 1);
            cartan[n - 2][n - 1] = -2;
            cartan[n - 1][n - 2] = -1;
            for (int i = 0; i + 1 < n; ++i) nu_simple[i] = 2;
            break;
        case Family::C:
            for (int i = 1; i + 1 < n; ++i) chain(i, i + 1);
            cartan[n - 2][n - 1] = -1;
            cartan[n - 1][n - 2] = -2;
            nu_simple[n - 1] = 2;
            break;
        case Family::D:
            for (int i = 1; i + 1 < n; ++i) chain(i, i + 1);
            chain(n - 2, n);
            break;
        case Family::E:
            chain(1, 3); chain(3, 4); chain(4, 5); chain(2, 4);
            for (int i = 5; i < n; ++i) chain(i, i + 1);
            break;
        case Family::F:
            chain(1, 2); chain(3, 4);
            cartan[1][2] = -2;
            cartan[2][1] = -1;
            nu_simple[0] = nu_simple[1] = 2;
            break;
        case Family::G:
            cartan[0][1] = -1;
            cartan[1][0] = -3;
            nu_simple[1] = 3;
            break;
    }
    nu_lng = *std::max_element(nu_simple.begin(), nu_simple.end());

    // (cartan^T)^{-1} by rational Gaussian elimination
    {
        std::vector<RatVec> m(n, RatVec(2 * n, Rat(0)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = Rat(cartan[j][i]);
            m[i][n + i] = Rat(1);
        }
        for (int col = 0; col < n; ++col) {
            int piv = col;
            while (m[piv][col] == Rat(0)) ++piv;
            std::swap(m[piv], m[col]);
            Rat d = m[col][col];
            for (int j = 0; j < 2 * n; ++j) m[col][j] /= d;
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == Rat(0)) continue;
                Rat f = m[r][col];
                for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
            }
        }
        inv_cartan_t.assign(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) inv_cartan_t[i][j] = m[i][n + j];
    }

    // positive roots by upward closure through root strings, height by height
    {
        std::map<Vec, bool> known;  // root -> true (positivity implicit)
        std::vector<Vec> frontier;
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            known[e] = true;
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Vec> cur;
            for (auto& kv : known) cur.push_back(kv.first);
            for (const Vec& r : cur) {
                for (int i = 0; i < n; ++i) {
                    Vec ai(n, 0);
                    ai[i] = 1;
                    if (r == ai) continue;
                    // p = how far the alpha_i-string continues downward
                    Int p = 0;
                    Vec down = r - ai;
                    while (!std::any_of(down.begin(), down.end(), [](Int x) { return x < 0; }) &&
                           known.count(down)) {
                        ++p;
                        down = down - ai;
                    }
                    Int pairing = 0;  // (r, alpha_i^vee)
                    for (int j = 0; j < n; ++j) pairing += r[j] * cartan[j][i];
                    Int q = p - pairing;
                    if (q >= 1 && !known.count(r + ai)) {
                        known[r + ai] = true;
                        grew = true;
                    }
                }
            }
        }
        positive_roots.clear();
        for (auto& kv : known) positive_roots.push_back(kv.first);
        std::stable_sort(positive_roots.begin(), positive_roots.end(),
                         [](const Vec& a, const Vec& b) {
                             Int ha = sum(a), hb = sum(b);
                             return ha != hb ? ha < hb : a < b;
                         });
        nu_positive.clear();
        for (const Vec& r : positive_roots) nu_positive.push_back(nu_of_root(r));
    }

    // maximal long and short roots (coincide for simply-laced types)
    {
        Int best_l = -1, best_s = -1;
        for (std::size_t k = 0; k < positive_roots.size(); ++k) {
            Int h = sum(positive_roots[k]);
            if (nu_positive[k] == nu_lng && (best_l < 0 || h > sum(positive_roots[best_l])))
                best_l = static_cast<Int>(k);
            if (nu_positive[k] == 1 && (best_s < 0 || h > sum(positive_roots[best_s])))
                best_s = static_cast<Int>(k);
        }
        theta_lng = positive_roots[best_l];
        theta_sht = positive_roots[best_s];
    }

    // O = indices r with omega_r^vee (untwisted) resp. omega_r (twisted)
    // pairing at most 1 against every positive root resp. coroot
    orbit_O_untwisted = {0};
    orbit_O_twisted = {0};
    for (int r = 1; r <= n; ++r) {
        bool unt = true, twi = true;
        Vec om = fundamental_weight(r);
        for (std::size_t k = 0; k < positive_roots.size(); ++k) {
            const Vec& c = positive_roots[k];
            if (c[r - 1] > 1) unt = false;                       // (omega_r^vee, alpha) = c_r
            if (pair_weight_coroot(om, c) > 1) twi = false;      // (omega_r, alpha^vee)
        }
        if (unt) orbit_O_untwisted.push_back(r);
        if (twi) orbit_O_twisted.push_back(r);
    }
}

namespace detail {
inline std::map<std::string, std::unique_ptr<RootSystem>>& rs_registry() {
    static std::map<std::string, std::unique_ptr<RootSystem>> reg;
    return reg;
}
inline std::mutex& rs_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

inline const RootSystem& root_system(const TypeLabel& label) {
    std::lock_guard<std::mutex> lock(detail::rs_mutex());
    auto& reg = detail::rs_registry();
    auto it = reg.find(label.str());
    if (it == reg.end()) {
        auto rs = std::make_unique<RootSystem>();
        rs->build(label);
        it = reg.emplace(label.str(), std::move(rs)).first;
    }
    return *it->second;
}

}  // namespace extremal
