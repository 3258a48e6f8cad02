#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extremal {

using Int = long long;
using Vec = std::vector<Int>;
using Rat = boost::rational<Int>;
using RatVec = std::vector<Rat>;

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec operator*(Int k, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline Int sum(const Vec& a) {
    Int s = 0;
    for (Int x : a) s += x;
    return s;
}

/// Exact conversion of a rational vector known to be integral.
inline Vec to_int_vec(const RatVec& v, const char* what = "vector") {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].denominator() != 1)
            throw std::runtime_error(std::string("non-integral ") + what);
        r[i] = v[i].numerator();
    }
    return r;
}

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Int x : v) h = h * 1099511628211ull + static_cast<std::size_t>(x + 0x7fff);
        return h;
    }
};

inline std::string vec_str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace extremal
