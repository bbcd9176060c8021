#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace grfilt {

/// Exponent vector of a monomial; length equals the variable count of the
/// ambient ring.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
        for (int x : e)
            if (x < 0) throw InputError("negative exponent in monomial");
    }

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

/// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

enum class OrderKind { degrevlex, deglex };

/// Three-way comparison under a global degree-compatible order.
/// Returns >0 if a > b, 0 if equal, <0 if a < b.
inline int mono_cmp(const Monomial& a, const Monomial& b, OrderKind kind) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (kind == OrderKind::deglex) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    }
    // degrevlex: last differing exponent, smaller wins
    for (std::size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

}  // namespace grfilt
