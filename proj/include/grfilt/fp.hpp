#pragma once

#include <cstdint>

#include "errors.hpp"

namespace grfilt {

/// Arithmetic in the prime field F_p. Elements are canonical residues in
/// [0, p). The default characteristic is 32003.
struct PrimeField {
    std::uint32_t p;

    explicit PrimeField(std::uint32_t characteristic = 32003) : p(characteristic) {
        if (p < 2 || !is_prime(p)) throw InputError("field characteristic must be prime and >= 2");
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DomainError("inverse of 0");
        return pow(a, p - 2);
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace grfilt
