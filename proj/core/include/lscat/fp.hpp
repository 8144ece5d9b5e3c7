#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lscat {

// Residue arithmetic modulo a prime p. Everything downstream works over
// F_2 or F_3, but any prime modulus is accepted.
class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(long long value, int p) : p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        v_ = static_cast<int>(((value % p) + p) % p);
    }

    int value() const { return v_; }
    int modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { check(o); return Fp(v_ + o.v_, p_); }
    Fp operator-(const Fp& o) const { check(o); return Fp(v_ - o.v_, p_); }
    Fp operator*(const Fp& o) const { check(o); return Fp(static_cast<long long>(v_) * o.v_, p_); }
    Fp operator-() const { return Fp(-v_, p_); }

    // Fermat inverse; p is prime by contract.
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        long long base = v_, acc = 1;
        for (int e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
        }
        return Fp(acc, p_);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
    }
    int v_;
    int p_;
};

// C(n, k) mod p via the Pascal recurrence; n stays small here.
int binomial_mod(int n, int k, int p);

// Reduce an integer coefficient into [0, p).
inline int mod_p(long long c, int p) { return static_cast<int>(((c % p) + p) % p); }

}  // namespace lscat
