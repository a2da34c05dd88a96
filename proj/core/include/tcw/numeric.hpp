#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tcw {

// All arithmetic is exact: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero_vec(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

/// Divides out the gcd so that the vector is primitive; the zero vector is
/// returned unchanged.
inline IntVec make_primitive(IntVec v) {
    Int g = vec_gcd(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline bool is_primitive(const IntVec& v) {
    return !is_zero_vec(v) && vec_gcd(v) == 1;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Exact integer value of a rational known to be integral.
inline Int to_int(const Rat& q) { return q.get_num(); }

inline Int binomial(const Int& n, unsigned long k) {
    if (n < 0 || Int(k) > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tcw
