#include "donsw/numeric.hpp"

#include "donsw/errors.hpp"

namespace donsw {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw invariant_error("rational with zero denominator");
    return Rat(num, den);
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

Int multinomial(const std::vector<unsigned>& parts) {
    unsigned total = 0;
    for (unsigned p : parts)
        total += p;
    Int r = factorial(total);
    for (unsigned p : parts)
        r /= factorial(p);
    return r;
}

Rat pow2(long e) {
    Int p = 1;
    p <<= static_cast<unsigned>(e < 0 ? -e : e);
    return e >= 0 ? Rat(p) : Rat(Int(1), p);
}

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r = 1;
    Rat b = base;
    for (unsigned e = exp; e > 0; e >>= 1) {
        if (e & 1u)
            r *= b;
        b *= b;
    }
    return r;
}

int parity(const Int& v) {
    return v % 2 == 0 ? 0 : 1;
}

Int half(const Int& v) {
    if (parity(v) != 0)
        throw precondition_error("half(v): value is odd");
    // mpz division truncates toward zero; exactness is guaranteed above
    return v / 2;
}

std::string rat_string(const Rat& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw input_error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed rational: " + s);
    }
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace donsw
