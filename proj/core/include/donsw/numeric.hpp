#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace donsw {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// num/den in lowest terms; throws invariant_error on den == 0.
Rat make_rat(const Int& num, const Int& den);

Int factorial(unsigned n);

/// Zero when k > n.
Int binomial(unsigned n, unsigned k);

/// (sum parts)! / prod parts!
Int multinomial(const std::vector<unsigned>& parts);

/// 2^e for any integer e, possibly negative.
Rat pow2(long e);

Rat rat_pow(const Rat& base, unsigned exp);

/// Value mod 2, in {0, 1}, for negative inputs too.
int parity(const Int& v);

/// v/2; throws precondition_error when v is odd.
Int half(const Int& v);

/// Canonical "p/q" form, lowest terms, denominator positive ("3/2", "-5/1").
std::string rat_string(const Rat& v);

/// Accepts "p" or "p/q" with optional sign; throws input_error otherwise.
Rat parse_rat(const std::string& s);

/// splitmix64 finalizer; used to derive deterministic model parameters.
std::uint64_t mix64(std::uint64_t x);

}  // namespace donsw
