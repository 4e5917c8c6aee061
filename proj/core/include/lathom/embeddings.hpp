#pragma once

#include "lathom/homothety.hpp"

namespace lathom {

// Scale-1 lattice homotheties A(n1) x A(n2) -> A(n1+n2)-style combinations,
// one per family.  Each sends (top, top) to top; all but the partition one
// also send (bottom, bottom) to bottom (the disjoint union of two one-block
// partitions has two blocks, so it sits one rank above the bottom).

// Blocks of the first partition, then blocks of the second shifted past n1.
HomothetyMap partition_combine(int n1, int n2);

// (S, T) -> S union (T + n1).
HomothetyMap boolean_combine(int n1, int n2);

// Concatenation of digit strings over the same alphabet.
HomothetyMap chain_combine(int alphabet, int n1, int n2);

// Exponent vectors transplanted onto fresh primes: with m = p1^k1...pr^kr and
// n = q1^l1...qs^ls, the codomain modulus is u1^k1...ur^kr v1^l1...vs^ls where
// u1 < ... < ur < v1 < ... < vs are the first r+s primes.
struct DivisionCombine {
    std::int64_t codomain_modulus;
    HomothetyMap map;
};
DivisionCombine division_combine(std::int64_t m, std::int64_t n);

} // namespace lathom
