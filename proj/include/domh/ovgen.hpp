#pragma once

#include <domh/rng.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace domh {

class OvError : public std::runtime_error {
public:
    explicit OvError(const std::string & what) : std::runtime_error(what) {}
};

/// k sets of d-bit vectors. The instance is a YES instance when one vector
/// can be picked from every set so that their bitwise AND is all zero.
/// Vectors are stored as packed 64-bit words, column 0 in the lowest bit.
struct OvInstance {
    int k = 0;
    int d = 0;
    bool yes = false; // certified label
    uint64_t seed = 0;
    std::vector<std::vector<std::vector<uint64_t>>> sets; // [set][vector][word]

    int words() const { return (d + 63) / 64; }

    bool bit(int set, int vec, int col) const
    {
        return (sets[set][vec][col >> 6] >> (col & 63)) & 1;
    }
};

/// Brute-force decision with early exit: true iff some choice of one vector
/// per set ANDs to zero. Vacuously true for d = 0. Guarded: the product of
/// the set sizes must not exceed 1e9, else OvError.
bool ov_has_solution(const OvInstance & inst);

enum class OvTarget {
    Yes,
    No
};

/// Certified random instance. Bits are drawn from SplitMix64(seed, stream)
/// with probability p each, column by column, sets in order and vectors in
/// order within a column. NO: columns are appended until no solution
/// remains. YES: the NO procedure runs first and its final column is then
/// dropped; if that would leave zero columns the whole procedure restarts
/// on the next stream. Every returned instance has its label re-verified
/// by ov_has_solution. Deterministic in (k, set_size, p, seed, target).
OvInstance gen_ov(int k, int set_size, double p, uint64_t seed, OvTarget target);

/// Text form: header "k d label seed", then per set one line with the set
/// size followed by that many rows of d characters from {0,1}, column 0
/// leftmost.
std::string write_ov(const OvInstance & inst);

OvInstance parse_ov(const std::string & text);

} // namespace domh
