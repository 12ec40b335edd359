#pragma once

#include <cstdint>
#include <random>

#include "hessmap/families.hpp"
#include "hessmap/form.hpp"

namespace hessmap {

// Deterministic seeded sampler. Draws go through a fixed 64-bit engine and a
// plain modulo reduction, so a given seed yields the same stream on every
// platform — stdlib distributions are not used because their output is
// implementation-defined.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    // Uniform-ish integer in [lo, hi], inclusive. The modulo bias is
    // irrelevant for the tiny ranges used here and buys reproducibility.
    long uniform_int(long lo, long hi);

private:
    std::mt19937_64 gen_;
};

// Integer parameter tuple with entries in [-9, 9], in param_ring order.
std::vector<Rational> sample_params(SampleRng& rng, FamilyCase c);

// Random nonzero homogeneous polynomial of the given degree: every monomial
// gets an integer coefficient in [-9, 9]; resamples the all-zero draw.
Form sample_form(SampleRng& rng, const Ring& ring, unsigned degree);

// Random invertible rational matrix with integer entries in [-3, 3];
// resamples until the determinant is nonzero.
LinearChange sample_invertible(SampleRng& rng, std::size_t n);

} // namespace hessmap
