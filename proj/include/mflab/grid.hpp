#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mflab/errors.hpp"

namespace mflab {

using complex_t = std::complex<double>;

// e(t) = exp(2*pi*i*t)
complex_t unit_phase(double turns);

// Periodic grid (Z/NZ)^n modelling Z^n, with the dual grid {k/N : 0 <= k < N}^n
// modelling T^n.  Positions and frequencies have centered representatives in
// (-N/2, N/2] and (-1/2, 1/2] respectively.
struct GridSpec {
    int n = 1;        // dimension, 1..3
    std::int64_t N = 2;  // side length, positive even

    GridSpec() = default;
    GridSpec(int n_, std::int64_t N_);

    std::int64_t size() const;  // N^n
    bool operator==(const GridSpec&) const = default;

    // row-major index <-> coordinates in [0, N)^n (last coordinate fastest)
    void index_to_coords(std::int64_t idx, std::int64_t* coords) const;
    std::int64_t coords_to_index(const std::int64_t* coords) const;

    std::int64_t centered(std::int64_t c) const { return c <= N / 2 ? c : c - N; }
    double freq(std::int64_t c) const { return double(centered(c)) / double(N); }
};

struct GridSignal {
    GridSpec spec;
    std::vector<complex_t> values;  // size N^n, row-major

    GridSignal() = default;
    explicit GridSignal(GridSpec s, complex_t fill = {0.0, 0.0});

    std::int64_t size() const { return std::int64_t(values.size()); }
    // plain (unnormalized) sums, matching the l^2(Z^n) convention
    double norm_sq() const;
    double norm() const;
};

// Function on the dual grid; a multiplier with sup modulus M induces an
// operator of l^2 -> l^2 norm <= M.
struct Multiplier {
    GridSpec spec;
    std::vector<complex_t> values;

    Multiplier() = default;
    explicit Multiplier(GridSpec s, complex_t fill = {0.0, 0.0});

    std::int64_t size() const { return std::int64_t(values.size()); }
    double max_modulus() const;
};

// F(k) = sum_x f(x) e(-x.k/N), unnormalized.
Multiplier forward_dft(const GridSignal& f);

// f(x) = N^{-n} sum_k F(k) e(x.k/N); inverse_dft(forward_dft(f)) == f.
GridSignal inverse_dft(const Multiplier& F);

// inverse_dft(m * forward_dft(f)); throws dimension_error on spec mismatch.
GridSignal apply_multiplier(const Multiplier& m, const GridSignal& f);

// Unscaled 1-d transform a[k] <- sum_x a[x] e(sign * x*k/N), any length >= 1.
// Used by the grid transforms and by exponential-sum evaluation on dual grids.
void dft_1d_unscaled(std::vector<complex_t>& a, int sign);

// --- serialization -------------------------------------------------------
// JSON: {"n":..,"N":..,"values":[[re,im],...]} row-major; floats are 64-bit.
// Binary: uint32 n, uint32 N, then 2*N^n little-endian float64 (re,im).

std::string signal_to_json(const GridSignal& f);
GridSignal signal_from_json(const std::string& text);
void write_signal_binary(const GridSignal& f, const std::string& path);
GridSignal read_signal_binary(const std::string& path);

}  // namespace mflab
