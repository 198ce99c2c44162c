#pragma once

#include <vector>

#include "mflab/grid.hpp"

namespace mflab {

// Smooth compactly supported bumps built from the exp(-1/u) step, fixed here
// so every result is reproducible bit-for-bit from the formula:
//   B(u) = exp(-1/u) for u > 0 else 0,
//   s(u) = B(u) / (B(u) + B(1 - u)),
//   eta(t) = s(2 - 2|t|).
// The base bump chi0(xi) = prod_i eta(xi_i) is supported on [-1,1]^n and
// equals 1 on [-1/2,1/2]^n.  Scaled variants evaluate chi0 at A^{-1} xi for a
// diagonal contraction A; U = A([-1/2,1/2]^n) is the plateau box.
double smooth_step(double u);
double bump_profile(double t);  // eta

enum class BumpKind {
    base,     // chi0(A^{-1} xi)
    tilde,    // chi0(A^{-1} xi / 2): equals 1 on supp of the base bump
    annulus,  // chi0(A^{-1} xi) - chi0(2 A^{-1} xi): nonnegative, dyadic ring
};

struct BumpSpec {
    BumpKind kind = BumpKind::base;
    int n = 1;
    std::vector<double> scale;  // diagonal of A, one entry per dimension

    static BumpSpec base_bump(int n, double scale = 1.0);
    static BumpSpec tilde_bump(int n, double scale = 1.0);
    static BumpSpec annulus_bump(int n);
    // chi_s family: scale 2^{-kappa*s} per axis (kappa = 10 in full scale,
    // 2..3 at desk scale); tilde variant gives the matching wide bump.
    static BumpSpec chi_s(int kappa, int s, int n);
    static BumpSpec chi_s_tilde(int kappa, int s, int n);

    // |U| = |det A| (measure of the plateau box of the base bump)
    double domain_measure() const;
    // plateau half-width per axis (base: a/2, tilde: a, annulus: none -> 0)
    double plateau_half_width() const;
    void validate() const;
};

// Evaluate at a real point (centered representative for dual-grid use).
double bump_value(const BumpSpec& b, const std::vector<double>& xi);

// Sample the bump on the dual grid of `spec` at centered frequencies.
Multiplier bump_multiplier(const BumpSpec& b, const GridSpec& spec);

// phi(y) = N^{-n} sum_k chi(xi_k) e(y.k/N).  Requires the grid to resolve the
// bump: N * plateau_half_width >= 4, else resolution_error.
GridSignal phi_from_bump(const BumpSpec& b, const GridSpec& spec);

// plain l^p norms of a grid signal (p = 1, 2, or infinity via p <= 0)
double lp_norm(const GridSignal& f, double p);

}  // namespace mflab
