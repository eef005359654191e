#pragma once

namespace hcs::quasiclassical {

/// Attractive power-law well -|v0| |x|^{-sigma}, 0 < sigma < 2 (hbar = 1).
struct PotentialSpec {
    double sigma = 1.0;
    double v0 = 1.0;   // well depth |V0|
    double mass = 1.0;
};

/// Bohr-Sommerfeld phase-space constant
///   D(sigma) = \int_0^1 sqrt(u^{-sigma} - 1) du,
/// the u = 0 endpoint handled by the substitution u = v^{2/(2-sigma)}.
/// D(1) = pi/2.
double d_constant(double sigma);

/// 2 sigma / (2 - sigma): the power of the bound-level asymptotics
/// E(n) ~ -n^{-2 sigma/(2-sigma)}.
double level_exponent(double sigma);

/// Quasiclassical level
///   E(n) = -[ (pi/2) (n + 1/2) / (sqrt(2m) D(sigma)) * |V0| ]^{-2s/(2-s)}.
double quasiclassical_level(const PotentialSpec& spec, long n);

} // namespace hcs::quasiclassical
