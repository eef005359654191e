#pragma once

#include <string>

namespace hcs::moments {

enum class FamilyKind { GeneralPower, BesselK, BesselIExp, CoulombExact, CoulombAlt };

/// Descriptor of a moment sequence rho(n).  All families are normalized
/// to rho(0) = 1 and have convergence radius 1.
class MomentFamily {
public:
    /// rho(n) = e^a (n+1)^{-nu} e^{-a (n+1)^{l/k}};  k > l >= 1, a > 0.
    /// nu < 0 makes the weight function lose positivity and is admitted
    /// only behind the explicit waiver flag.
    static MomentFamily general_power(double a, double nu, int k, int l,
                                      bool allow_negative_nu = false);
    /// rho(n) = K_nu(sqrt(n+1)) / (K_nu(1) sqrt(n+1))
    static MomentFamily bessel_k(double nu);
    /// rho(n) = e^{-1} e^{1/(n+1)} (n+1)^{-4/3}
    static MomentFamily bessel_i_exp();
    /// rho(n) = (n+2) / (2(n+1))  (Coulomb, exact spectrum)
    static MomentFamily coulomb_exact();
    /// rho(n) = e^{-1} e^{1/(n+1)}  (Coulomb, asymptotic variant)
    static MomentFamily coulomb_alt();

    FamilyKind kind() const { return kind_; }
    double a() const { return a_; }
    double nu() const { return nu_; }
    int k() const { return k_; }
    int l() const { return l_; }
    bool positivity_waiver() const { return waiver_; }
    /// cached 1 / K_nu(1) for the BesselK family
    double bessel_norm() const { return bessel_norm_; }
    std::string name() const;

private:
    MomentFamily() = default;
    FamilyKind kind_ = FamilyKind::GeneralPower;
    double a_ = 1.0;
    double nu_ = 0.0;
    int k_ = 2;
    int l_ = 1;
    bool waiver_ = false;
    double bessel_norm_ = 0.0;
};

/// The moment rho(n), n >= 0.
double rho(const MomentFamily& f, long n);

/// ln rho(n), computed without forming rho itself.
double log_rho(const MomentFamily& f, long n);

/// Spectrum map e(n) = rho(n)/rho(n-1) for n >= 1, e(0) = 0.
double spectrum(const MomentFamily& f, long n);

/// 1 - e(n) evaluated without cancellation (n >= 1).
double one_minus_spectrum(const MomentFamily& f, long n);

struct AsymptoticDescriptor {
    double theta; // 1 - e(n) ~ c n^{-theta}
    double c;
    double sigma; // 2 theta / (2 + theta)
};

/// Weighted log-log least-squares fit of 1 - e(n) over [n_min, n_max].
/// The smallest decade of the range is excluded and one self-consistent
/// subleading-correction column is included to suppress the bias of the
/// naive two-parameter fit.  Requires n_max >= 4 n_min >= 400.
AsymptoticDescriptor fit_asymptotics(const MomentFamily& f, long n_min, long n_max);

/// sigma = 2(k - l) / (3k - l), always in (0, 2/3).
double sigma_from_kl(int k, int l);

} // namespace hcs::moments
