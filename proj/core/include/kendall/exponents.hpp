#pragma once

#include <string>

namespace kendall {

// The six subordinator constructions plus the inverse Gaussian closure case.
enum class Family {
  poisson,           // X = N_{ct}, psi(z) = z - c(1 - e^{-z})
  gamma,             // Phi_X = c ln(1 + theta z)
  stable_low,        // Phi_X = c z^alpha, alpha in (0,1)
  stable_high,       // psi(z) = z + c z^alpha directly, alpha in (1,2)
  bessel,            // Phi_X = c ln(1 + theta z + sqrt((1+theta z)^2 - 1))
  geom_stable,       // Phi_X = c ln(1 + (theta z)^alpha), alpha in (0,1)
  inverse_gaussian,  // Phi_X = c (sqrt(1 + theta z) - 1)
};

const char* family_name(Family f);
// Parses the CLI spelling ("poisson", "gamma", "stable-low", "stable-high",
// "bessel", "geom-stable", "inverse-gaussian"). Throws std::invalid_argument.
Family family_from_name(const std::string& name);

// Validated parameter set. c > 0 always; theta > 0 where the family uses it;
// alpha in (0,1) for stable_low/geom_stable and in (1,2) for stable_high.
struct FamilyParams {
  Family family;
  double c = 1.0;
  double theta = 0.0;
  double alpha = 0.0;

  static FamilyParams poisson(double c);
  static FamilyParams gamma(double c, double theta);
  static FamilyParams stable_low(double c, double alpha);
  static FamilyParams stable_high(double c, double alpha);
  static FamilyParams bessel(double c, double theta);
  static FamilyParams geom_stable(double c, double theta, double alpha);
  static FamilyParams inverse_gaussian(double c, double theta);

  bool uses_theta() const;
  bool uses_alpha() const;
};

// phi(q) with diagnostics.
struct PhiResult {
  double q = 0.0;
  double value = 0.0;     // phi(q)
  double residual = 0.0;  // |psi(phi(q)) - q|
  double killing = 0.0;   // phi(0)
  enum class Method { closed_form, root_find } method = Method::root_find;
};

// Evaluable pair (Phi_X, Phi_X') together with the spectrally negative
// exponent psi and its derivative. Immutable after construction; the killing
// rate phi(0) is computed eagerly. All evaluation is pure and thread-safe.
class ExponentHandle {
 public:
  explicit ExponentHandle(const FamilyParams& params);

  const FamilyParams& params() const { return params_; }

  // Laplace exponent of the driving subordinator X (0 for stable_high,
  // where psi is specified directly).
  double phi_x(double z) const;
  double phi_x_prime(double z) const;

  // psi(z) = z - Phi_X(z), or z + c z^alpha for stable_high. Convex,
  // psi(0) = 0, psi(inf) = inf.
  double psi(double z) const;
  double psi_prime(double z) const;

  // Right derivative Phi_X'(0+), evaluated analytically per family
  // (may be +inf). Decides whether the killing rate vanishes.
  double phi_x_prime_at_zero() const;

  double killing() const { return killing_; }

 private:
  double compute_killing() const;

  FamilyParams params_;
  double killing_ = 0.0;
};

ExponentHandle build_exponent(const FamilyParams& params);

// phi(0): zero when Phi_X'(0+) <= 1, otherwise the unique positive root of
// psi(z) = 0 (closed form c^{1/(1-alpha)} for stable_low).
double killing_rate(const ExponentHandle& h);

// Solves psi(z) = q for z >= killing, q >= 0. Safeguarded Newton inside a
// doubling bracket; residual <= 1e-11 * max(1, q).
PhiResult invert_phi(const ExponentHandle& h, double q);

// Closed form for the Poisson family: phi(q) = W0(-c e^{-c-q}) + c + q.
double phi_closed_poisson(double c, double q);

// Closed form for the Gamma family:
// phi(q) = -1/theta - c W_{-1}(-(1/(theta c)) e^{-1/(theta c) - q/c}).
double phi_closed_gamma(double c, double theta, double q);

// Laplace exponent of the constructed subordinator Y:
// Phi_Y(z) = phi(z) - phi(0) - z, except stable_high where Phi_Y(z) = phi(z)
// solves w + c w^alpha = z directly. Phi_Y(0) = 0 exactly.
double phi_y(const ExponentHandle& h, double z);

// E[Y_1] = 1/psi'(phi(0)) - 1, +inf when psi'(phi(0)) = 0. The stable_high
// family reports +inf.
double mean_y(const ExponentHandle& h);

}  // namespace kendall
