#pragma once

#include <cmath>

#include "fpa/random.hpp"
#include "fpa/types.hpp"

namespace fpa {

/// How the Mantegna scale expression is read.
///
/// The bracketed expression B(lambda) raised to 1/lambda is the standard
/// deviation of the numerator draw in Mantegna's construction. The literal
/// reading treats the same quantity as a variance, so the scale becomes its
/// square root. Both coincide at lambda = 1.
enum class MantegnaForm { standard, literal };

/// Gamma function for x > 0 (Lanczos, g = 7, nine terms).
/// Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// Gaussian scale of the numerator draw for exponent lambda in (0, 2].
double mantegna_sigma(double lambda, MantegnaForm form = MantegnaForm::standard);

struct LevyConfig {
  double lambda = 1.5;
  MantegnaForm form = MantegnaForm::standard;
  double sigma = 0.0;

  /// Validates lambda and fills sigma from (lambda, form).
  static LevyConfig make(double lambda, MantegnaForm form = MantegnaForm::standard);
};

/// One Mantegna step s = u / |v|^(1/lambda) from given Gaussian draws.
inline double mantegna_transform(double u, double v, double lambda) {
  return u / std::pow(std::abs(v), 1.0 / lambda);
}

/// Draws one Levy-distributed scalar step from the stream.
double levy_scalar(const LevyConfig& config, Rng& rng);

/// Draws a d-dimensional step vector with independent components.
Vector levy_step(const LevyConfig& config, Index d, Rng& rng);

}  // namespace fpa
