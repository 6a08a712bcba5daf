#include "fpa/levy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fpa {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kMinDenominatorDraw = 1e-300;

double lanczos(double x) {
  // Valid for x >= 0.5; smaller arguments go through the reflection formula.
  x -= 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t k = 1; k < kLanczosCoefficients.size(); ++k) {
    series += kLanczosCoefficients[k] / (x + static_cast<double>(k));
  }
  const double t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("gamma_fn: argument must be positive and finite, got " +
                            std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
  }
  return lanczos(x);
}

double mantegna_sigma(double lambda, MantegnaForm form) {
  if (!(lambda > 0.0 && lambda <= 2.0)) {
    throw std::domain_error("mantegna_sigma: lambda must lie in (0, 2], got " +
                            std::to_string(lambda));
  }
  const double bracket = gamma_fn(1.0 + lambda) / (lambda * gamma_fn((1.0 + lambda) / 2.0)) *
                         std::sin(std::numbers::pi * lambda / 2.0) /
                         std::pow(2.0, (lambda - 1.0) / 2.0);
  const double scale = std::pow(bracket, 1.0 / lambda);
  return form == MantegnaForm::standard ? scale : std::sqrt(scale);
}

LevyConfig LevyConfig::make(double lambda, MantegnaForm form) {
  return LevyConfig{lambda, form, mantegna_sigma(lambda, form)};
}

double levy_scalar(const LevyConfig& config, Rng& rng) {
  const double u = rng.normal() * config.sigma;
  double v = rng.normal();
  while (std::abs(v) < kMinDenominatorDraw) {
    v = rng.normal();
  }
  return mantegna_transform(u, v, config.lambda);
}

Vector levy_step(const LevyConfig& config, Index d, Rng& rng) {
  if (d < 1) {
    throw std::invalid_argument("levy_step: dimension must be at least 1");
  }
  Vector steps(d);
  for (Index i = 0; i < d; ++i) {
    steps[i] = levy_scalar(config, rng);
  }
  return steps;
}

}  // namespace fpa
