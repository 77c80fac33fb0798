#include "knudsen/kernels.hpp"

#include <cmath>
#include <cstddef>

namespace knudsen::kernels {

CellPropagator CellPropagator::for_width(double dx) {
  const double decay = std::exp(-dx);
  // (1 - e^{-dx})/dx, written with expm1 to keep accuracy for small dx.
  const double mean = -std::expm1(-dx) / dx;
  return {decay, 1.0 - mean, mean - decay};
}

namespace {

inline void accumulate_point(std::span<const double> plus, std::span<const double> minus,
                             std::span<const double> mu, std::span<const double> w,
                             std::size_t points, std::size_t i, double& m0, double& m1,
                             double& m2) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double wm = w[k] * mu[k];
    const double p = plus[k * points + i];
    const double q = minus[k * points + i];
    a0 += wm * (p + q);
    a1 += wm * mu[k] * (p - q);
    a2 += wm * (mu[k] * mu[k] - 1.0) * (p + q);
  }
  m0 = a0;
  m1 = a1;
  m2 = a2;
}

inline void sweep_forward(ConstMomentFields m, double mu, CellPropagator step, double* h,
                          std::size_t points) {
  const double mu2 = mu * mu - 1.0;
  double s_prev = m.m0[0] + mu * m.m1[0] + mu2 * m.m2[0];
  h[0] = 0.0;
  for (std::size_t i = 1; i < points; ++i) {
    const double s = m.m0[i] + mu * m.m1[i] + mu2 * m.m2[i];
    h[i] = step.decay * h[i - 1] + step.near * s + step.far * s_prev;
    s_prev = s;
  }
}

inline void sweep_backward(ConstMomentFields m, double mu, CellPropagator step, double incoming,
                           double* h, std::size_t points) {
  // Source for the node at -mu.
  const double mu2 = mu * mu - 1.0;
  std::size_t i = points - 1;
  double s_prev = m.m0[i] - mu * m.m1[i] + mu2 * m.m2[i];
  h[i] = incoming;
  while (i-- > 0) {
    const double s = m.m0[i] - mu * m.m1[i] + mu2 * m.m2[i];
    h[i] = step.decay * h[i + 1] + step.near * s + step.far * s_prev;
    s_prev = s;
  }
}

}  // namespace

void collision_moments_serial(std::span<const double> plus, std::span<const double> minus,
                              std::span<const double> mu, std::span<const double> w,
                              MomentFields out) {
  const std::size_t points = out.m0.size();
  for (std::size_t i = 0; i < points; ++i) {
    accumulate_point(plus, minus, mu, w, points, i, out.m0[i], out.m1[i], out.m2[i]);
  }
}

void collision_moments_omp(std::span<const double> plus, std::span<const double> minus,
                           std::span<const double> mu, std::span<const double> w,
                           MomentFields out) {
  const std::ptrdiff_t points = static_cast<std::ptrdiff_t>(out.m0.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < points; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    accumulate_point(plus, minus, mu, w, out.m0.size(), ii, out.m0[ii], out.m1[ii], out.m2[ii]);
  }
}

void sweep_outgoing_serial(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                           std::span<double> plus) {
  const std::size_t points = m.m0.size();
  for (std::size_t k = 0; k < mu.size(); ++k) {
    sweep_forward(m, mu[k], step, plus.data() + k * points, points);
  }
}

void sweep_outgoing_omp(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                        std::span<double> plus) {
  const std::size_t points = m.m0.size();
  const std::ptrdiff_t nodes = static_cast<std::ptrdiff_t>(mu.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < nodes; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    sweep_forward(m, mu[kk], step, plus.data() + kk * points, points);
  }
}

void sweep_incoming_serial(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                           std::span<const double> incoming, std::span<double> minus) {
  const std::size_t points = m.m0.size();
  for (std::size_t k = 0; k < mu.size(); ++k) {
    sweep_backward(m, mu[k], step, incoming[k], minus.data() + k * points, points);
  }
}

void sweep_incoming_omp(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                        std::span<const double> incoming, std::span<double> minus) {
  const std::size_t points = m.m0.size();
  const std::ptrdiff_t nodes = static_cast<std::ptrdiff_t>(mu.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < nodes; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    sweep_backward(m, mu[kk], step, incoming[kk], minus.data() + kk * points, points);
  }
}

}  // namespace knudsen::kernels
