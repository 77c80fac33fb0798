#pragma once

#include <span>

// Inner loops of the discrete-velocity solver. Each kernel has a serial
// reference version and an OpenMP version with identical floating-point
// operation order, so the two agree bit for bit.
//
// Fields are stored node-major: value(k, i) = field[k * points + i] for
// velocity node k and grid point i = 0..points-1.
namespace knudsen::kernels {

/// Exact propagation of dh/ds + h = S over one cell of width dx with S linear
/// inside the cell:
///   h_next = decay h + near S_next + far S_this,
///   decay = e^{-dx}, near = 1 - (1 - e^{-dx})/dx, far = (1 - e^{-dx})/dx - e^{-dx}.
struct CellPropagator {
  double decay = 0.0;
  double near = 0.0;
  double far = 0.0;

  static CellPropagator for_width(double dx);
};

struct MomentFields {
  std::span<double> m0;
  std::span<double> m1;
  std::span<double> m2;
};

struct ConstMomentFields {
  std::span<const double> m0;
  std::span<const double> m1;
  std::span<const double> m2;
};

/// m_j(x_i) = sum_k w_k mu_k [phi_j(mu_k) plus(k,i) + phi_j(-mu_k) minus(k,i)].
void collision_moments_serial(std::span<const double> plus, std::span<const double> minus,
                              std::span<const double> mu, std::span<const double> w,
                              MomentFields out);
void collision_moments_omp(std::span<const double> plus, std::span<const double> minus,
                           std::span<const double> mu, std::span<const double> w,
                           MomentFields out);

/// Left-to-right sweep for every mu_k > 0 with h(0, mu_k) = 0.
void sweep_outgoing_serial(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                           std::span<double> plus);
void sweep_outgoing_omp(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                        std::span<double> plus);

/// Right-to-left sweep for every -mu_k < 0 from incoming[k] = h(L, -mu_k).
void sweep_incoming_serial(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                           std::span<const double> incoming, std::span<double> minus);
void sweep_incoming_omp(ConstMomentFields m, std::span<const double> mu, CellPropagator step,
                        std::span<const double> incoming, std::span<double> minus);

}  // namespace knudsen::kernels
