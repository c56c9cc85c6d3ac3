#pragma once

#include <functional>

#include "multilift/payload_control.hpp"
#include "multilift/plant.hpp"
#include "multilift/sanm.hpp"
#include "multilift/types.hpp"

namespace multilift {

struct IntegratorConfig {
  double h = 1e-3;        // control step [s]
  double duration = 50.0; // [s]
  int substeps = 1;       // integration substeps per control step
  bool project_rotations = true;
  bool retangentialize = true;

  void validate() const;
};

// Everything advanced by the integrator. Finite-difference histories live in
// the control stack and are not part of the ODE state.
struct AugmentedState {
  SystemState system;
  EstimatorState estimator;
  SanmState sanm;
};

// Control outputs held constant over one step (zero-order hold), plus the
// estimator/adaptation rates computed at step start.
struct HeldCommands {
  Vec3 F_d = Vec3::Zero();
  Vec3 M_d = Vec3::Zero();
  std::vector<Vec3> mu_d;
  std::vector<QuadrotorForceCommand> u;
  std::vector<Vec3> quad_moments;
  EstimatorRates estimator_rates;
  SanmRates sanm_rates;
};

using DerivativeFn =
    std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;
using ControlFn = std::function<HeldCommands(double, const AugmentedState&)>;
using DisturbanceFn = std::function<DisturbanceSample(double)>;

// One Bogacki-Shampine (third-order, three-stage) step:
// y+ = y + h (2/9 k1 + 1/3 k2 + 4/9 k3). Throws on a non-finite stage,
// reporting the stage time.
Eigen::VectorXd bs3_step(const DerivativeFn& f, double t,
                         const Eigen::VectorXd& y, double h);

// Flat-vector packing of the augmented state (layout fixed by n and the
// slice neuron counts).
Eigen::VectorXd pack_state(const AugmentedState& aug);
AugmentedState unpack_state(const Eigen::VectorXd& y, int n,
                            const SanmConfig& cfg);

// Advances the augmented state by one control step: evaluates `control` once
// at step start, integrates the plant ODE with the held commands (the
// disturbance is sampled at stage times), then applies manifold projections
// (rotation re-orthonormalization, cable renormalization and angular-velocity
// re-tangentialization, adaptive weight projection).
AugmentedState step_system(const AugmentedState& aug, double t,
                           const SystemParams& params,
                           const SanmConfig& sanm_cfg,
                           const IntegratorConfig& icfg,
                           const ControlFn& control,
                           const DisturbanceFn& disturbance);

}  // namespace multilift
