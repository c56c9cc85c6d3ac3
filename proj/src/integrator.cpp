#include "multilift/integrator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "multilift/so3.hpp"

namespace multilift {

void IntegratorConfig::validate() const {
  if (h <= 0.0) throw std::invalid_argument("IntegratorConfig: h must be > 0");
  if (duration < h) {
    throw std::invalid_argument("IntegratorConfig: duration must be >= h");
  }
  if (substeps < 1) {
    throw std::invalid_argument("IntegratorConfig: substeps must be >= 1");
  }
}

Eigen::VectorXd bs3_step(const DerivativeFn& f, double t,
                         const Eigen::VectorXd& y, double h) {
  const auto check = [&](const Eigen::VectorXd& k, double ts) {
    if (!k.allFinite()) {
      std::ostringstream msg;
      msg << "bs3_step: non-finite derivative at t = " << ts;
      throw std::runtime_error(msg.str());
    }
  };
  const Eigen::VectorXd k1 = f(t, y);
  check(k1, t);
  const Eigen::VectorXd k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
  check(k2, t + 0.5 * h);
  const Eigen::VectorXd k3 = f(t + 0.75 * h, y + 0.75 * h * k2);
  check(k3, t + 0.75 * h);
  return y + h * (2.0 / 9.0 * k1 + 1.0 / 3.0 * k2 + 4.0 / 9.0 * k3);
}

namespace {

void put_mat3(Eigen::VectorXd& y, int& at, const Mat3& M) {
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) y(at++) = M(r, c);
}

Mat3 get_mat3(const Eigen::VectorXd& y, int& at) {
  Mat3 M;
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) M(r, c) = y(at++);
  return M;
}

void put_vec3(Eigen::VectorXd& y, int& at, const Vec3& v) {
  y.segment<3>(at) = v;
  at += 3;
}

Vec3 get_vec3(const Eigen::VectorXd& y, int& at) {
  Vec3 v = y.segment<3>(at);
  at += 3;
  return v;
}

int state_size(int n, const SanmConfig& cfg) {
  int l_total = 0;
  for (int j = 0; j < 3; ++j) {
    l_total += cfg.trans[j].size() + cfg.rot[j].size();
  }
  return 18 + 6 * n + 12 * n + 6 + 3 * n + 6 + l_total;
}

}  // namespace

Eigen::VectorXd pack_state(const AugmentedState& aug) {
  const int n = static_cast<int>(aug.system.cables.size());
  int l_total = 0;
  for (int j = 0; j < 3; ++j) {
    l_total += static_cast<int>(aug.sanm.W_x[j].size() + aug.sanm.W_R[j].size());
  }
  Eigen::VectorXd y(18 + 18 * n + 6 + 3 * n + 6 + l_total);
  int at = 0;
  put_vec3(y, at, aug.system.payload.x);
  put_vec3(y, at, aug.system.payload.v);
  put_mat3(y, at, aug.system.payload.R);
  put_vec3(y, at, aug.system.payload.Omega);
  for (int i = 0; i < n; ++i) {
    put_vec3(y, at, aug.system.cables[i].q);
    put_vec3(y, at, aug.system.cables[i].omega);
  }
  for (int i = 0; i < n; ++i) {
    put_mat3(y, at, aug.system.quads[i].R);
    put_vec3(y, at, aug.system.quads[i].Omega);
  }
  put_vec3(y, at, aug.estimator.delta_x0);
  put_vec3(y, at, aug.estimator.delta_R0);
  for (int i = 0; i < n; ++i) put_vec3(y, at, aug.estimator.delta_xi[i]);
  put_vec3(y, at, aug.sanm.m_hat);
  put_vec3(y, at, aug.sanm.J_hat);
  for (int j = 0; j < 3; ++j) {
    y.segment(at, aug.sanm.W_x[j].size()) = aug.sanm.W_x[j];
    at += static_cast<int>(aug.sanm.W_x[j].size());
  }
  for (int j = 0; j < 3; ++j) {
    y.segment(at, aug.sanm.W_R[j].size()) = aug.sanm.W_R[j];
    at += static_cast<int>(aug.sanm.W_R[j].size());
  }
  return y;
}

AugmentedState unpack_state(const Eigen::VectorXd& y, int n,
                            const SanmConfig& cfg) {
  if (y.size() != state_size(n, cfg)) {
    throw std::invalid_argument("unpack_state: vector size mismatch");
  }
  AugmentedState aug;
  aug.system.cables.resize(n);
  aug.system.quads.resize(n);
  aug.estimator.delta_xi.resize(n);
  int at = 0;
  aug.system.payload.x = get_vec3(y, at);
  aug.system.payload.v = get_vec3(y, at);
  aug.system.payload.R = get_mat3(y, at);
  aug.system.payload.Omega = get_vec3(y, at);
  for (int i = 0; i < n; ++i) {
    aug.system.cables[i].q = get_vec3(y, at);
    aug.system.cables[i].omega = get_vec3(y, at);
  }
  for (int i = 0; i < n; ++i) {
    aug.system.quads[i].R = get_mat3(y, at);
    aug.system.quads[i].Omega = get_vec3(y, at);
  }
  aug.estimator.delta_x0 = get_vec3(y, at);
  aug.estimator.delta_R0 = get_vec3(y, at);
  for (int i = 0; i < n; ++i) aug.estimator.delta_xi[i] = get_vec3(y, at);
  aug.sanm.m_hat = get_vec3(y, at);
  aug.sanm.J_hat = get_vec3(y, at);
  for (int j = 0; j < 3; ++j) {
    aug.sanm.W_x[j] = y.segment(at, cfg.trans[j].size());
    at += cfg.trans[j].size();
  }
  for (int j = 0; j < 3; ++j) {
    aug.sanm.W_R[j] = y.segment(at, cfg.rot[j].size());
    at += cfg.rot[j].size();
  }
  return aug;
}

AugmentedState step_system(const AugmentedState& aug, double t,
                           const SystemParams& params,
                           const SanmConfig& sanm_cfg,
                           const IntegratorConfig& icfg,
                           const ControlFn& control,
                           const DisturbanceFn& disturbance) {
  const int n = params.n;
  const HeldCommands held = control(t, aug);

  const DerivativeFn f = [&](double ts, const Eigen::VectorXd& y) {
    const AugmentedState s = unpack_state(y, n, sanm_cfg);
    const StateDerivative d =
        system_rhs(s.system, held.u, held.quad_moments, held.F_d, held.M_d,
                   held.mu_d, disturbance(ts), params);
    AugmentedState rate;
    rate.system.payload.x = d.x_dot;
    rate.system.payload.v = d.v_dot;
    rate.system.payload.R = d.R_dot;
    rate.system.payload.Omega = d.Omega_dot;
    rate.system.cables.resize(n);
    rate.system.quads.resize(n);
    for (int i = 0; i < n; ++i) {
      rate.system.cables[i].q = d.cables[i].q_dot;
      rate.system.cables[i].omega = d.cables[i].omega_dot;
      rate.system.quads[i].R = d.quads[i].R_dot;
      rate.system.quads[i].Omega = d.quads[i].Omega_dot;
    }
    rate.estimator.delta_x0 = held.estimator_rates.delta_x0;
    rate.estimator.delta_R0 = held.estimator_rates.delta_R0;
    rate.estimator.delta_xi = held.estimator_rates.delta_xi;
    rate.sanm.m_hat = held.sanm_rates.m_rate;
    rate.sanm.J_hat = held.sanm_rates.J_rate;
    rate.sanm.W_x = held.sanm_rates.W_x_rate;
    rate.sanm.W_R = held.sanm_rates.W_R_rate;
    return pack_state(rate);
  };

  Eigen::VectorXd y = pack_state(aug);
  const double h_sub = icfg.h / icfg.substeps;
  for (int k = 0; k < icfg.substeps; ++k) {
    y = bs3_step(f, t + k * h_sub, y, h_sub);
  }

  AugmentedState next = unpack_state(y, n, sanm_cfg);
  if (icfg.project_rotations) {
    next.system.payload.R = reorthonormalize(next.system.payload.R);
    for (int i = 0; i < n; ++i) {
      next.system.quads[i].R = reorthonormalize(next.system.quads[i].R);
    }
  }
  for (int i = 0; i < n; ++i) {
    Vec3& q = next.system.cables[i].q;
    q.normalize();
    if (icfg.retangentialize) {
      Vec3& w = next.system.cables[i].omega;
      w -= q * q.dot(w);
    }
  }
  if (sanm_cfg.weight_radius > 0.0) {
    for (int j = 0; j < 3; ++j) {
      next.sanm.W_x[j] = project_weights(next.sanm.W_x[j],
                                         sanm_cfg.weight_radius);
      next.sanm.W_R[j] = project_weights(next.sanm.W_R[j],
                                         sanm_cfg.weight_radius);
    }
  }
  // The adaptive mass/inertia laws are quadratic scalar ODEs in the estimate
  // with coefficients held over the step, so advance them by the exact
  // solution rather than the flat-vector update: a linearized step can cross
  // zero or badly overshoot the switching boundary, both of which the
  // continuous law excludes.
  for (int j = 0; j < 3; ++j) {
    next.sanm.m_hat(j) =
        exact_quadratic_update(aug.sanm.m_hat(j),
                               held.sanm_rates.m_rate(j), icfg.h,
                               sanm_cfg.m0_max);
    next.sanm.J_hat(j) =
        exact_quadratic_update(aug.sanm.J_hat(j),
                               held.sanm_rates.J_rate(j), icfg.h,
                               sanm_cfg.J0_max(j));
  }
  return next;
}

}  // namespace multilift
