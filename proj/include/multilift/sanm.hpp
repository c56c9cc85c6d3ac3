#pragma once

#include <array>

#include "multilift/types.hpp"

namespace multilift {

// One RBF network "slice": 2 inputs -> l Gaussian neurons -> 1 output.
struct RbfSlice {
  Eigen::Matrix2Xd centers;  // column k = center of neuron k
  Eigen::VectorXd widths;    // Gaussian width per neuron, > 0
  double gamma = 1.0;        // Lyapunov adaptation rate

  int size() const { return static_cast<int>(centers.cols()); }
  void validate() const;
};

// Configuration of the full SANM module: three translational and three
// rotational slices plus the bounded adaptive-law constants.
struct SanmConfig {
  std::array<RbfSlice, 3> trans;
  std::array<RbfSlice, 3> rot;
  double eta_m = 0.01;         // 1/eta is the adaptive update rate
  double eta_J = 0.01;
  Vec3 s_m = Vec3(0.01, 0.01, 0.1);  // saturation pushback scaling
  Vec3 s_J = Vec3(0.01, 0.01, 0.1);
  double m0_max = 6.0;               // [kg]
  Vec3 J0_max = Vec3(0.75, 0.75, 1.0 / 3.0);  // [kg m^2]
  double c_R = 0.1;
  double weight_radius = 100.0;  // compact-set projection bound, <= 0 disables

  void validate() const;
};

struct SanmState {
  Vec3 m_hat = Vec3::Ones();   // estimated per-axis mass [kg]
  Vec3 J_hat = Vec3::Ones();   // estimated per-axis inertia [kg m^2]
  std::array<Eigen::VectorXd, 3> W_x;
  std::array<Eigen::VectorXd, 3> W_R;

  static SanmState initial(double m0_ref, const Vec3& J0_ref,
                           const SanmConfig& cfg);
};

struct SanmRates {
  Vec3 m_rate = Vec3::Zero();
  Vec3 J_rate = Vec3::Zero();
  std::array<Eigen::VectorXd, 3> W_x_rate;
  std::array<Eigen::VectorXd, 3> W_R_rate;

  static SanmRates zero(const SanmConfig& cfg);
};

// Solves Lambda^T P + P Lambda = -Q for the companion-form gain matrix
// Lambda = [[0, 1], [-k_p, -k_d]]. Closed form, residual <= 1e-12.
// Throws for non-Hurwitz gains or non-SPD Q.
Mat2 solve_lyapunov_2x2(double k_p, double k_d, const Mat2& Q);

// Gaussian activations, component k = exp(-||x - c_k||^2 / (2 b_k^2)).
Eigen::VectorXd rbf_activation(const Vec2& x, const RbfSlice& slice);

// phi = W^T hbar.
double phi_estimate(const Eigen::VectorXd& W, const Eigen::VectorXd& hbar);

// Inherently bounded adaptive law for one mass component.
// sigma = E_xj^T P_j B U_x[j].
double mass_rate(double m_hat, double s, double sigma, double eta,
                 double m_max);

// Same branch structure for one inertia component.
// tau = (e_Omega[j] + c_R e_R[j]) U_R[j].
double inertia_rate(double J_hat, double s, double tau, double eta,
                    double J_max);

// W_x rate: gamma * (E^T P B) * hbar with B = (0, 1)^T.
Eigen::VectorXd weight_rate_translational(const Vec2& E, const Mat2& P,
                                          const Eigen::VectorXd& hbar,
                                          double gamma);

// W_R rate: gamma * (e_Omega + c_R e_R) * hbar.
Eigen::VectorXd weight_rate_rotational(double e_R, double e_Omega,
                                       const Eigen::VectorXd& hbar,
                                       double gamma, double c_R);

// Radial projection onto the ball of radius r (identity inside it).
Eigen::VectorXd project_weights(const Eigen::VectorXd& W, double r);

// Default slice geometry: 5 neurons, centers on the diagonal from (-1,-1) to
// (1,1), unit widths except width 2 on the third translational slice.
SanmConfig default_sanm_config();

}  // namespace multilift
