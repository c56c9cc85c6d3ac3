#include "multilift/sanm.hpp"

#include <stdexcept>

namespace multilift {

void RbfSlice::validate() const {
  if (centers.cols() < 1) {
    throw std::invalid_argument("RbfSlice: need at least one neuron");
  }
  if (widths.size() != centers.cols()) {
    throw std::invalid_argument("RbfSlice: widths/centers size mismatch");
  }
  if ((widths.array() <= 0.0).any()) {
    throw std::invalid_argument("RbfSlice: widths must be positive");
  }
  if (gamma <= 0.0) {
    throw std::invalid_argument("RbfSlice: gamma must be positive");
  }
}

void SanmConfig::validate() const {
  for (const auto& s : trans) s.validate();
  for (const auto& s : rot) s.validate();
  if (eta_m <= 0.0 || eta_J <= 0.0) {
    throw std::invalid_argument("SanmConfig: eta must be positive");
  }
  if ((s_m.array() <= 0.0).any() || (s_J.array() <= 0.0).any()) {
    throw std::invalid_argument("SanmConfig: scaling factors must be positive");
  }
  if (m0_max <= 0.0 || (J0_max.array() <= 0.0).any()) {
    throw std::invalid_argument("SanmConfig: limits must be positive");
  }
  if (c_R <= 0.0) {
    throw std::invalid_argument("SanmConfig: c_R must be positive");
  }
}

SanmState SanmState::initial(double m0_ref, const Vec3& J0_ref,
                             const SanmConfig& cfg) {
  SanmState s;
  s.m_hat = Vec3::Constant(m0_ref);
  s.J_hat = J0_ref;
  for (int j = 0; j < 3; ++j) {
    s.W_x[j] = Eigen::VectorXd::Zero(cfg.trans[j].size());
    s.W_R[j] = Eigen::VectorXd::Zero(cfg.rot[j].size());
  }
  return s;
}

SanmRates SanmRates::zero(const SanmConfig& cfg) {
  SanmRates r;
  for (int j = 0; j < 3; ++j) {
    r.W_x_rate[j] = Eigen::VectorXd::Zero(cfg.trans[j].size());
    r.W_R_rate[j] = Eigen::VectorXd::Zero(cfg.rot[j].size());
  }
  return r;
}

Mat2 solve_lyapunov_2x2(double k_p, double k_d, const Mat2& Q) {
  if (k_p <= 0.0 || k_d <= 0.0) {
    throw std::invalid_argument("solve_lyapunov_2x2: gains must be positive");
  }
  if ((Q - Q.transpose()).norm() > 1e-12 * (1.0 + Q.norm()) || Q(0, 0) <= 0.0 ||
      Q.determinant() <= 0.0) {
    throw std::invalid_argument("solve_lyapunov_2x2: Q must be SPD");
  }
  // Lambda^T P + P Lambda = -Q with Lambda = [[0,1],[-k_p,-k_d]] reduces to
  // three linear equations in (p11, p12, p22).
  const double p12 = Q(0, 0) / (2.0 * k_p);
  const double p22 = (Q(1, 1) + 2.0 * p12) / (2.0 * k_d);
  const double p11 = k_d * p12 + k_p * p22 - Q(0, 1);
  Mat2 P;
  P << p11, p12, p12, p22;
  return P;
}

Eigen::VectorXd rbf_activation(const Vec2& x, const RbfSlice& slice) {
  const int l = slice.size();
  Eigen::VectorXd h(l);
  for (int k = 0; k < l; ++k) {
    const double d2 = (x - slice.centers.col(k)).squaredNorm();
    const double b = slice.widths(k);
    h(k) = std::exp(-d2 / (2.0 * b * b));
  }
  return h;
}

double phi_estimate(const Eigen::VectorXd& W, const Eigen::VectorXd& hbar) {
  if (W.size() != hbar.size()) {
    throw std::invalid_argument("phi_estimate: size mismatch");
  }
  return W.dot(hbar);
}

double mass_rate(double m_hat, double s, double sigma, double eta,
                 double m_max) {
  const double drive = -m_hat * m_hat / eta;
  if (sigma > 0.0) return drive * sigma;
  if (m_hat < m_max) return drive * sigma;
  return s * drive;
}

double inertia_rate(double J_hat, double s, double tau, double eta,
                    double J_max) {
  const double drive = -J_hat * J_hat / eta;
  if (tau > 0.0) return drive * tau;
  if (J_hat < J_max) return drive * tau;
  return s * drive;
}

Eigen::VectorXd weight_rate_translational(const Vec2& E, const Mat2& P,
                                          const Eigen::VectorXd& hbar,
                                          double gamma) {
  const double scalar = E.dot(P * Vec2(0.0, 1.0));
  return gamma * scalar * hbar;
}

Eigen::VectorXd weight_rate_rotational(double e_R, double e_Omega,
                                       const Eigen::VectorXd& hbar,
                                       double gamma, double c_R) {
  return gamma * (e_Omega + c_R * e_R) * hbar;
}

Eigen::VectorXd project_weights(const Eigen::VectorXd& W, double r) {
  if (r <= 0.0) return W;
  const double norm = W.norm();
  if (norm <= r) return W;
  return W * (r / norm);
}

SanmConfig default_sanm_config() {
  SanmConfig cfg;
  Eigen::Matrix2Xd centers(2, 5);
  centers << -1.0, -0.5, 0.0, 0.5, 1.0,
             -1.0, -0.5, 0.0, 0.5, 1.0;
  for (int j = 0; j < 3; ++j) {
    cfg.trans[j].centers = centers;
    cfg.trans[j].widths = Eigen::VectorXd::Constant(5, j == 2 ? 2.0 : 1.0);
    cfg.rot[j].centers = centers;
    cfg.rot[j].widths = Eigen::VectorXd::Constant(5, 1.0);
  }
  cfg.trans[0].gamma = 5000.0;
  cfg.trans[1].gamma = 5000.0;
  cfg.trans[2].gamma = 1000.0;
  cfg.rot[0].gamma = 1500.0;
  cfg.rot[1].gamma = 1500.0;
  cfg.rot[2].gamma = 100.0;
  return cfg;
}

}  // namespace multilift
