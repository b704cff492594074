#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "vartraj/frenet.hpp"
#include "vartraj/hyperbolic.hpp"
#include "vartraj/reparam1d.hpp"

namespace vartraj::io {

// UTF-8, LF line endings, '.' decimal separator, 17 significant digits on
// output. Parse errors name the offending row and column.

struct Csv {
  std::vector<std::string> header;
  Eigen::MatrixXd data;
};

Csv read_csv(const std::string& path);
// Same, but the header must match exactly.
Csv read_csv(const std::string& path, const std::vector<std::string>& expect_header);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Eigen::MatrixXd& data);

std::string format_full(double v);  // %.17g

// Schema helpers for the formats the CLI speaks.
reparam::MonotoneMap read_monotone_map(const std::string& path);              // x,y
void write_monotone_map(const std::string& path, const reparam::MonotoneMap& map);

reparam::SampledPath read_sampled_path(const std::string& path);              // t,x0,x1,...
void write_sampled_path(const std::string& path, const reparam::SampledPath& p);

frenet::SampledCurve read_curve(const std::string& path);                     // s,x,y,z
void write_curve(const std::string& path, const frenet::SampledCurve& c);

// s,tx,ty,tz,nx,ny,nz,bx,by,bz,kappa,tau,theta
void write_frames(const std::string& path, const frenet::FrenetApparatus& app,
                  const Eigen::VectorXd& theta);

hyperbolic::HalfPlanePath read_half_plane_path(const std::string& path);      // t,x1,x2
void write_half_plane_path(const std::string& path, const hyperbolic::HalfPlanePath& p);

// t,R00..R22[,tx,ty,tz] rotation / pose trajectories
void write_rotation_trajectory(const std::string& path, const Eigen::VectorXd& t,
                               const std::vector<Eigen::Matrix3d>& R);
void write_pose_trajectory(const std::string& path, const Eigen::VectorXd& t,
                           const std::vector<Eigen::Matrix3d>& R,
                           const Eigen::MatrixXd& translation);

// t,wx,wy,wz[,R00..R22]
void write_omega_trajectory(const std::string& path, const Eigen::VectorXd& t,
                            const Eigen::MatrixXd& omega,
                            const std::vector<Eigen::Matrix3d>* R = nullptr);

}  // namespace vartraj::io
