// vartraj: batch front door for the variational trajectory library.
//
// Subcommands operate on CSV files (17 significant digits, LF endings) and
// print machine-readable key: value reports. Exit codes: 0 success, 2
// validation error, 3 optimality violation (verify).

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <string>

#include "vartraj/errors.hpp"
#include "vartraj/euler_poincare.hpp"
#include "vartraj/frenet.hpp"
#include "vartraj/hyperbolic.hpp"
#include "vartraj/io.hpp"
#include "vartraj/lie_core.hpp"
#include "vartraj/numerics.hpp"
#include "vartraj/reparam1d.hpp"
#include "vartraj/verify.hpp"

namespace {

using namespace vartraj;

constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

Eigen::VectorXd parse_vector(const std::string& text, int expect, const std::string& flag) {
  std::vector<double> vals;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw ValidationError(flag + ": empty component");
      try {
        vals.push_back(std::stod(cur));
      } catch (const std::exception&) {
        throw ValidationError(flag + ": cannot parse '" + cur + "'");
      }
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (expect > 0 && static_cast<int>(vals.size()) != expect)
    throw ValidationError(flag + ": expected " + std::to_string(expect) +
                          " comma-separated values");
  return Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size());
}

reparam::ScalarDensity builtin_density(const std::string& name) {
  if (name == "one") return reparam::ScalarDensity::from_function([](double) { return 1.0; });
  if (name == "four") return reparam::ScalarDensity::from_function([](double) { return 4.0; });
  if (name == "quad")
    return reparam::ScalarDensity::from_function([](double y) { return (1.0 + y) * (1.0 + y); });
  if (name == "cos")
    return reparam::ScalarDensity::from_function(
        [](double y) { return 1.0 + 0.5 * std::cos(2.0 * M_PI * y); });
  if (name == "peak")
    return reparam::ScalarDensity::from_function(
        [](double y) { return 1.0 + 4.0 * std::exp(-50.0 * (y - 0.5) * (y - 0.5)); });
  throw ValidationError("unknown density '" + name + "' (built-ins: one four quad cos peak)");
}

reparam::ScalarDensity density_from_csv(const std::string& path) {
  io::Csv csv = io::read_csv(path, {"s", "m"});
  return reparam::ScalarDensity::from_samples(csv.data.col(0), csv.data.col(1));
}

frenet::SampledCurve builtin_curve(const std::string& name, int K) {
  if (name == "helix") {
    const double c = std::sqrt(2.0);
    Eigen::VectorXd s = Eigen::VectorXd::LinSpaced(K + 1, 0.0, 1.0);
    Eigen::MatrixXd x(K + 1, 3);
    for (int i = 0; i <= K; ++i) {
      x(i, 0) = std::cos(s[i] / c);
      x(i, 1) = std::sin(s[i] / c);
      x(i, 2) = s[i] / c;
    }
    return frenet::SampledCurve(std::move(s), std::move(x), true);
  }
  throw ValidationError("unknown built-in curve '" + name + "' (built-ins: helix)");
}

frenet::SampledCurve load_curve(const std::string& in, const std::string& builtin, int grid) {
  if (!builtin.empty()) return builtin_curve(builtin, grid);
  if (in.empty()) throw ValidationError("provide --in <curve.csv> or --builtin <name>");
  return frenet::arclength_parametrize(io::read_curve(in));
}

void write_joint_frames(const std::string& path, const frenet::JointResult& jr,
                        const frenet::FrenetApparatus& app) {
  const Eigen::Index n = jr.s_map.nodes();
  PchipInterpolant kappa_of_s(app.s, app.curvature);
  PchipInterpolant tau_of_s(app.s, app.torsion);
  Eigen::MatrixXd data(n, 13);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sv = jr.s_map.values()[i];
    const Eigen::Matrix3d& R = jr.frames.R[i];
    data(i, 0) = jr.s_map.grid()[i];
    for (int c = 0; c < 3; ++c) {
      data(i, 1 + c) = R(c, 0);
      data(i, 4 + c) = R(c, 1);
      data(i, 7 + c) = R(c, 2);
    }
    data(i, 10) = kappa_of_s(sv);
    data(i, 11) = tau_of_s(sv);
    data(i, 12) = jr.roll.theta[i];
  }
  io::write_csv(
      path,
      {"s", "tx", "ty", "tz", "nx", "ny", "nz", "bx", "by", "bz", "kappa", "tau", "theta"},
      data);
}

MetricRule half_plane_metric() {
  return [](const Eigen::VectorXd& q) -> Eigen::MatrixXd {
    return Eigen::MatrixXd::Identity(2, 2) / (q[1] * q[1]);
  };
}

struct VerifyJob {
  std::string in, cost = "dirichlet", mode = "perturb";
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double amplitude = 0.05;
  int modes = 8;
};

int run_verify(const VerifyJob& job) {
  verify::PerturbationBasis basis;
  basis.seed = job.seed;
  basis.amplitude = job.amplitude;
  basis.modes = job.modes;

  Trajectory candidate;
  CostFunction cost;
  MetricRule metric;

  if (job.cost.rfind("density:", 0) == 0) {
    reparam::MonotoneMap map = io::read_monotone_map(job.in);
    candidate = Trajectory(map.grid(), map.values());
    auto density = builtin_density(job.cost.substr(8));
    cost = [density](const Trajectory& traj) {
      double c = 0.0;
      for (Eigen::Index i = 0; i + 1 < traj.samples(); ++i) {
        const double dx = traj.t[i + 1] - traj.t[i];
        const double slope = (traj.q(i + 1, 0) - traj.q(i, 0)) / dx;
        c += density(0.5 * (traj.q(i, 0) + traj.q(i + 1, 0))) * slope * slope * dx;
      }
      return c;
    };
    metric = [density](const Eigen::VectorXd& q) {
      Eigen::MatrixXd m(1, 1);
      m(0, 0) = density(q[0]);
      return m;
    };
  } else if (job.cost == "halfplane") {
    hyperbolic::HalfPlanePath path = io::read_half_plane_path(job.in);
    candidate = Trajectory(path.t, path.x);
    cost = [](const Trajectory& traj) {
      hyperbolic::HalfPlanePath p(traj.t, traj.q);
      return hyperbolic::hyperbolic_cost(p);
    };
    metric = half_plane_metric();
  } else if (job.cost == "dirichlet") {
    io::Csv csv = io::read_csv(job.in);
    if (csv.header.empty() || csv.header[0] != "t")
      throw ValidationError(job.in + ": first column must be 't'");
    candidate = Trajectory(csv.data.col(0), csv.data.rightCols(csv.data.cols() - 1));
    cost = [](const Trajectory& traj) {
      double c = 0.0;
      for (Eigen::Index i = 0; i + 1 < traj.samples(); ++i) {
        const double dt = traj.t[i + 1] - traj.t[i];
        c += (traj.q.row(i + 1) - traj.q.row(i)).squaredNorm() / dt;
      }
      return c;
    };
    const int d = static_cast<int>(candidate.dim());
    metric = [d](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(d, d); };
  } else {
    throw ValidationError("unknown cost '" + job.cost +
                          "' (built-ins: dirichlet halfplane density:<name>)");
  }

  verify::OptimalityReport report;
  if (job.mode == "perturb") {
    report = verify::perturbation_test(cost, candidate, basis, job.trials, job.tol);
  } else if (job.mode == "reparam") {
    report = verify::reparam_worsens_test(metric, candidate, basis, job.trials, job.tol);
  } else {
    throw ValidationError("unknown mode '" + job.mode + "' (perturb|reparam)");
  }

  std::cout << "mode: " << job.mode << "\n"
            << "cost: " << job.cost << "\n"
            << "seed: " << job.seed << "\n"
            << verify::format_report(report);
  return report.violations > 0 ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"globally optimal variational trajectories"};
  app.require_subcommand(1);

  int exit_code = 0;

  // reparam
  std::string rp_density = "one", rp_density_file, rp_out;
  int rp_grid = 1000;
  auto* rp = app.add_subcommand("reparam", "solve the 1D reparametrization problem");
  rp->add_option("--density", rp_density, "built-in density name");
  rp->add_option("--density-file", rp_density_file, "tabulated density CSV (s,m)");
  rp->add_option("--grid", rp_grid, "grid size K")->check(CLI::Range(2, 10000000));
  rp->add_option("--out", rp_out, "output MonotoneMap CSV (x,y)")->required();
  rp->callback([&] {
    reparam::ScalarDensity m =
        rp_density_file.empty() ? builtin_density(rp_density) : density_from_csv(rp_density_file);
    reparam::MonotoneMap map = reparam::solve_reparam(m, rp_grid);
    io::write_monotone_map(rp_out, map);
    std::cout << "optimal_cost: " << io::format_full(reparam::optimal_cost(m)) << "\n"
              << "path_cost: " << io::format_full(reparam::path_cost(m, map)) << "\n"
              << "out: " << rp_out << "\n";
  });

  // warp
  std::string wp_in, wp_out, wp_map_out;
  auto* wp = app.add_subcommand("warp", "constant-speed retiming of a sampled path");
  wp->add_option("--in", wp_in, "input SampledPath CSV (t,x0,x1,...)")->required();
  wp->add_option("--out", wp_out, "warped path CSV")->required();
  wp->add_option("--map-out", wp_map_out, "optional MonotoneMap CSV");
  wp->callback([&] {
    reparam::SampledPath path = io::read_sampled_path(wp_in);
    reparam::WarpResult r = reparam::warp_trajectory(path);
    io::write_sampled_path(wp_out, r.path);
    if (!wp_map_out.empty()) io::write_monotone_map(wp_map_out, r.map);
    std::cout << "samples: " << r.path.t.size() << "\n"
              << "out: " << wp_out << "\n";
  });

  // frame
  std::string fr_in, fr_builtin, fr_out;
  int fr_grid = 2000;
  double fr_theta0 = 0.0;
  double fr_theta1_val = 0.0;
  auto* fr = app.add_subcommand("frame", "Frenet apparatus + minimally twisting roll");
  fr->add_option("--in", fr_in, "curve CSV (s,x,y,z)");
  fr->add_option("--builtin", fr_builtin, "built-in curve (helix)");
  fr->add_option("--grid", fr_grid, "grid size for built-in curves");
  fr->add_option("--theta0", fr_theta0, "roll at s=0");
  auto* fr_t1 = fr->add_option("--theta1", fr_theta1_val, "roll at s=1 (end-constrained)");
  fr->add_option("--out", fr_out, "frames CSV")->required();
  fr->callback([&] {
    frenet::SampledCurve curve = load_curve(fr_in, fr_builtin, fr_grid);
    frenet::FrenetApparatus appar = frenet::frenet_apparatus(curve);
    std::optional<double> theta1;
    if (fr_t1->count() > 0) theta1 = fr_theta1_val;
    frenet::RollProfile roll = frenet::minimal_twist(appar, fr_theta0, theta1);
    io::write_frames(fr_out, appar, roll.theta);
    frenet::FrameField field = frenet::frenet_frames(curve, appar);
    std::cout << "length: " << io::format_full(appar.length) << "\n"
              << "frenet_cost: " << io::format_full(frenet::frame_cost(field)) << "\n"
              << "minimal_twist_cost: "
              << io::format_full(frenet::frame_cost(frenet::with_roll(field, appar, roll)))
              << "\n"
              << "out: " << fr_out << "\n";
  });

  // joint
  std::string jt_in, jt_builtin, jt_out_map, jt_out_frames;
  int jt_grid = 2000;
  double jt_r = 1.0, jt_theta0 = 0.0, jt_theta1 = 0.0;
  auto* jt = app.add_subcommand("joint", "joint roll + reparametrization");
  jt->add_option("--in", jt_in, "curve CSV (s,x,y,z)");
  jt->add_option("--builtin", jt_builtin, "built-in curve (helix)");
  jt->add_option("--grid", jt_grid, "grid size for built-in curves");
  jt->add_option("--r", jt_r, "length scale r")->check(CLI::PositiveNumber);
  jt->add_option("--theta0", jt_theta0, "roll at t=0");
  jt->add_option("--theta1", jt_theta1, "roll at t=1");
  jt->add_option("--out-map", jt_out_map, "s*(t) MonotoneMap CSV")->required();
  jt->add_option("--out-frames", jt_out_frames, "resampled frames CSV")->required();
  jt->callback([&] {
    frenet::SampledCurve curve = load_curve(jt_in, jt_builtin, jt_grid);
    frenet::FrenetApparatus appar = frenet::frenet_apparatus(curve);
    frenet::JointResult jr = frenet::joint_roll_reparam(curve, jt_r, jt_theta0, jt_theta1);
    io::write_monotone_map(jt_out_map, jr.s_map);
    write_joint_frames(jt_out_frames, jr, appar);
    std::cout << "r: " << io::format_full(jt_r) << "\n"
              << "out_map: " << jt_out_map << "\n"
              << "out_frames: " << jt_out_frames << "\n";
  });

  // interp-so3
  std::string so3_q0, so3_q1, so3_out;
  int so3_grid = 100;
  auto* iso3 = app.add_subcommand("interp-so3", "SO(3) geodesic between rotations");
  iso3->add_option("--q0", so3_q0, "start rotation, exp coords wx,wy,wz")->required();
  iso3->add_option("--q1", so3_q1, "end rotation, exp coords wx,wy,wz")->required();
  iso3->add_option("--grid", so3_grid, "samples");
  iso3->add_option("--out", so3_out, "trajectory CSV (t,R00..R22)")->required();
  iso3->callback([&] {
    const Eigen::Matrix3d R0 = lie::exp_so3(parse_vector(so3_q0, 3, "--q0"));
    const Eigen::Matrix3d R1 = lie::exp_so3(parse_vector(so3_q1, 3, "--q1"));
    Eigen::VectorXd t = Eigen::VectorXd::LinSpaced(so3_grid + 1, 0.0, 1.0);
    std::vector<Eigen::Matrix3d> R(so3_grid + 1);
    for (int i = 0; i <= so3_grid; ++i) R[i] = lie::geodesic_so3(R0, R1, t[i]);
    io::write_rotation_trajectory(so3_out, t, R);
    std::cout << "out: " << so3_out << "\n";
  });

  // interp-pose / interp-se3
  struct PoseJob {
    std::string q0, q1, out;
    int grid = 100;
  };
  auto pose_job = std::make_shared<PoseJob>();
  auto se3_job = std::make_shared<PoseJob>();
  auto run_pose = [](const PoseJob& job, bool semidirect) {
    const Eigen::VectorXd v0 = parse_vector(job.q0, 6, "--q0");
    const Eigen::VectorXd v1 = parse_vector(job.q1, 6, "--q1");
    Eigen::VectorXd t = Eigen::VectorXd::LinSpaced(job.grid + 1, 0.0, 1.0);
    std::vector<Eigen::Matrix3d> R(job.grid + 1);
    Eigen::MatrixXd trans(job.grid + 1, 3);
    if (semidirect) {
      lie::PoseSE3 g0{lie::exp_so3(v0.head(3)), v0.tail(3)};
      lie::PoseSE3 g1{lie::exp_so3(v1.head(3)), v1.tail(3)};
      for (int i = 0; i <= job.grid; ++i) {
        lie::PoseSE3 g = lie::geodesic_se3(g0, g1, t[i]);
        R[i] = g.R;
        trans.row(i) = g.t.transpose();
      }
    } else {
      lie::PoseDirect g0{lie::exp_so3(v0.head(3)), v0.tail(3)};
      lie::PoseDirect g1{lie::exp_so3(v1.head(3)), v1.tail(3)};
      for (int i = 0; i <= job.grid; ++i) {
        lie::PoseDirect g = lie::geodesic_pose_direct(g0, g1, t[i]);
        R[i] = g.R;
        trans.row(i) = g.t.transpose();
      }
    }
    io::write_pose_trajectory(job.out, t, R, trans);
    std::cout << "out: " << job.out << "\n";
  };

  auto* ipose =
      app.add_subcommand("interp-pose", "pose-change group interpolation (componentwise)");
  ipose->add_option("--q0", pose_job->q0, "start pose wx,wy,wz,tx,ty,tz")->required();
  ipose->add_option("--q1", pose_job->q1, "end pose wx,wy,wz,tx,ty,tz")->required();
  ipose->add_option("--grid", pose_job->grid, "samples");
  ipose->add_option("--out", pose_job->out, "trajectory CSV")->required();
  ipose->callback([pose_job, run_pose] { run_pose(*pose_job, false); });

  auto* ise3 = app.add_subcommand("interp-se3", "SE(3) geodesic (constant body twist)");
  ise3->add_option("--q0", se3_job->q0, "start pose wx,wy,wz,tx,ty,tz")->required();
  ise3->add_option("--q1", se3_job->q1, "end pose wx,wy,wz,tx,ty,tz")->required();
  ise3->add_option("--grid", se3_job->grid, "samples");
  ise3->add_option("--out", se3_job->out, "trajectory CSV")->required();
  ise3->callback([se3_job, run_pose] { run_pose(*se3_job, true); });

  // geodesic-h2
  std::string h2_q0, h2_q1, h2_out;
  int h2_grid = 1000;
  auto* h2 = app.add_subcommand("geodesic-h2", "half-plane geodesic between endpoints");
  h2->add_option("--q0", h2_q0, "start point x1,x2")->required();
  h2->add_option("--q1", h2_q1, "end point x1,x2")->required();
  h2->add_option("--grid", h2_grid, "samples");
  h2->add_option("--out", h2_out, "path CSV (t,x1,x2)")->required();
  h2->callback([&] {
    const Eigen::Vector2d p0 = parse_vector(h2_q0, 2, "--q0");
    const Eigen::Vector2d p1 = parse_vector(h2_q1, 2, "--q1");
    hyperbolic::BvpResult r = hyperbolic::geodesic_h2_bvp(p0, p1);
    hyperbolic::HalfPlanePath path = hyperbolic::sample_geodesic(r.params, r.t0, r.t1, h2_grid);
    io::write_half_plane_path(h2_out, path);
    Eigen::Vector2d mid = hyperbolic::geodesic_h2(r.params, 0.5 * (r.t0 + r.t1));
    hyperbolic::CurvatureReport curv =
        hyperbolic::curvature_report(half_plane_metric(), mid, 1e-4);
    std::cout << "sl2: " << io::format_full(r.params.a) << "," << io::format_full(r.params.b)
              << "," << io::format_full(r.params.c) << "," << io::format_full(r.params.d) << "\n"
              << "t0: " << io::format_full(r.t0) << "\n"
              << "t1: " << io::format_full(r.t1) << "\n"
              << "length: " << io::format_full(r.t1 - r.t0) << "\n"
              << "cost: " << io::format_full(hyperbolic::hyperbolic_cost(path)) << "\n"
              << "k0_fit: " << io::format_full(curv.k0) << "\n"
              << "k0_residual: " << io::format_full(curv.max_residual) << "\n"
              << "out: " << h2_out << "\n";
  });

  // ansatz-h2
  std::string an_q0, an_q1, an_out;
  int an_grid = 1000, an_sweep = 0;
  auto* an = app.add_subcommand("ansatz-h2", "exponential ansatz vs. the true geodesic");
  an->add_option("--q0", an_q0, "start point x1,x2")->required();
  an->add_option("--q1", an_q1, "end point x1,x2")->required();
  an->add_option("--grid", an_grid, "samples");
  an->add_option("--sweep", an_sweep, "steering sweep size (0 = off)");
  an->add_option("--out", an_out, "ansatz path CSV (t,x1,x2)");
  an->callback([&] {
    const Eigen::Vector2d p0 = parse_vector(an_q0, 2, "--q0");
    const Eigen::Vector2d p1 = parse_vector(an_q1, 2, "--q1");
    hyperbolic::BvpResult r = hyperbolic::geodesic_h2_bvp(p0, p1);
    const double length = r.t1 - r.t0;
    // Both candidates live on the unit interval, where the geodesic's
    // energy cost is its squared length.
    const double geo_cost = length * length;
    hyperbolic::HalfPlanePath path = hyperbolic::ansatz_h2(p0, p1, an_grid);
    const double ans_cost = hyperbolic::hyperbolic_cost(path);
    if (!an_out.empty()) io::write_half_plane_path(an_out, path);
    std::cout << "geodesic_length: " << io::format_full(length) << "\n"
              << "geodesic_cost: " << io::format_full(geo_cost) << "\n"
              << "ansatz_cost: " << io::format_full(ans_cost) << "\n"
              << "gap: " << io::format_full(ans_cost - geo_cost) << "\n";
    if (an_sweep > 0) {
      double best = ans_cost;
      double best_w = 0.0;
      for (int i = 0; i < an_sweep; ++i) {
        const double w0 = -3.0 + 6.0 * i / std::max(1, an_sweep - 1);
        hyperbolic::SteeredAnsatz s = hyperbolic::ansatz_h2_steered(p0, p1, w0, an_grid);
        if (s.converged && s.cost < best) {
          best = s.cost;
          best_w = w0;
        }
      }
      std::cout << "steered_best_cost: " << io::format_full(best) << "\n"
                << "steered_best_omega0: " << io::format_full(best_w) << "\n";
    }
  });

  // euler-top
  std::string et_inertia = "1,1,1", et_omega0 = "0,0,0", et_winit = "1,0,0", et_out;
  double et_T = 1.0, et_dt = 1e-3;
  auto* et = app.add_subcommand("euler-top", "rigid-body Euler-Poincare integration");
  et->add_option("--inertia", et_inertia, "principal moments I1,I2,I3");
  et->add_option("--omega0", et_omega0, "velocity offset wx,wy,wz");
  et->add_option("--omega-init", et_winit, "initial body velocity wx,wy,wz");
  et->add_option("--T", et_T, "horizon")->check(CLI::PositiveNumber);
  et->add_option("--dt", et_dt, "step")->check(CLI::PositiveNumber);
  et->add_option("--out", et_out, "trajectory CSV (t,wx,wy,wz,R00..R22)")->required();
  et->callback([&] {
    const Eigen::Vector3d I = parse_vector(et_inertia, 3, "--inertia");
    ep::InertiaSpec spec(I.asDiagonal(), parse_vector(et_omega0, 3, "--omega0"));
    ep::BodyVelocityPath path =
        ep::ep_integrate_so3(spec, parse_vector(et_winit, 3, "--omega-init"),
                             Eigen::Matrix3d::Identity(), et_T, et_dt);
    io::write_omega_trajectory(et_out, path.t, path.omega, &path.R);
    const Eigen::Vector3d w_end = path.omega.row(path.t.size() - 1).transpose();
    std::cout << "steps: " << path.t.size() - 1 << "\n"
              << "omega_end: " << io::format_full(w_end[0]) << "," << io::format_full(w_end[1])
              << "," << io::format_full(w_end[2]) << "\n"
              << "out: " << et_out << "\n";
  });

  // verify
  VerifyJob vj;
  auto* vf = app.add_subcommand("verify", "falsification harness for a candidate trajectory");
  vf->add_option("--in", vj.in, "candidate CSV")->required();
  vf->add_option("--cost", vj.cost, "dirichlet | halfplane | density:<name>");
  vf->add_option("--mode", vj.mode, "perturb | reparam");
  vf->add_option("--trials", vj.trials, "number of trials")->check(CLI::PositiveNumber);
  vf->add_option("--seed", vj.seed, "RNG seed");
  vf->add_option("--tol", vj.tol, "violation tolerance");
  vf->add_option("--amplitude", vj.amplitude, "perturbation amplitude");
  vf->add_option("--modes", vj.modes, "sine modes");
  vf->callback([&] { exit_code = run_verify(vj); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return exit_code;
}
