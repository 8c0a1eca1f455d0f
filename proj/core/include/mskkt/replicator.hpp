#pragma once

#include "mskkt/graph.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace mskkt {

enum class StepMode { Continuous, Discrete };

/// Recorded trajectory of the replicator dynamics with payoff matrix A + c*I.
/// States are renormalized floats; the objective is tracked at every step even
/// when states are recorded with a stride.
struct Trajectory {
  StepMode mode = StepMode::Continuous;
  double c = 0.0;
  double dt = 0.0;
  double payoff_shift = 0.0;  // discrete mode only; fixed points are unchanged

  std::vector<std::vector<double>> states;
  std::vector<double> times;
  std::vector<double> objectives;

  long steps = 0;
  bool converged = false;        // stopped early on a vanishing vector field
  long lyapunov_violations = 0;  // steps where the objective dropped by > 1e-9
  double max_objective_drop = 0.0;

  const std::vector<double>& terminal() const { return states.back(); }
};

/// Right-hand side x_i * ((Mx)_i - x^T M x) with M = A + c*I. Components sum
/// to zero up to roundoff; zero coordinates stay exactly zero.
std::vector<double> vector_field(const Graph& g, double c, std::span<const double> x);

double objective_value(const Graph& g, double c, std::span<const double> x);

struct IntegrateOptions {
  double t_end = 500.0;
  double dt = 0.01;
  int record_stride = 1;           // every k-th state lands in the trajectory
  double field_tolerance = 1e-10;  // sup-norm early-termination threshold
};

/// Fixed-step 4th order integration with per-step renormalization onto the
/// simplex. The objective is a Lyapunov function of the flow; each step is
/// checked and violations beyond the 1e-9 slack are counted.
Trajectory integrate(const Graph& g, double c, std::vector<double> x0,
                     const IntegrateOptions& options);

/// One step of the multiplicative map x_i <- x_i * q_i / (x^T q) with payoff
/// q = (A + c*I)x + shift. All payoffs on the support must be positive.
std::vector<double> discrete_step(const Graph& g, double c, std::span<const double> x,
                                  double payoff_shift = 0.0);

/// Iterates the discrete map; when c <= 0 a payoff shift of 1 + max(0, -c) is
/// applied automatically and recorded in the trajectory.
Trajectory iterate_discrete(const Graph& g, double c, std::vector<double> x0, long steps,
                            int record_stride = 1);

/// Line-oriented export: one record per stored state,
/// "step time x_1 ... x_n objective".
void write_trajectory_records(std::ostream& os, const Trajectory& t);

}  // namespace mskkt
