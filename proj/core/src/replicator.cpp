#include "mskkt/replicator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mskkt {

namespace {

std::vector<double> payoff(const Graph& g, double c, std::span<const double> x) {
  const int n = g.vertex_count();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("dimension mismatch");
  std::vector<double> mx(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) mx[i] += x[j];
    }
    mx[i] += c * x[i];
  }
  return mx;
}

void validate_near_simplex(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) {
    if (v < -1e-12) throw std::invalid_argument("coordinate below the simplex tolerance");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw std::invalid_argument("coordinates do not sum to 1");
}

void renormalize(std::vector<double>& x) {
  double sum = 0.0;
  for (double& v : x) {
    if (v < 0.0 && v > -1e-15) v = 0.0;
    sum += v;
  }
  for (double& v : x) v /= sum;
}

double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double a : v) m = std::max(m, std::fabs(a));
  return m;
}

}  // namespace

std::vector<double> vector_field(const Graph& g, double c, std::span<const double> x) {
  std::vector<double> mx = payoff(g, c, x);
  double f = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) f += x[i] * mx[i];
  std::vector<double> field(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) field[i] = x[i] * (mx[i] - f);
  return field;
}

double objective_value(const Graph& g, double c, std::span<const double> x) {
  std::vector<double> mx = payoff(g, c, x);
  double f = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) f += x[i] * mx[i];
  return f;
}

Trajectory integrate(const Graph& g, double c, std::vector<double> x0,
                     const IntegrateOptions& options) {
  if (options.dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (options.t_end <= 0.0) throw std::invalid_argument("t_end must be positive");
  if (options.record_stride < 1) throw std::invalid_argument("record stride must be >= 1");
  validate_near_simplex(x0);
  renormalize(x0);

  Trajectory t;
  t.mode = StepMode::Continuous;
  t.c = c;
  t.dt = options.dt;

  const long total_steps = static_cast<long>(std::ceil(options.t_end / options.dt));
  const int n = static_cast<int>(x0.size());
  std::vector<double> x = std::move(x0);
  double f_prev = objective_value(g, c, x);

  t.states.push_back(x);
  t.times.push_back(0.0);
  t.objectives.push_back(f_prev);

  auto record = [&](long step) {
    t.states.push_back(x);
    t.times.push_back(step * options.dt);
    t.objectives.push_back(f_prev);
  };

  const double h = options.dt;
  std::vector<double> k1, k2, k3, k4, tmp(n);
  for (long step = 1; step <= total_steps; ++step) {
    k1 = vector_field(g, c, x);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    k2 = vector_field(g, c, tmp);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    k3 = vector_field(g, c, tmp);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    k4 = vector_field(g, c, tmp);
    for (int i = 0; i < n; ++i) {
      x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    renormalize(x);
    ++t.steps;

    const double f = objective_value(g, c, x);
    if (f < f_prev - 1e-9) {
      ++t.lyapunov_violations;
      t.max_objective_drop = std::max(t.max_objective_drop, f_prev - f);
    }
    f_prev = f;

    const bool stationary = sup_norm(vector_field(g, c, x)) < options.field_tolerance;
    if (step % options.record_stride == 0 || step == total_steps || stationary) record(step);
    if (stationary) {
      t.converged = true;
      break;
    }
  }
  return t;
}

std::vector<double> discrete_step(const Graph& g, double c, std::span<const double> x,
                                  double payoff_shift) {
  std::vector<double> q = payoff(g, c, x);
  double mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    q[i] += payoff_shift;
    if (x[i] != 0.0 && q[i] <= 0.0) {
      throw std::invalid_argument("discrete map undefined; shift c");
    }
    mean += x[i] * q[i];
  }
  std::vector<double> next(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) next[i] = x[i] * q[i] / mean;
  return next;
}

Trajectory iterate_discrete(const Graph& g, double c, std::vector<double> x0, long steps,
                            int record_stride) {
  if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
  if (record_stride < 1) throw std::invalid_argument("record stride must be >= 1");
  validate_near_simplex(x0);
  renormalize(x0);

  Trajectory t;
  t.mode = StepMode::Discrete;
  t.c = c;
  t.dt = 1.0;
  t.payoff_shift = (c > 0.0) ? 0.0 : 1.0 + std::max(0.0, -c);

  std::vector<double> x = std::move(x0);
  double f_prev = objective_value(g, c, x);
  t.states.push_back(x);
  t.times.push_back(0.0);
  t.objectives.push_back(f_prev);

  for (long step = 1; step <= steps; ++step) {
    x = discrete_step(g, c, x, t.payoff_shift);
    ++t.steps;
    const double f = objective_value(g, c, x);
    if (f < f_prev - 1e-9) {
      ++t.lyapunov_violations;
      t.max_objective_drop = std::max(t.max_objective_drop, f_prev - f);
    }
    f_prev = f;
    if (step % record_stride == 0 || step == steps) {
      t.states.push_back(x);
      t.times.push_back(static_cast<double>(step));
      t.objectives.push_back(f);
    }
  }
  return t;
}

void write_trajectory_records(std::ostream& os, const Trajectory& t) {
  char buf[32];
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    const long step = static_cast<long>(t.mode == StepMode::Continuous
                                            ? std::llround(t.times[k] / t.dt)
                                            : std::llround(t.times[k]));
    os << step << ' ' << t.times[k];
    for (double v : t.states[k]) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      os << ' ' << buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", t.objectives[k]);
    os << ' ' << buf << '\n';
  }
}

}  // namespace mskkt
