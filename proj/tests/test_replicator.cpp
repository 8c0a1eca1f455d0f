#include "mskkt/replicator.hpp"

#include "mskkt/kkt.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace mskkt;
using namespace mskkt::test;

namespace {

double linf_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

// Exact stationarity: the rational vector field vanishes identically.
bool exact_field_zero(const Graph& g, const Rat& c, const SimplexPoint& x) {
  const RatVec mx = payoff_vector({g, c}, x);
  Rat f(0);
  for (int i = 0; i < x.dimension(); ++i) f += x[i] * mx[i];
  for (int i = 0; i < x.dimension(); ++i) {
    if (x[i] * (mx[i] - f) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("vector field values") {
  SUBCASE("simplex vertices are stationary") {
    for (const Graph& g : {cherry(), complete_graph(4), paw()}) {
      for (int i = 0; i < g.vertex_count(); ++i) {
        std::vector<double> x(g.vertex_count(), 0.0);
        x[i] = 1.0;
        for (double v : vector_field(g, 0.7, x)) CHECK(v == 0.0);
      }
    }
  }
  SUBCASE("stationary interior point of the cherry") {
    const std::vector<double> x{0.25, 0.25, 0.5};
    for (double v : vector_field(cherry(), 0.0, x)) CHECK(std::fabs(v) < 1e-12);
  }
  SUBCASE("barycenter of the cherry pushes mass to the center") {
    const std::vector<double> x{1.0 / 3, 1.0 / 3, 1.0 / 3};
    const std::vector<double> f = vector_field(cherry(), 0.0, x);
    CHECK(f[0] == doctest::Approx(-1.0 / 27).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(-1.0 / 27).epsilon(1e-12));
    CHECK(f[2] == doctest::Approx(2.0 / 27).epsilon(1e-12));
  }
  SUBCASE("components sum to zero") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
      const Graph g = random_graph(rng, 6, 0.5);
      const SimplexPoint x = random_simplex_point(rng, 6, 7, 0.2);
      const std::vector<double> f = vector_field(g, 0.5, x.to_doubles());
      double sum = 0.0;
      for (double v : f) sum += v;
      CHECK(std::fabs(sum) < 1e-9);
    }
  }
}

TEST_CASE("integrate validation") {
  const std::vector<double> x0{1.0 / 3, 1.0 / 3, 1.0 / 3};
  IntegrateOptions bad;
  bad.dt = -0.1;
  CHECK_THROWS_AS(integrate(cherry(), 0.0, x0, bad), std::invalid_argument);
  bad.dt = 0.01;
  bad.t_end = 0.0;
  CHECK_THROWS_AS(integrate(cherry(), 0.0, x0, bad), std::invalid_argument);
  CHECK_THROWS_AS(integrate(cherry(), 0.0, {0.5, 0.5, 0.5}, IntegrateOptions{}),
                  std::invalid_argument);
}

TEST_CASE("integration reaches the stationary point of the cherry") {
  IntegrateOptions opt;
  opt.t_end = 200.0;
  opt.dt = 0.01;
  opt.record_stride = 100;
  const Trajectory t = integrate(cherry(), 0.0, {1.0 / 3, 1.0 / 3, 1.0 / 3}, opt);
  CHECK(linf_distance(t.terminal(), {0.25, 0.25, 0.5}) < 1e-6);
  CHECK(t.lyapunov_violations == 0);
  // the exact limit is a KKT point; certify the rationalized terminal state
  const SimplexPoint limit = rationalize_point(t.terminal(), 1000);
  CHECK(classify({cherry(), Rat(0)}, limit).verdict == Verdict::Kkt);
}

TEST_CASE("integration from near the barycenter of a triangle") {
  IntegrateOptions opt;
  opt.t_end = 100.0;
  opt.dt = 0.01;
  opt.record_stride = 100;
  const Trajectory t = integrate(complete_graph(3), 0.5, {0.4, 0.35, 0.25}, opt);
  CHECK(linf_distance(t.terminal(), {1.0 / 3, 1.0 / 3, 1.0 / 3}) < 1e-6);
  CHECK(classify_approx(complete_graph(3), 0.5, t.terminal()).verdict == ApproxVerdict::Kkt);
}

TEST_CASE("stationary starts stay put") {
  IntegrateOptions opt;
  opt.t_end = 10.0;
  opt.dt = 0.01;
  const std::vector<double> x0{0.25, 0.25, 0.5};
  const Trajectory t = integrate(cherry(), 0.0, x0, opt);
  CHECK(linf_distance(t.terminal(), x0) < 1e-8);
  CHECK(t.converged);
}

TEST_CASE("zero coordinates stay zero") {
  IntegrateOptions opt;
  opt.t_end = 50.0;
  opt.dt = 0.01;
  opt.record_stride = 50;
  const Trajectory t = integrate(cherry(), 0.5, {1.0 / 3, 2.0 / 3, 0.0}, opt);
  for (const auto& state : t.states) CHECK(state[2] == 0.0);
}

TEST_CASE("simplex invariance and monotone objective along random trajectories") {
  std::mt19937 rng(5);
  IntegrateOptions opt;
  opt.t_end = 50.0;
  opt.dt = 0.01;
  opt.record_stride = 25;
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 7;
    const Graph g = random_graph(rng, n, 0.5);
    std::vector<double> x0(n);
    double sum = 0.0;
    for (double& v : x0) {
      v = 0.05 + std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      sum += v;
    }
    for (double& v : x0) v /= sum;
    const Trajectory traj = integrate(g, 0.5, x0, opt);
    CHECK(traj.lyapunov_violations == 0);
    for (const auto& state : traj.states) {
      double s = 0.0;
      for (double v : state) {
        CHECK(v >= -1e-12);
        s += v;
      }
      CHECK(std::fabs(s - 1.0) < 1e-9);
    }
    for (std::size_t k = 1; k < traj.objectives.size(); ++k) {
      CHECK(traj.objectives[k] >= traj.objectives[k - 1] - 1e-9);
    }
  }
}

TEST_CASE("exact stationarity coincides with generalized KKT membership") {
  std::mt19937 rng(7);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 5;
    const Graph g = random_graph(rng, n, 0.5);
    const Rat c = random_rational(rng, 3, 2);
    const SimplexPoint x = random_simplex_point(rng, n, 5, 0.35);
    CHECK(exact_field_zero(g, c, x) == classify({g, c}, x).is_generalized());
  }
}

TEST_CASE("discrete map") {
  SUBCASE("stationary points with positive payoffs are fixed") {
    const std::vector<double> x{0.25, 0.25, 0.5};
    const std::vector<double> next = discrete_step(cherry(), 0.0, x);
    CHECK(linf_distance(next, x) < 1e-12);
  }
  SUBCASE("one step on the triangle") {
    const std::vector<double> x{0.5, 0.25, 0.25};
    const std::vector<double> next = discrete_step(complete_graph(3), 0.5, x);
    CHECK(next[0] == doctest::Approx(6.0 / 13).epsilon(1e-12));
    CHECK(next[1] == doctest::Approx(7.0 / 26).epsilon(1e-12));
    CHECK(next[2] == doctest::Approx(7.0 / 26).epsilon(1e-12));
    CHECK(objective_value(complete_graph(3), 0.5, next) >=
          objective_value(complete_graph(3), 0.5, x));
  }
  SUBCASE("nonpositive payoff on the support is rejected") {
    CHECK_THROWS_WITH_AS(discrete_step(cherry(), 0.0, std::vector<double>{0.5, 0.5, 0.0}),
                         "discrete map undefined; shift c", std::invalid_argument);
  }
  SUBCASE("automatic shift keeps the same fixed points") {
    const Trajectory t = iterate_discrete(cherry(), 0.0, {0.25, 0.25, 0.5}, 100);
    CHECK(t.payoff_shift == 1.0);
    CHECK(linf_distance(t.terminal(), {0.25, 0.25, 0.5}) < 1e-12);
  }
  SUBCASE("iteration on the cherry at c = 1 heads to the center vertex") {
    // no interior stationary point exists at c = 1; the iteration drifts to the
    // boundary, closing the gap only like 1/steps
    const Trajectory t = iterate_discrete(cherry(), 1.0, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 10000);
    CHECK(t.payoff_shift == 0.0);
    CHECK(linf_distance(t.terminal(), {0.0, 0.0, 1.0}) < 1e-3);
    CHECK(t.lyapunov_violations == 0);
    CHECK(classify_approx(cherry(), 1.0, t.terminal(), 1e-3, 1e-3).verdict == ApproxVerdict::Kkt);
  }
  SUBCASE("zeros stay zero under the discrete map") {
    const Trajectory t = iterate_discrete(cherry(), 0.5, {0.3, 0.7, 0.0}, 200);
    for (const auto& state : t.states) CHECK(state[2] == 0.0);
  }
}

TEST_CASE("trajectory export format") {
  IntegrateOptions opt;
  opt.t_end = 0.05;
  opt.dt = 0.01;
  const Trajectory t = integrate(cherry(), 0.0, {1.0 / 3, 1.0 / 3, 1.0 / 3}, opt);
  std::ostringstream os;
  write_trajectory_records(os, t);
  std::istringstream is(os.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    long step;
    double time, x1, x2, x3, f;
    CHECK(static_cast<bool>(ls >> step >> time >> x1 >> x2 >> x3 >> f));
    ++lines;
  }
  CHECK(lines == t.states.size());
}
