#include "mskkt/kkt.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mskkt {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Kkt: return "KKT";
    case Verdict::GeneralizedOnly: return "GENERALIZED_ONLY";
    case Verdict::NotStationary: return "NOT_STATIONARY";
  }
  return "?";
}

RatVec payoff_vector(const ParametricProgram& p, const SimplexPoint& x) {
  const Graph& g = p.graph;
  if (x.dimension() != g.vertex_count()) throw std::invalid_argument("dimension mismatch");
  const int n = g.vertex_count();
  RatVec mx(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) mx[i] += x[j];
    }
    mx[i] += p.c * x[i];
  }
  return mx;
}

Rat objective(const ParametricProgram& p, const SimplexPoint& x) {
  RatVec mx = payoff_vector(p, x);
  Rat value(0);
  for (int i = 0; i < x.dimension(); ++i) value += x[i] * mx[i];
  return value;
}

KktCertificate classify(const ParametricProgram& p, const SimplexPoint& x) {
  RatVec mx = payoff_vector(p, x);
  const int n = x.dimension();

  KktCertificate cert;
  cert.lambda = 0;
  for (int i = 0; i < n; ++i) cert.lambda += x[i] * mx[i];
  cert.mu.resize(n);
  for (int i = 0; i < n; ++i) cert.mu[i] = 2 * (cert.lambda - mx[i]);

  for (int i = 0; i < n; ++i) {
    if (x[i] != 0 && mx[i] != cert.lambda) {
      cert.verdict = Verdict::NotStationary;
      cert.witness = i;
      return cert;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0 && mx[i] > cert.lambda) {
      cert.verdict = Verdict::GeneralizedOnly;
      cert.witness = i;
      return cert;
    }
  }
  cert.verdict = Verdict::Kkt;
  return cert;
}

bool characteristic_gkkt_test(const Graph& g, const VertexSet& s) {
  return is_regular(induced_subgraph(g, s).graph);
}

std::optional<Rat> unique_c_recovery(const Graph& g, const SimplexPoint& x) {
  if (x.dimension() != g.vertex_count()) throw std::invalid_argument("dimension mismatch");
  if (x.is_characteristic()) {
    throw std::invalid_argument(
        "characteristic vector: membership holds for every c or for none, so no unique c exists");
  }
  const VertexSet supp = x.support();

  RatVec ax(x.dimension(), Rat(0));
  for (int i : supp) {
    for (int j : supp) {
      if (g.adjacent(i, j)) ax[i] += x[j];
    }
  }

  // (Ax)_i + c x_i must be constant on the support. Two support indices with
  // different coordinates pin c; the remaining equations either agree or rule
  // any c out.
  int a = supp.front(), b = -1;
  for (int i : supp) {
    if (x[i] != x[a]) {
      b = i;
      break;
    }
  }
  const Rat c = (ax[b] - ax[a]) / (x[a] - x[b]);
  const Rat lambda = ax[a] + c * x[a];
  for (int i : supp) {
    if (ax[i] + c * x[i] != lambda) return std::nullopt;
  }
  return c;
}

namespace {

// Pull-back: (sigma* x)_i = x_{sigma(i)} on the support, 0 elsewhere. The
// permutations here fix everything outside the support, so plain indexing works.
RatVec pull_back(const RatVec& coords, const Permutation& sigma) {
  RatVec out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = coords[sigma[i]];
  return out;
}

void validate_group(const ParametricProgram& p, const VertexSet& supp,
                    const std::vector<Permutation>& group) {
  const int n = p.graph.vertex_count();
  if (group.empty()) throw std::invalid_argument("empty permutation group");
  for (const Permutation& sigma : group) {
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
    for (int i = 0; i < n; ++i) {
      const bool inside = set_contains(supp, i);
      if (!inside && sigma[i] != i) {
        throw std::invalid_argument("group element moves a vertex outside the support");
      }
      if (inside && !set_contains(supp, sigma[i])) {
        throw std::invalid_argument("group element does not preserve the support");
      }
    }
    for (int i : supp) {
      for (int j : supp) {
        if (p.graph.adjacent(i, j) != p.graph.adjacent(sigma[i], sigma[j])) {
          throw std::invalid_argument("group element is not an automorphism of the support subgraph");
        }
      }
    }
  }
  std::set<Permutation> members(group.begin(), group.end());
  for (const Permutation& sigma : group) {
    for (const Permutation& tau : group) {
      if (!members.count(compose(sigma, tau))) {
        throw std::invalid_argument("group not closed under composition");
      }
    }
  }
}

}  // namespace

SimplexPoint symmetrize(const ParametricProgram& p, const SimplexPoint& x,
                        const std::vector<Permutation>& group) {
  const KktCertificate before = classify(p, x);
  if (!before.is_generalized()) {
    throw std::invalid_argument("point is not a generalized KKT point for this c");
  }
  const VertexSet supp = x.support();
  validate_group(p, supp, group);

  RatVec sum(x.dimension(), Rat(0));
  for (const Permutation& sigma : group) {
    RatVec pulled = pull_back(x.coords(), sigma);
    for (int i = 0; i < x.dimension(); ++i) sum[i] += pulled[i];
  }
  const Rat scale(1, static_cast<unsigned long>(group.size()));
  for (Rat& v : sum) v *= scale;
  SimplexPoint averaged{std::move(sum)};

  // Postconditions hold by construction; verify exactly anyway.
  if (averaged.support() != supp) throw std::logic_error("symmetrization changed the support");
  if (!classify(p, averaged).is_generalized()) {
    throw std::logic_error("symmetrization lost stationarity");
  }
  for (const Permutation& sigma : group) {
    for (int i : supp) {
      if (averaged[sigma[i]] != averaged[i]) {
        throw std::logic_error("symmetrization is not group invariant");
      }
    }
  }
  return averaged;
}

bool coordinates_respect_automorphisms(const Graph& g, const SimplexPoint& x, int search_limit) {
  const VertexSet supp = x.support();
  for (const Permutation& sigma : subgraph_automorphisms(g, supp, search_limit)) {
    for (int i : supp) {
      if (x[sigma[i]] != x[i]) return false;
    }
  }
  return true;
}

bool orbit_invariance_check(const ParametricProgram& p, const SimplexPoint& x, int search_limit) {
  const KktCertificate cert = classify(p, x);
  if (!cert.is_kkt()) {
    throw std::invalid_argument("precondition violated: point is not a KKT point");
  }
  if (!principal_submatrix_nonsingular(p.graph, x.support(), p.c)) {
    throw std::invalid_argument(
        "precondition violated: A[S,S] + c*I is singular on the support");
  }
  return coordinates_respect_automorphisms(p.graph, x, search_limit);
}

namespace {

std::optional<Obstruction> obstruction_search(const Graph& g, const VertexSet& s,
                                              std::optional<ObstructionCase> want) {
  if (s.empty()) throw std::invalid_argument("empty vertex set");
  if (!is_sorted_unique(s) || s.front() < 0 || s.back() >= g.vertex_count()) {
    throw std::invalid_argument("vertex label out of range in " + label_string(s));
  }
  for (int i1 : s) {
    for (int i2 : s) {
      if (i2 == i1) continue;
      for (int i3 : s) {
        if (i3 == i1 || i3 == i2) continue;
        if (g.adjacent(i1, i3) || !g.adjacent(i2, i3)) continue;
        const ObstructionCase kind =
            g.adjacent(i1, i2) ? ObstructionCase::BlocksCOne : ObstructionCase::BlocksCZero;
        if (want && *want != kind) continue;
        bool rest_ok = true;
        for (int j : s) {
          if (j == i1 || j == i2 || j == i3) continue;
          if (g.adjacent(j, i1) && !g.adjacent(j, i2)) {
            rest_ok = false;
            break;
          }
        }
        if (rest_ok) return Obstruction{kind, {i1, i2, i3}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Obstruction> obstruction_applies(const Graph& g, const VertexSet& s) {
  return obstruction_search(g, s, std::nullopt);
}

std::optional<Obstruction> find_obstruction(const Graph& g, const VertexSet& s,
                                            ObstructionCase kind) {
  return obstruction_search(g, s, kind);
}

SupportSolveResult solve_on_support(const ParametricProgram& p, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("empty vertex set");
  const int n = p.graph.vertex_count();
  if (!is_sorted_unique(s) || s.front() < 0 || s.back() >= n) {
    throw std::invalid_argument("vertex label out of range in " + label_string(s));
  }
  const std::size_t m = s.size();

  RatMat sub(m, RatVec(m, Rat(0)));
  for (std::size_t a = 0; a < m; ++a) {
    sub[a][a] = p.c;
    for (std::size_t b = 0; b < m; ++b) {
      if (p.graph.adjacent(s[a], s[b])) sub[a][b] += 1;
    }
  }
  StationaryFamily fam = solve_constant_row_sum(sub);

  SupportSolveResult out;
  if (!fam.consistent) return out;
  out.lambda = fam.lambda;

  auto embed = [&](const RatVec& local) {
    RatVec full(n, Rat(0));
    for (std::size_t a = 0; a < m; ++a) full[s[a]] = local[a];
    return full;
  };

  if (fam.dimension() == 0) {
    if (fam.interior) {
      out.status = SolveStatus::Unique;
      out.points.emplace_back(embed(*fam.interior));
    }
    return out;
  }

  out.status = SolveStatus::NonUnique;
  out.family_basis = embed(fam.particular);
  for (const RatVec& dir : fam.kernel) out.family_generators.push_back(embed(dir));
  for (const RatVec& v : fam.vertices) out.family_vertices.emplace_back(embed(v));
  if (fam.interior) out.points.emplace_back(embed(*fam.interior));
  return out;
}

bool complement_duality_holds(const Graph& g, const Rat& c, const SimplexPoint& x) {
  const bool lhs = classify({complement(g), c}, x).is_generalized();
  const bool rhs = classify({g, Rat(1) - c}, x).is_generalized();
  return lhs == rhs;
}

namespace {

std::vector<double> float_payoff(const Graph& g, double c, std::span<const double> x) {
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

}  // namespace

double kkt_residual(const Graph& g, double c, std::span<const double> x, double support_eps) {
  std::vector<double> mx = float_payoff(g, c, x);
  double f = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) f += x[i] * mx[i];
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double gap = mx[i] - f;
    if (x[i] > support_eps) {
      r = std::max(r, std::fabs(gap));
    } else {
      r = std::max(r, std::max(0.0, gap));
    }
  }
  return r;
}

ApproxCertificate classify_approx(const Graph& g, double c, std::span<const double> x, double eps,
                                  double support_eps) {
  std::vector<double> mx = float_payoff(g, c, x);
  ApproxCertificate cert;
  for (std::size_t i = 0; i < x.size(); ++i) cert.lambda += x[i] * mx[i];
  cert.residual = kkt_residual(g, c, x, support_eps);

  bool stationary = true, kkt = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double gap = mx[i] - cert.lambda;
    if (x[i] > support_eps) {
      if (std::fabs(gap) > eps) stationary = false;
    } else if (gap > eps) {
      kkt = false;
    }
  }
  cert.verdict = !stationary ? ApproxVerdict::NotStationary
                             : (kkt ? ApproxVerdict::Kkt : ApproxVerdict::GeneralizedOnly);
  return cert;
}

SimplexPoint rationalize_point(std::span<const double> x, long max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("denominator bound must be positive");
  RatVec coords(x.size());
  Rat sum(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double v = x[i];
    if (v < 0) {
      if (v < -1e-12) throw std::invalid_argument("coordinate too negative to rationalize");
      v = 0.0;
    }
    coords[i] = rational_from_double(v, BigInt(max_denominator));
    sum += coords[i];
  }
  if (sum == 0) throw std::invalid_argument("cannot rationalize the zero vector onto the simplex");
  for (Rat& v : coords) v /= sum;
  return SimplexPoint(std::move(coords));
}

}  // namespace mskkt
