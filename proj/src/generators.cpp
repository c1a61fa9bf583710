#include "facet/generators.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "facet/errors.hpp"

namespace facet {

namespace {

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

StandardLP gen_klee_minty(std::size_t dim, double eps) {
  if (dim < 2 || dim > 12) throw RangeError("klee-minty: dim must be in [2, 12]");
  if (!(eps > 0.0 && eps < 0.5)) throw RangeError("klee-minty: eps must be in (0, 1/2)");

  const std::size_t m = 2 * dim;
  StandardLP p;
  p.name = "klee-minty-" + std::to_string(dim);
  p.objective.assign(dim, 0.0);
  p.objective[dim - 1] = -1.0;
  p.constraints = DenseMatrix(m, dim);
  p.rhs.assign(m, 0.0);
  p.constraints(0, 0) = 1.0;
  p.constraints(1, 0) = -1.0;
  p.rhs[1] = -1.0;
  for (std::size_t j = 1; j < dim; ++j) {
    const std::size_t r = 2 * j;
    p.constraints(r, j) = 1.0;
    p.constraints(r, j - 1) = -eps;
    p.constraints(r + 1, j) = -1.0;
    p.constraints(r + 1, j - 1) = -eps;
    p.rhs[r + 1] = -1.0;
  }
  p.lower.assign(dim, 0.0);
  p.upper.assign(dim, 1.0);
  p.metadata = {{"family", "klee-minty"},
                {"dim", std::to_string(dim)},
                {"eps", format_real(eps)}};
  return p;
}

StandardLP gen_random_feasible(std::size_t d, std::size_t m, std::uint64_t seed) {
  if (d == 0) throw RangeError("random: d must be >= 1");
  Uniform rng(seed);

  Vector z(d);
  for (auto& v : z) v = rng.unit();

  StandardLP p;
  p.name = "random-d" + std::to_string(d) + "-m" + std::to_string(m) + "-s" +
           std::to_string(seed);
  p.constraints = DenseMatrix(m, d);
  p.rhs.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) p.constraints(i, j) = rng.in(-1.0, 1.0);
    const double slack = 1.0 - rng.unit();  // (0, 1]
    p.rhs[i] = dot(p.constraints.row(i), z) - slack;
  }
  p.objective.resize(d);
  for (auto& v : p.objective) v = rng.in(-1.0, 1.0);
  p.lower.assign(d, -1.0);
  p.upper.assign(d, 2.0);
  p.metadata = {{"family", "random"},
                {"generator", kGeneratorName},
                {"seed", std::to_string(seed)}};
  return p;
}

StandardLP gen_infeasible(std::size_t d, std::size_t m, std::uint64_t seed) {
  if (m < 2) throw RangeError("infeasible: m must be >= 2");
  StandardLP p = gen_random_feasible(d, m, seed);

  // Continue a separate stream for the conflicting direction.
  Uniform rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Vector a(d);
  double norm = 0.0;
  while (norm < 1e-3) {
    for (auto& v : a) v = rng.in(-1.0, 1.0);
    norm = std::sqrt(dot(a, a));
  }
  for (std::size_t j = 0; j < d; ++j) {
    p.constraints(0, j) = a[j] / norm;
    p.constraints(1, j) = -a[j] / norm;
  }
  p.rhs[0] = 1.0;
  p.rhs[1] = 0.0;
  p.name = "infeasible-d" + std::to_string(d) + "-m" + std::to_string(m) + "-s" +
           std::to_string(seed);
  p.metadata["family"] = "infeasible";
  return p;
}

}  // namespace facet
