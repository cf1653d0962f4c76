#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "symmetry/symmetry.hpp"

namespace ppsym {

std::optional<Rational> round_rational(double x, std::int64_t max_den, double tol) {
  for (std::int64_t den = 1; den <= max_den; ++den) {
    double n = std::round(x * static_cast<double>(den));
    if (std::fabs(n) > 9e15) return std::nullopt;
    if (std::fabs(x - n / static_cast<double>(den)) <= tol) return Rational(static_cast<std::int64_t>(n), den);
  }
  return std::nullopt;
}

double StructureTable::constant(int I, int J, int K) const {
  if (I == J) return 0.0;
  int sign = I < J ? 1 : -1;
  int a = std::min(I, J), b = std::max(I, J);
  for (const auto& p : pairs)
    if (p.i == a && p.j == b) return sign * p.coefficients[static_cast<std::size_t>(K)];
  return 0.0;
}

double StructureTable::jacobi_defect() const {
  const int n = static_cast<int>(dim);
  double worst = 0.0;
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J)
      for (int K = 0; K < n; ++K)
        for (int L = 0; L < n; ++L) {
          double s = 0.0;
          for (int M = 0; M < n; ++M)
            s += constant(I, J, M) * constant(M, K, L) + constant(J, K, M) * constant(M, I, L) +
                 constant(K, I, M) * constant(M, J, L);
          worst = std::max(worst, std::fabs(s));
        }
  return worst;
}

bool StructureTable::all_in_span() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairFit& p) { return p.in_span; });
}

StructureTable fit_structure_constants(const std::vector<VectorField>& basis, const Sampler& sampler,
                                       const Tolerance& tol, const std::vector<RewriteRule>& rules,
                                       const Environment& base) {
  StructureTable table;
  table.dim = basis.size();
  if (basis.empty()) return table;
  Sampler smp = sampler.count() < 8 ? sampler.with_count(8) : sampler;
  const auto pts = smp.points();
  std::vector<Environment> envs;
  envs.reserve(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) envs.push_back(smp.environment(base, k, pts[k]));

  const Eigen::Index rows = static_cast<Eigen::Index>(pts.size() * kDim);
  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size());
  auto sample_field = [&](const VectorField& X) {
    Eigen::VectorXd out(rows);
    for (std::size_t k = 0; k < pts.size(); ++k)
      for (int i = 0; i < kDim; ++i) {
        try {
          out(static_cast<Eigen::Index>(k * kDim + static_cast<std::size_t>(i))) = evaluate(X[i], envs[k]);
        } catch (const EvalError& err) {
          throw NumericFailure(err.what(), pts[k]);
        }
      }
    return out;
  };

  Eigen::MatrixXd M(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) M.col(c) = sample_field(basis[static_cast<std::size_t>(c)]);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  qr.setThreshold(1e-10);
  table.rank = static_cast<std::size_t>(qr.rank());
  if (table.rank < basis.size()) throw FitError("basis fields are linearly dependent on the sample");

  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) {
      PairFit fit;
      fit.i = i;
      fit.j = j;
      VectorField C = commutator(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)], rules);
      Eigen::VectorXd b = sample_field(C);
      Eigen::VectorXd x = qr.solve(b);
      for (Eigen::Index k = 0; k < cols; ++k) {
        auto q = round_rational(x(k), 64, 1e-8 * std::max(1.0, std::fabs(x(k))));
        fit.exact.push_back(q);
        fit.coefficients.push_back(q ? q->to_double() : x(k));
      }
      double worst = 0.0;
      for (Eigen::Index r = 0; r < rows; ++r) {
        double acc = 0.0, scale = std::fabs(b(r));
        for (Eigen::Index k = 0; k < cols; ++k) {
          double t = fit.coefficients[static_cast<std::size_t>(k)] * M(r, k);
          acc += t;
          scale = std::max(scale, std::fabs(t));
        }
        worst = std::max(worst, tol.scaled(b(r) - acc, scale));
      }
      fit.residual = worst;
      fit.in_span = worst <= tol.rel;
      table.pairs.push_back(std::move(fit));
    }
  return table;
}

}  // namespace ppsym
