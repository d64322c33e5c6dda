#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>

#include "perclab/errors.hpp"
#include "perclab/expansion.hpp"
#include "perclab/random.hpp"

namespace perclab {

namespace {

Eigen::SparseMatrix<double> sparse_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(g.num_vertices() + 2 * g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    entries.emplace_back(v, v, static_cast<double>(g.degree(v)));
    for (Vertex w : g.neighbors(v)) entries.emplace_back(v, w, -1.0);
  }
  Eigen::SparseMatrix<double> L(n, n);
  L.setFromTriplets(entries.begin(), entries.end());
  return L;
}

Eigen::MatrixXd dense_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    L(v, v) = static_cast<double>(g.degree(v));
    for (Vertex w : g.neighbors(v)) L(v, w) = -1.0;
  }
  return L;
}

void deflate_constant(Eigen::VectorXd& x) { x.array() -= x.mean(); }

// Explicitly restarted Lanczos on the Laplacian restricted to the complement
// of the constant vector, with full reorthogonalization inside each cycle.
FiedlerPair lanczos_fiedler(const Graph& g, const SpectralOptions& opts) {
  const auto L = sparse_laplacian(g);
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  const double scale = 2.0 * static_cast<double>(std::max<std::size_t>(1, g.max_degree()));
  const auto m = static_cast<Eigen::Index>(std::min<std::size_t>(opts.krylov_dim, g.num_vertices() - 1));

  SplitMix64 rng(0x5EED5EEDULL);
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = rng.uniform() - 0.5;
  deflate_constant(x);
  x.normalize();

  FiedlerPair out;
  Eigen::MatrixXd V(n, m);
  for (std::size_t restart = 0; restart < opts.max_restarts; ++restart) {
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m), beta = Eigen::VectorXd::Zero(m);
    Eigen::Index k = 0;
    Eigen::VectorXd v = x;
    for (; k < m; ++k) {
      V.col(k) = v;
      Eigen::VectorXd w = L * v;
      alpha[k] = v.dot(w);
      for (int pass = 0; pass < 2; ++pass) {
        w -= V.leftCols(k + 1) * (V.leftCols(k + 1).transpose() * w);
        deflate_constant(w);
      }
      beta[k] = w.norm();
      if (beta[k] < 1e-12 * scale) {
        ++k;
        break;
      }
      v = w / beta[k];
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(T);
    x = V.leftCols(k) * tri.eigenvectors().col(0);
    deflate_constant(x);
    x.normalize();
    out.lambda2 = x.dot(L * x);
    out.residual = (L * x - out.lambda2 * x).norm();
    out.iterations = restart + 1;
    if (out.residual <= opts.tolerance * scale) {
      out.converged = true;
      out.vector = x;
      return out;
    }
  }
  out.converged = false;
  out.vector = x;
  return out;
}

}  // namespace

FiedlerPair fiedler_pair(const Graph& g, const SpectralOptions& opts) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw ValidationError("fiedler_pair needs at least 2 vertices");
  if (n > opts.dense_limit && n > opts.krylov_dim + 1) return lanczos_fiedler(g, opts);

  const Eigen::MatrixXd L = dense_laplacian(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(L);
  if (eig.info() != Eigen::Success) throw CapExceeded("dense Laplacian eigensolve failed to converge");
  FiedlerPair out;
  out.lambda2 = eig.eigenvalues()[1];
  out.vector = eig.eigenvectors().col(1);
  out.residual = (L * out.vector - out.lambda2 * out.vector).norm();
  out.iterations = 1;
  return out;
}

ExpansionReport cheeger_spectral_bounds(const Graph& g, const SpectralOptions& opts) {
  ExpansionReport report;
  report.method = ExpansionMethod::spectral;
  if (!is_connected(g)) {
    report.lambda2 = 0.0;
    return report;
  }
  const FiedlerPair fp = fiedler_pair(g, opts);
  const double delta = static_cast<double>(g.max_degree());
  // Eigenvalue perturbation is bounded by the residual norm; the floor term
  // covers rounding in the dense solver.
  const double slack = std::max(fp.residual, 1e-10 * std::max(1.0, 2.0 * delta));
  report.lambda2 = fp.lambda2;
  report.residual = fp.residual;
  report.converged = fp.converged;
  report.lower = std::max(0.0, fp.lambda2 - slack) / 2.0;
  report.upper = std::sqrt(2.0 * delta * std::max(0.0, fp.lambda2 + slack));
  return report;
}

}  // namespace perclab
