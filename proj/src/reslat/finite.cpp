#include "reslat/finite.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <map>

#include "reslat/errors.hpp"

namespace reslat {

namespace {
constexpr std::size_t kDenseLimit = 4096;
}

FiniteNetwork::FiniteNetwork(std::vector<Site> nodes,
                             std::vector<std::array<std::int64_t, 2>> edges,
                             std::vector<double> conductances)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      conductances_(std::move(conductances)) {
  if (edges_.size() != conductances_.size())
    throw DomainError("finite network: edge/conductance size mismatch");
  for (const auto& e : edges_) {
    if (e[0] < 0 || e[1] < 0 ||
        e[0] >= static_cast<std::int64_t>(nodes_.size()) ||
        e[1] >= static_cast<std::int64_t>(nodes_.size()) || e[0] == e[1])
      throw DomainError("finite network: invalid edge endpoints");
  }
  for (double c : conductances_)
    if (!(c >= 0.0)) throw DomainError("finite network: conductance < 0");

  // Graph-theoretic connectivity; numeric singularity is never the test.
  component_.assign(nodes_.size(), -1);
  std::vector<std::vector<int>> adj(nodes_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (conductances_[k] <= 0.0) continue;
    adj[static_cast<std::size_t>(edges_[k][0])].push_back(
        static_cast<int>(edges_[k][1]));
    adj[static_cast<std::size_t>(edges_[k][1])].push_back(
        static_cast<int>(edges_[k][0]));
  }
  int n_comp = 0;
  for (std::size_t start = 0; start < nodes_.size(); ++start) {
    if (component_[start] >= 0) continue;
    std::vector<int> stack = {static_cast<int>(start)};
    component_[start] = n_comp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (component_[static_cast<std::size_t>(w)] < 0) {
          component_[static_cast<std::size_t>(w)] = n_comp;
          stack.push_back(w);
        }
      }
    }
    ++n_comp;
  }
  n_components_ = static_cast<std::size_t>(n_comp);
}

int FiniteNetwork::index_of(Site s) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == s) return static_cast<int>(i);
  return -1;
}

void FiniteNetwork::require_connected() const {
  if (!connected())
    throw DisconnectedNetworkError(
        "finite network has " + std::to_string(n_components_) +
        " components; the Laplacian kernel is degenerate");
}

Eigen::MatrixXd FiniteNetwork::modified_laplacian() const {
  const auto m = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd lp = Eigen::MatrixXd::Ones(m, m);  // f@f part
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto a = static_cast<Eigen::Index>(edges_[k][0]);
    const auto b = static_cast<Eigen::Index>(edges_[k][1]);
    const double c = conductances_[k];
    lp(a, b) += c;
    lp(b, a) += c;
    lp(a, a) -= c;
    lp(b, b) -= c;
  }
  return lp;
}

const Eigen::MatrixXd& FiniteNetwork::green() const {
  require_connected();
  if (green_) return *green_;
  if (size() > kDenseLimit)
    throw DomainError("dense Green matrix requested for " +
                      std::to_string(size()) + " nodes; use resistance()");
  const Eigen::MatrixXd lp = modified_laplacian();
  green_ = std::make_unique<Eigen::MatrixXd>(
      -lp.partialPivLu().solve(Eigen::MatrixXd::Identity(lp.rows(), lp.cols())));
  return *green_;
}

Eigen::VectorXd FiniteNetwork::solve_deflated(const Eigen::VectorXd& b) const {
  // Conjugate gradient on the SPD operator A = -L + f@f, which agrees with
  // -(L')^{-1} on vectors orthogonal to f.  Jacobi preconditioner.
  const auto m = static_cast<Eigen::Index>(size());
  Eigen::SparseMatrix<double> neg_l(m, m);
  {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(edges_.size() * 4);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto a = static_cast<Eigen::Index>(edges_[k][0]);
      const auto bb = static_cast<Eigen::Index>(edges_[k][1]);
      const double c = conductances_[k];
      trips.emplace_back(a, bb, -c);
      trips.emplace_back(bb, a, -c);
      trips.emplace_back(a, a, c);
      trips.emplace_back(bb, bb, c);
    }
    neg_l.setFromTriplets(trips.begin(), trips.end());
  }
  Eigen::VectorXd diag = neg_l.diagonal().array() + 1.0;
  const auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return neg_l * v + Eigen::VectorXd::Constant(m, v.sum());
  };

  Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd r = b;
  Eigen::VectorXd z = r.cwiseQuotient(diag);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);
  const double tol = 1e-12 * b.norm();
  for (int it = 0; it < 100000; ++it) {
    if (r.norm() <= tol) return x;
    const Eigen::VectorXd ap = apply(p);
    const double alpha = rz / p.dot(ap);
    x += alpha * p;
    r -= alpha * ap;
    z = r.cwiseQuotient(diag);
    const double rz_new = r.dot(z);
    p = z + (rz_new / rz) * p;
    rz = rz_new;
  }
  throw ConvergenceFailure("conjugate gradient failed to converge");
}

double FiniteNetwork::resistance(int i, int j) const {
  require_connected();
  if (i < 0 || j < 0 || i >= static_cast<int>(size()) ||
      j >= static_cast<int>(size()))
    throw DomainError("finite resistance: node index out of range");
  if (i == j) return 0.0;
  if (size() <= kDenseLimit) {
    const Eigen::MatrixXd& g = green();
    return g(i, i) + g(j, j) - 2.0 * g(i, j);
  }
  const auto m = static_cast<Eigen::Index>(size());
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  b(i) = 1.0;
  b(j) = -1.0;
  return b.dot(solve_deflated(b));
}

Eigen::VectorXd FiniteNetwork::potentials(int i, int j, double I0) const {
  require_connected();
  const auto m = static_cast<Eigen::Index>(size());
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  b(i) = I0;
  b(j) = -I0;
  if (size() <= kDenseLimit) return green() * b;
  return solve_deflated(b);
}

double finite_resistance(const FiniteNetwork& net, int i, int j) {
  return net.resistance(i, j);
}

FiniteNetwork truncate_lattice(LatticeKind kind, const EditSet& edits,
                               std::int64_t half_width) {
  if (half_width < 1) throw DomainError("half_width must be >= 1");
  const IndexBox box{-half_width, -half_width, half_width, half_width};
  for (const BondEdit& e : edits.edits())
    if (!box.contains(e.bond.start) || !box.contains(e.bond.end))
      throw WindowTooSmallError("edit endpoints spill outside the window");

  const std::int64_t w = 2 * half_width + 1;
  std::vector<Site> nodes;
  nodes.reserve(static_cast<std::size_t>(w * w));
  for (std::int64_t n = -half_width; n <= half_width; ++n)
    for (std::int64_t m = -half_width; m <= half_width; ++m)
      nodes.push_back({m, n});
  const auto index = [&](Site s) {
    return (s.n + half_width) * w + (s.m + half_width);
  };

  // Forward offsets cover every bond once.
  static const std::vector<Site> square_fwd = {{1, 0}, {0, 1}};
  static const std::vector<Site> tri_fwd = {{1, 0}, {0, 1}, {1, -1}};
  const auto& fwd = kind == LatticeKind::Square ? square_fwd : tri_fwd;

  std::vector<std::array<std::int64_t, 2>> edges;
  std::vector<double> conductances;
  for (const Site& s : nodes) {
    for (const Site& d : fwd) {
      const Site t{s.m + d.m, s.n + d.n};
      if (!box.contains(t)) continue;
      double beta = 1.0;
      if (const BondEdit* e = edits.find(s, t)) beta = e->beta_new;
      if (beta <= 0.0) continue;
      edges.push_back({index(s), index(t)});
      conductances.push_back(beta);
    }
  }
  return FiniteNetwork(std::move(nodes), std::move(edges),
                       std::move(conductances));
}

}  // namespace reslat
