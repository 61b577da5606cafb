#include "fanq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "fanq/error.hpp"

namespace fanq {

SymMatrix::SymMatrix(int order) : n_(order) {
  require(order >= 0, "matrix order must be non-negative");
  a_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == n, "matrix rows must be square");
    for (int j = 0; j < n; ++j) {
      const double x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      require(std::isfinite(x), "matrix entries must be finite");
      require(x == rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
              "matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      m.a_[m.index(i, j)] = x;
    }
  }
  return m;
}

void SymMatrix::set(int i, int j, double value) {
  require(i >= 0 && j >= 0 && i < n_ && j < n_, "matrix index out of range");
  require(std::isfinite(value), "matrix entries must be finite");
  a_[index(i, j)] = value;
  a_[index(j, i)] = value;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_squared() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return s;
}

double SymMatrix::row_sum(int i) const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

bool SymMatrix::is_integer_valued() const {
  return std::all_of(a_.begin(), a_.end(), [](double x) { return x == std::nearbyint(x); });
}

bool SymMatrix::is_nonnegative() const {
  return std::all_of(a_.begin(), a_.end(), [](double x) { return x >= 0.0; });
}

SpectrumResult spectrum(const SymMatrix& m, const Tolerances& tol) {
  const int n = m.order();
  std::vector<double> a = m.data();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  auto offdiag = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += at(p, q) * at(p, q);
    return std::sqrt(2.0 * s);
  };

  SpectrumResult out;
  const double threshold = tol.offdiag_factor * std::max(n, 1);
  double residual = offdiag();
  int sweeps = 0;
  while (residual >= threshold) {
    if (sweeps == tol.max_sweeps)
      fail(ErrorCode::internal, "Jacobi eigensolver did not converge in " + std::to_string(tol.max_sweeps) + " sweeps");
    ++sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (std::isinf(theta * theta)) t = 0.5 / std::abs(theta);
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = c * arq + s * arp;
        }
      }
    }
    residual = offdiag();
  }

  out.eigenvalues.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  out.offdiag_residual = residual;
  out.sweeps = sweeps;
  return out;
}

SymMatrix signless_laplacian(const Graph& g) {
  SymMatrix q(g.order());
  for (int v = 0; v < g.order(); ++v) q.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) q.set(u, v, 1.0);
  return q;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

double q1(const Graph& g, const Tolerances& tol) {
  if (g.order() == 0) return 0.0;
  return spectrum(signless_laplacian(g), tol).eigenvalues.front();
}

double q1_split_closed_form(int n, int k) {
  require(k >= 1 && n > k, "closed form for S_{n,k} needs n > k >= 1");
  const double s = n + 2.0 * k - 2.0;
  const double radicand = s * s - 8.0 * k * (k - 1.0);
  return (s + std::sqrt(radicand)) / 2.0;
}

double q1_split_lower_bound(int n, int k) {
  require(k >= 1 && n > k, "lower bound for q1(S_{n,k}) needs n > k >= 1");
  require(n >= 2 * k * k - 4 * k + 3, "lower bound for q1(S_{n,k}) needs n >= 2k^2 - 4k + 3");
  return n + 2.0 * k - 2.0 - 2.0 * k * (k - 1.0) / (n + 2.0 * k - 3.0);
}

MerrisBound merris_bound(const Graph& g) {
  require(g.order() >= 1, "Merris bound needs a non-empty graph");
  // Compare (d^2 + S) / d exactly by cross-multiplying.
  std::int64_t best_num = 0;
  std::int64_t best_den = 1;
  int best_vertex = -1;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    if (d == 0) fail(ErrorCode::precondition, "Merris bound undefined: vertex " + std::to_string(v) + " is isolated");
    std::int64_t s = 0;
    for (int w : members(g.neighbors(v))) s += g.degree(w);
    const std::int64_t num = d * d + s;
    if (best_vertex < 0 || num * best_den > best_num * d) {
      best_num = num;
      best_den = d;
      best_vertex = v;
    }
  }
  return {static_cast<double>(best_num) / static_cast<double>(best_den), best_vertex};
}

void VertexPartition::validate(int order) const {
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  int covered = 0;
  for (const auto& block : blocks) {
    require(!block.empty(), "partition has an empty block");
    for (int v : block) {
      require(v >= 0 && v < order, "partition vertex " + std::to_string(v) + " out of range");
      require(!seen[static_cast<std::size_t>(v)], "vertex " + std::to_string(v) + " appears in two blocks");
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
    }
  }
  require(covered == order, "partition does not cover every vertex");
}

QuotientMatrix quotient(const SymMatrix& m, const VertexPartition& p, const Tolerances& tol) {
  p.validate(m.order());
  const int k = static_cast<int>(p.blocks.size());
  const bool exact = m.is_integer_valued();
  QuotientMatrix out;
  out.order = k;
  out.b.assign(static_cast<std::size_t>(k * k), 0.0);
  out.equitable = true;
  for (int i = 0; i < k; ++i) {
    const auto& rows = p.blocks[static_cast<std::size_t>(i)];
    out.block_sizes.push_back(static_cast<int>(rows.size()));
    for (int j = 0; j < k; ++j) {
      const auto& cols = p.blocks[static_cast<std::size_t>(j)];
      double total = 0.0;
      double first = 0.0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        double s = 0.0;
        for (int c : cols) s += m(rows[r], c);
        if (r == 0) first = s;
        const bool same = exact ? s == first : std::abs(s - first) <= tol.equitable_slack * std::max(1.0, std::abs(first));
        if (!same) out.equitable = false;
        total += s;
      }
      out.b[static_cast<std::size_t>(i * k + j)] = total / static_cast<double>(rows.size());
    }
  }
  return out;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const Tolerances& tol) {
  SymMatrix s(q.order);
  for (int i = 0; i < q.order; ++i) {
    for (int j = i; j < q.order; ++j) {
      // sqrt(b_ij b_ji) equals sqrt(n_i / n_j) b_ij when n_i b_ij = n_j b_ji.
      const double ni = q.block_sizes[static_cast<std::size_t>(i)];
      const double nj = q.block_sizes[static_cast<std::size_t>(j)];
      s.set(i, j, std::sqrt(ni / nj) * q(i, j));
    }
  }
  return spectrum(s, tol).eigenvalues;
}

bool perron_dominance(const SymMatrix& m1, const SymMatrix& m2, const Tolerances& tol) {
  require(m1.order() == m2.order(), "Perron dominance needs matrices of equal order");
  auto where = [](const char* what, int i, int j, double x) {
    std::ostringstream os;
    os << what << " has negative entry " << x << " at (" << i << ", " << j << ")";
    return os.str();
  };
  for (int i = 0; i < m1.order(); ++i) {
    for (int j = 0; j < m1.order(); ++j) {
      if (m1(i, j) < 0.0) fail(ErrorCode::precondition, where("M1", i, j, m1(i, j)));
      if (m2(i, j) < 0.0) fail(ErrorCode::precondition, where("M2", i, j, m2(i, j)));
      if (m1(i, j) - m2(i, j) < 0.0) fail(ErrorCode::precondition, where("M1 - M2", i, j, m1(i, j) - m2(i, j)));
    }
  }
  if (m1.order() == 0) return true;
  const double l1 = spectrum(m1, tol).eigenvalues.front();
  const double l2 = spectrum(m2, tol).eigenvalues.front();
  return l1 >= l2 - tol.eigen;
}

DegreeSumResult degree_sum_identity(const Graph& g, int v) {
  require(v >= 0 && v < g.order(), "vertex out of range");
  const VertexSet nb = g.neighbors(v);
  if (nb == 0) fail(ErrorCode::precondition, "vertex " + std::to_string(v) + " is isolated");
  DegreeSumResult out;
  for (int w : members(nb)) out.lhs += g.degree(w);
  out.rhs = g.degree(v) + 2 * std::int64_t{edges_within(g, nb)} + cut_edges(g, nb, second_neighborhood(g, v));
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace fanq
