#pragma once

#include <cstdint>
#include <vector>

#include "fanq/config.hpp"
#include "fanq/graph.hpp"

namespace fanq {

/// Dense real symmetric matrix, row-major. Symmetry and finiteness are
/// checked on construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[index(i, j)]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, double value);

  double trace() const;
  double frobenius_squared() const;
  double row_sum(int i) const;
  bool is_integer_valued() const;
  bool is_nonnegative() const;
  const std::vector<double>& data() const { return a_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

  int n_ = 0;
  std::vector<double> a_;
};

struct SpectrumResult {
  /// Non-increasing.
  std::vector<double> eigenvalues;
  /// Off-diagonal Frobenius norm when the sweeps stopped.
  double offdiag_residual = 0.0;
  int sweeps = 0;
};

/// Cyclic Jacobi. Deterministic; throws ErrorCode::internal if the sweep
/// budget runs out.
SpectrumResult spectrum(const SymMatrix& m, const Tolerances& tol = {});

/// Q(G) = D(G) + A(G).
SymMatrix signless_laplacian(const Graph& g);
SymMatrix adjacency_matrix(const Graph& g);

/// Largest eigenvalue of Q(G), the signless Laplacian spectral radius. Other
/// texts write it rho_Q(G); this library only uses q1.
double q1(const Graph& g, const Tolerances& tol = {});

/// (n + 2k - 2 + sqrt((n + 2k - 2)^2 - 8k(k - 1))) / 2, the q1 of S_{n,k}.
double q1_split_closed_form(int n, int k);

/// n + 2k - 2 - 2k(k - 1) / (n + 2k - 3); needs n >= 2k^2 - 4k + 3.
double q1_split_lower_bound(int n, int k);

struct MerrisBound {
  double value = 0.0;
  /// Smallest vertex attaining the maximum.
  int vertex = -1;
};

/// max over v of d_v + (sum of neighbour degrees) / d_v. Rejects isolated vertices.
MerrisBound merris_bound(const Graph& g);

struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  /// Throws unless the blocks are non-empty, disjoint and cover 0..order-1.
  void validate(int order) const;
};

/// Block-averaged row sums. b is generally not symmetric.
struct QuotientMatrix {
  int order = 0;
  /// Row-major order x order.
  std::vector<double> b;
  std::vector<int> block_sizes;
  bool equitable = false;

  double operator()(int i, int j) const { return b[static_cast<std::size_t>(i * order + j)]; }
};

QuotientMatrix quotient(const SymMatrix& m, const VertexPartition& p, const Tolerances& tol = {});

/// Eigenvalues of the quotient, non-increasing. For a symmetric M,
/// |N_i| b_ij = |N_j| b_ji always holds, so the quotient is similar to the
/// symmetric matrix sqrt(|N_i| / |N_j|) b_ij and the Jacobi solver applies.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const Tolerances& tol = {});

/// Perron monotonicity: for nonnegative symmetric m1, m2 with m1 - m2
/// nonnegative, lambda1(m1) >= lambda1(m2).
///
/// Throws ErrorCode::precondition naming the offending entry when an input is
/// not nonnegative or the difference has a negative entry. Returns whether
/// lambda1(m1) >= lambda1(m2) - tol.eigen.
bool perron_dominance(const SymMatrix& m1, const SymMatrix& m2, const Tolerances& tol = {});

struct DegreeSumResult {
  std::int64_t lhs = 0;  // sum of degrees over N(v)
  std::int64_t rhs = 0;  // d_v + 2 e(G[N(v)]) + e(N(v), N_2(v))
  bool equal = false;
};

/// Degree-sum decomposition around v, in integer arithmetic. Rejects isolated v.
DegreeSumResult degree_sum_identity(const Graph& g, int v);

}  // namespace fanq
