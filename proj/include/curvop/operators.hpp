#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

#include "curvop/tensor.hpp"

namespace curvop {

/// Orthonormal basis of trace-free symmetric n x n matrices under <A,B> = tr(A^T B).
///
/// Ordering: the off-diagonal elements (E_ij + E_ji)/sqrt(2) for i < j in
/// lexicographic order, then the diagonal ladder
/// diag(1,...,1,-m,0,...,0)/sqrt(m(m+1)) for m = 1..n-1.
template <typename Scalar>
struct TraceFreeSymBasis {
  int n = 0;
  std::vector<MatrixX<Scalar>> elements;
  /// Column alpha is element alpha flattened row-major (length n^2).
  MatrixX<Scalar> columns;

  int size() const { return static_cast<int>(elements.size()); }

  /// Coordinates <h, S^alpha> of a symmetric matrix.
  VectorX<Scalar> coordinates(const SymTwoTensor<Scalar>& h) const {
    const Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> flat(h.data(), h.size());
    // h is column-major; symmetric input makes the flattening order irrelevant.
    return columns.transpose() * flat;
  }

  SymTwoTensor<Scalar> compose(const VectorX<Scalar>& coords) const {
    SymTwoTensor<Scalar> out = SymTwoTensor<Scalar>::Zero(n, n);
    for (int a = 0; a < size(); ++a) out += coords(a) * elements[a];
    return out;
  }
};

inline int trace_free_dim(int n) { return n * (n + 1) / 2 - 1; }

template <typename Scalar>
TraceFreeSymBasis<Scalar> build_basis(int n) {
  using std::sqrt;
  if (n < 2) throw PreconditionError("trace-free basis needs n >= 2");
  TraceFreeSymBasis<Scalar> basis;
  basis.n = n;
  const Scalar inv_sqrt2 = Scalar(1) / sqrt(Scalar(2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatrixX<Scalar> e = MatrixX<Scalar>::Zero(n, n);
      e(i, j) = e(j, i) = inv_sqrt2;
      basis.elements.push_back(std::move(e));
    }
  for (int m = 1; m < n; ++m) {
    MatrixX<Scalar> d = MatrixX<Scalar>::Zero(n, n);
    const Scalar norm = sqrt(Scalar(m) * Scalar(m + 1));
    for (int i = 0; i < m; ++i) d(i, i) = Scalar(1) / norm;
    d(m, m) = Scalar(-m) / norm;
    basis.elements.push_back(std::move(d));
  }
  basis.columns.resize(n * n, basis.size());
  for (int a = 0; a < basis.size(); ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis.columns(i * n + j, a) = basis.elements[a](i, j);
  return basis;
}

/// The n^2 x n^2 matrix K with K_(ij),(kl) = R_kijl, so that
/// <Rbar(A), B> = vec(A)^T K vec(B) for symmetric A, B.
template <typename Scalar>
MatrixX<Scalar> second_kind_kernel(const CurvatureTensor<Scalar>& t) {
  const int n = t.dim();
  MatrixX<Scalar> k(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) k(i * n + j, a * n + b) = t(a, i, j, b);
  return k;
}

template <typename Scalar>
struct SecondKindMatrix {
  int n = 0;
  MatrixX<Scalar> matrix;
  TraceFreeSymBasis<Scalar> basis;
};

/// Matrix of the curvature operator of the second kind,
/// M_ab = sum R_kijl S^a_ij S^b_kl, in the canonical trace-free basis.
template <typename Scalar>
SecondKindMatrix<Scalar> second_kind(const CurvatureTensor<Scalar>& t) {
  SecondKindMatrix<Scalar> m;
  m.n = t.dim();
  m.basis = build_basis<Scalar>(m.n);
  m.matrix = m.basis.columns.transpose() * second_kind_kernel(t) * m.basis.columns;
  return m;
}

/// Matrix of the curvature operator of the first kind in the orthonormal
/// basis {e_i ^ e_j}_{i<j}: entry ((ij),(kl)) = R_ijkl.
template <typename Scalar>
MatrixX<Scalar> first_kind(const CurvatureTensor<Scalar>& t) {
  const int n = t.dim();
  const int dim = n * (n - 1) / 2;
  MatrixX<Scalar> m(dim, dim);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++row) {
      int col = 0;
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l, ++col) m(row, col) = t(i, j, k, l);
    }
  return m;
}

/// Nondecreasing eigenvalues and their mean.
template <typename Scalar>
struct Spectrum {
  VectorX<Scalar> values;
  Scalar mean = 0;

  Spectrum() = default;
  explicit Spectrum(VectorX<Scalar> sorted) : values(std::move(sorted)) {
    mean = values.size() ? values.mean() : Scalar(0);
  }
  int size() const { return static_cast<int>(values.size()); }
  Scalar operator[](int i) const { return values(i); }
};

template <typename Scalar>
struct SpectralDecomposition {
  Spectrum<Scalar> spectrum;
  /// Column alpha holds the basis coordinates of the eigentensor for values(alpha).
  MatrixX<Scalar> coordinates;
  /// Orthonormal eigentensors S^alpha as n x n matrices.
  std::vector<MatrixX<Scalar>> eigentensors;
};

template <typename Scalar>
SpectralDecomposition<Scalar> eigendecompose(const SecondKindMatrix<Scalar>& m) {
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver(m.matrix);
  if (solver.info() != Eigen::Success)
    throw NumericalError("symmetric eigensolver did not converge");
  SpectralDecomposition<Scalar> out;
  out.spectrum = Spectrum<Scalar>(solver.eigenvalues());
  out.coordinates = solver.eigenvectors();
  out.eigentensors.reserve(m.basis.size());
  for (int a = 0; a < m.basis.size(); ++a)
    out.eigentensors.push_back(m.basis.compose(out.coordinates.col(a)));
  return out;
}

template <typename Scalar>
Spectrum<Scalar> spectrum(const MatrixX<Scalar>& symmetric) {
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("symmetric eigensolver did not converge");
  return Spectrum<Scalar>(solver.eigenvalues());
}

template <typename Scalar>
Spectrum<Scalar> spectrum(const SecondKindMatrix<Scalar>& m) {
  return spectrum(m.matrix);
}

template <typename Scalar>
struct KnnResult {
  bool holds = false;
  Scalar sum = 0;
};

/// Fractional partial sum l_1 + ... + l_[k] + (k - [k]) l_{[k]+1} and
/// whether it is >= -tol.
template <typename Scalar>
KnnResult<Scalar> k_nonnegative(const Spectrum<Scalar>& sp, double k, Scalar tol = Scalar(0)) {
  const int n_values = sp.size();
  if (!(k >= 1.0) || k > n_values)
    throw PreconditionError("k must satisfy 1 <= k <= N");
  const int whole = static_cast<int>(std::floor(k));
  const Scalar frac = Scalar(k - whole);
  KnnResult<Scalar> r;
  for (int i = 0; i < whole; ++i) r.sum += sp[i];
  if (whole < n_values) r.sum += frac * sp[whole];
  r.holds = r.sum >= -tol;
  return r;
}

template <typename Scalar>
struct AlphaBeta {
  Scalar alpha = 0;
  Scalar beta = 0;
};

/// alpha = R_sjti U_sjkl U_tikl, beta = R_sikt U_sjkl U_ijtl.
template <typename Scalar>
AlphaBeta<Scalar> alpha_beta(const CurvatureTensor<Scalar>& r, const CurvatureTensor<Scalar>& u) {
  const int n = r.dim();
  if (u.dim() != n) throw StructuralError("alpha_beta: dimension mismatch");
  AlphaBeta<Scalar> out;
  // X_(sj),(ti) = sum_kl U_sjkl U_tikl
  const typename CurvatureTensor<Scalar>::MatrixType x =
      u.pairMatrix() * u.pairMatrix().transpose();
  out.alpha = r.pairMatrix().cwiseProduct(x).sum();
  // Y_(sk),(it) = sum_jl U_sjkl U_ijtl, built from the reordered copy V_(sk),(jl) = U_sjkl.
  // U_ijtl has the same (first,third),(second,fourth) layout, so Y = V V^T.
  MatrixX<Scalar> v(n * n, n * n);
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) v(s * n + k, j * n + l) = u(s, j, k, l);
  const MatrixX<Scalar> y = v * v.transpose();
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) out.beta += r(s, i, k, t) * y(s * n + k, i * n + t);
  return out;
}

/// R_st U_sjkl U_tjkl with R_st the Ricci tensor of r.
template <typename Scalar>
Scalar ricci_contraction(const CurvatureTensor<Scalar>& r, const CurvatureTensor<Scalar>& u) {
  const int n = r.dim();
  if (u.dim() != n) throw StructuralError("ricci_contraction: dimension mismatch");
  const SymTwoTensor<Scalar> ric = ricci(r);
  // G_st = sum_jkl U_sjkl U_tjkl
  const auto& um = u.pairMatrix();
  MatrixX<Scalar> g = MatrixX<Scalar>::Zero(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int j = 0; j < n; ++j) g(s, t) += um.row(s * n + j).dot(um.row(t * n + j));
  return ric.cwiseProduct(g).sum();
}

/// (S T)_abcd = sum_p S_pa T_pbcd + S_pb T_apcd + S_pc T_abpd + S_pd T_abcp
///
/// Each term is a product of S with one index of T, taken slice by slice
/// on the row-major storage.
template <typename Scalar>
CurvatureTensor<Scalar> s_action(const SymTwoTensor<Scalar>& s, const CurvatureTensor<Scalar>& t) {
  using RowMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using ConstMap = Eigen::Map<const RowMat>;
  using Map = Eigen::Map<RowMat>;
  const int n = t.dim();
  if (s.rows() != n || s.cols() != n) throw StructuralError("s_action: dimension mismatch");
  const int n2 = n * n, n3 = n2 * n;
  const RowMat st = s.transpose();
  const Scalar* in = t.pairMatrix().data();
  CurvatureTensor<Scalar> out(n);
  Scalar* res = out.pairMatrix().data();
  // first index
  Map(res, n, n3).noalias() = st * ConstMap(in, n, n3);
  // last index
  Map(res, n3, n).noalias() += ConstMap(in, n3, n) * s;
  // second index, one a-slice at a time
  for (int a = 0; a < n; ++a)
    Map(res + a * n3, n, n2).noalias() += st * ConstMap(in + a * n3, n, n2);
  // third index, one (a,b)-slice at a time
  for (int ab = 0; ab < n2; ++ab)
    Map(res + ab * n2, n, n).noalias() += st * ConstMap(in + ab * n2, n, n);
  return out;
}

/// Relative trace residual max_jl |sum_i W_ijil| / max(|W|, 1).
template <typename Scalar>
Scalar trace_residual(const CurvatureTensor<Scalar>& w) {
  using std::max;
  const Scalar scale = max(w.norm(), Scalar(1));
  const SymTwoTensor<Scalar> ric = ricci(w);
  return ric.size() ? ric.cwiseAbs().maxCoeff() / scale : Scalar(0);
}

/// The family S^ij = (1/2) sum_kl (W_iklj + W_ilkj) e_k (.) e_l, i.e. the
/// matrices (S^ij)_ab = W_iabj + W_ibaj. Index [i * n + j].
template <typename Scalar>
std::vector<SymTwoTensor<Scalar>> sij_family(const CurvatureTensor<Scalar>& w,
                                             Scalar tol = Scalar(1e-9)) {
  if (trace_residual(w) > tol) throw PreconditionError("sij_family needs a trace-free tensor");
  const int n = w.dim();
  std::vector<SymTwoTensor<Scalar>> family;
  family.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SymTwoTensor<Scalar> s(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s(a, b) = w(i, a, b, j) + w(i, b, a, j);
      family.push_back(std::move(s));
    }
  return family;
}

template <typename Scalar>
void require_trace_free(const SymTwoTensor<Scalar>& h, Scalar tol) {
  using std::abs;
  using std::max;
  if (abs(h.trace()) > tol * max(h.norm(), Scalar(1)))
    throw PreconditionError("expected a trace-free symmetric tensor");
}

/// <Rbar(h), h> = sum R_kijl h_ij h_kl by direct contraction.
template <typename Scalar>
Scalar quadratic_form(const CurvatureTensor<Scalar>& t, const SymTwoTensor<Scalar>& h,
                      Scalar tol = Scalar(1e-9)) {
  const int n = t.dim();
  if (h.rows() != n || h.cols() != n) throw StructuralError("quadratic_form: dimension mismatch");
  require_trace_free(h, tol);
  Scalar v = 0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) v += t(k, i, j, l) * h(i, j) * h(k, l);
  return v;
}

/// Same form evaluated through the basis coordinates of h.
template <typename Scalar>
Scalar quadratic_form(const SecondKindMatrix<Scalar>& m, const SymTwoTensor<Scalar>& h,
                      Scalar tol = Scalar(1e-9)) {
  if (h.rows() != m.n || h.cols() != m.n)
    throw StructuralError("quadratic_form: dimension mismatch");
  require_trace_free(h, tol);
  const VectorX<Scalar> c = m.basis.coordinates(h);
  return c.dot(m.matrix * c);
}

}  // namespace curvop
