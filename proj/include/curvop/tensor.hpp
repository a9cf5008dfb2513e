#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvop/errors.hpp"

namespace curvop {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Symmetric 2-tensors (Ricci, metric, trace-free test tensors) are plain
/// square Eigen matrices; symmetry is checked where it matters.
template <typename Scalar>
using SymTwoTensor = MatrixX<Scalar>;

/// Dense rank-4 tensor R_ijkl on R^n.
///
/// Components live in an n^2 x n^2 row-major matrix whose row is the pair
/// (i,j) and whose column is the pair (k,l), so the flat storage is exactly
/// the row-major n^4 array and pairwise contractions become matrix products.
/// Indices are zero-based.
template <typename Scalar>
class CurvatureTensor {
 public:
  using MatrixType =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  CurvatureTensor() = default;

  explicit CurvatureTensor(int n) : n_(n) {
    if (n < 1) throw StructuralError("tensor dimension must be positive");
    components_ = MatrixType::Zero(n * n, n * n);
  }

  CurvatureTensor(int n, std::span<const Scalar> flat) : CurvatureTensor(n) {
    if (flat.size() != static_cast<std::size_t>(n) * n * n * n)
      throw StructuralError("expected " + std::to_string(n * n * n * n) +
                            " components, got " + std::to_string(flat.size()));
    std::copy(flat.begin(), flat.end(), components_.data());
  }

  int dim() const { return n_; }

  Scalar& operator()(int i, int j, int k, int l) {
    return components_(i * n_ + j, k * n_ + l);
  }
  Scalar operator()(int i, int j, int k, int l) const {
    return components_(i * n_ + j, k * n_ + l);
  }

  /// Row (i,j), column (k,l) view of the components.
  const MatrixType& pairMatrix() const { return components_; }
  MatrixType& pairMatrix() { return components_; }

  std::span<const Scalar> flat() const {
    return {components_.data(), static_cast<std::size_t>(components_.size())};
  }

  Scalar squaredNorm() const { return components_.squaredNorm(); }
  Scalar norm() const { return components_.norm(); }
  Scalar maxAbs() const {
    return components_.size() ? components_.cwiseAbs().maxCoeff() : Scalar(0);
  }

  CurvatureTensor& operator+=(const CurvatureTensor& o) {
    requireSameDim(o);
    components_ += o.components_;
    return *this;
  }
  CurvatureTensor& operator-=(const CurvatureTensor& o) {
    requireSameDim(o);
    components_ -= o.components_;
    return *this;
  }
  CurvatureTensor& operator*=(Scalar t) {
    components_ *= t;
    return *this;
  }

  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(Scalar t, CurvatureTensor a) { return a *= t; }
  friend CurvatureTensor operator*(CurvatureTensor a, Scalar t) { return a *= t; }

  /// Frobenius inner product on rank-4 tensors.
  friend Scalar inner(const CurvatureTensor& a, const CurvatureTensor& b) {
    a.requireSameDim(b);
    return a.components_.cwiseProduct(b.components_).sum();
  }

 private:
  void requireSameDim(const CurvatureTensor& o) const {
    if (o.n_ != n_) throw StructuralError("tensor dimension mismatch");
  }

  int n_ = 0;
  MatrixType components_;
};

using CurvatureTensord = CurvatureTensor<double>;

enum class SymmetryViolation { Antisymmetry, PairSymmetry, Bianchi };

inline std::string_view to_string(SymmetryViolation v) {
  switch (v) {
    case SymmetryViolation::Antisymmetry: return "antisymmetry";
    case SymmetryViolation::PairSymmetry: return "pair_symmetry";
    case SymmetryViolation::Bianchi: return "bianchi";
  }
  return "unknown";
}

template <typename Scalar>
struct SymmetryResiduals {
  Scalar antisymmetry = 0;
  Scalar pair_symmetry = 0;
  Scalar bianchi = 0;
};

/// Orthogonal projection onto tensors that are antisymmetric in each pair
/// and symmetric under pair exchange (no Bianchi projection).
template <typename Scalar>
CurvatureTensor<Scalar> project_pair_symmetries(const CurvatureTensor<Scalar>& t) {
  const int n = t.dim();
  CurvatureTensor<Scalar> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Scalar a = t(i, j, k, l) - t(j, i, k, l) - t(i, j, l, k) + t(j, i, l, k);
          const Scalar b = t(k, l, i, j) - t(l, k, i, j) - t(k, l, j, i) + t(l, k, j, i);
          out(i, j, k, l) = (a + b) / Scalar(8);
        }
  return out;
}

/// Cyclic sum R_ijkl + R_iklj + R_iljk divided by three. On tensors with the
/// pair symmetries this is the totally antisymmetric part, so subtracting it
/// is the orthogonal projection onto the Bianchi-satisfying subspace.
template <typename Scalar>
CurvatureTensor<Scalar> bianchi_part(const CurvatureTensor<Scalar>& t) {
  const int n = t.dim();
  CurvatureTensor<Scalar> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i, j, k, l) = (t(i, j, k, l) + t(i, k, l, j) + t(i, l, j, k)) / Scalar(3);
  return out;
}

/// Projects an arbitrary rank-4 array onto the space of algebraic curvature tensors.
template <typename Scalar>
CurvatureTensor<Scalar> project_curvature(const CurvatureTensor<Scalar>& t) {
  CurvatureTensor<Scalar> p = project_pair_symmetries(t);
  return p - bianchi_part(p);
}

/// Max-abs residual of each symmetry family. The Bianchi residual is taken
/// on the pair-symmetric projection so a pure antisymmetry defect is not
/// double-reported as a Bianchi defect.
template <typename Scalar>
SymmetryResiduals<Scalar> symmetry_residuals(const CurvatureTensor<Scalar>& t) {
  using std::abs;
  using std::max;
  const int n = t.dim();
  SymmetryResiduals<Scalar> r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Scalar v = t(i, j, k, l);
          r.antisymmetry = max({r.antisymmetry, Scalar(abs(v + t(j, i, k, l))),
                                Scalar(abs(v + t(i, j, l, k)))});
          r.pair_symmetry = max(r.pair_symmetry, Scalar(abs(v - t(k, l, i, j))));
        }
  r.bianchi = Scalar(3) * bianchi_part(project_pair_symmetries(t)).maxAbs();
  return r;
}

/// Lists the symmetry families whose max residual exceeds tol.
template <typename Scalar>
std::vector<SymmetryViolation> validate(const CurvatureTensor<Scalar>& t, Scalar tol) {
  const auto r = symmetry_residuals(t);
  std::vector<SymmetryViolation> out;
  if (r.antisymmetry > tol) out.push_back(SymmetryViolation::Antisymmetry);
  if (r.pair_symmetry > tol) out.push_back(SymmetryViolation::PairSymmetry);
  if (r.bianchi > tol) out.push_back(SymmetryViolation::Bianchi);
  return out;
}

/// Ric_jl = sum_i R_ijil; positive on the round sphere.
template <typename Scalar>
SymTwoTensor<Scalar> ricci(const CurvatureTensor<Scalar>& t) {
  const int n = t.dim();
  SymTwoTensor<Scalar> ric = SymTwoTensor<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) ric(j, l) += t(i, j, i, l);
  return ric;
}

template <typename Scalar>
Scalar scalar(const CurvatureTensor<Scalar>& t) {
  return ricci(t).trace();
}

/// (h o k)_ijkl = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il
template <typename Scalar>
CurvatureTensor<Scalar> kulkarni_nomizu(const SymTwoTensor<Scalar>& h,
                                        const SymTwoTensor<Scalar>& k) {
  if (h.rows() != h.cols() || k.rows() != k.cols() || h.rows() != k.rows())
    throw StructuralError("Kulkarni-Nomizu factors must be square with equal size");
  const int n = static_cast<int>(h.rows());
  CurvatureTensor<Scalar> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          out(i, j, a, b) = h(i, a) * k(j, b) + h(j, b) * k(i, a) -
                            h(i, b) * k(j, a) - h(j, a) * k(i, b);
  return out;
}

/// R_ijkl = c (d_ik d_jl - d_il d_jk)
template <typename Scalar>
CurvatureTensor<Scalar> constant_curvature(int n, Scalar c) {
  const SymTwoTensor<Scalar> g = SymTwoTensor<Scalar>::Identity(n, n);
  return (c / Scalar(2)) * kulkarni_nomizu<Scalar>(g, g);
}

template <typename Scalar>
struct CurvatureDecomposition {
  Scalar scalar = 0;
  SymTwoTensor<Scalar> traceless_ricci;
  CurvatureTensor<Scalar> weyl;

  int dim() const { return weyl.dim(); }

  /// s/(2n(n-1)) g o g + 1/(n-2) E o g + W
  CurvatureTensor<Scalar> scalarPart() const {
    const int n = dim();
    return constant_curvature<Scalar>(n, scalar / Scalar(n * (n - 1)));
  }
  CurvatureTensor<Scalar> tracelessRicciPart() const {
    const int n = dim();
    const SymTwoTensor<Scalar> g = SymTwoTensor<Scalar>::Identity(n, n);
    return kulkarni_nomizu<Scalar>(traceless_ricci, g) * (Scalar(1) / Scalar(n - 2));
  }
  CurvatureTensor<Scalar> reassemble() const {
    return scalarPart() + tracelessRicciPart() + weyl;
  }
};

template <typename Scalar>
CurvatureDecomposition<Scalar> decompose(const CurvatureTensor<Scalar>& t) {
  const int n = t.dim();
  if (n < 3) throw PreconditionError("decomposition needs n >= 3");
  CurvatureDecomposition<Scalar> d;
  const SymTwoTensor<Scalar> ric = ricci(t);
  d.scalar = ric.trace();
  d.traceless_ricci =
      ric - (d.scalar / Scalar(n)) * SymTwoTensor<Scalar>::Identity(n, n);
  d.weyl = t;
  d.weyl -= d.scalarPart();
  d.weyl = d.weyl - d.tracelessRicciPart();
  return d;
}

template <typename Scalar>
CurvatureTensor<Scalar> weyl_part(const CurvatureTensor<Scalar>& t) {
  return decompose(t).weyl;
}

enum class RandomMode { Full, WeylOnly, Einstein };

/// Gaussian rank-4 array projected onto curvature tensors, drawn from gen.
template <typename Scalar, typename Generator>
CurvatureTensor<Scalar> random_curvature(int n, Generator& gen,
                                         RandomMode mode = RandomMode::Full) {
  if (n < 3) throw PreconditionError("random_curvature needs n >= 3");
  std::normal_distribution<double> normal(0.0, 1.0);
  CurvatureTensor<Scalar> raw(n);
  auto& m = raw.pairMatrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = Scalar(normal(gen));
  CurvatureTensor<Scalar> t = project_curvature(raw);
  switch (mode) {
    case RandomMode::Full: return t;
    case RandomMode::WeylOnly: return decompose(t).weyl;
    case RandomMode::Einstein: {
      const auto d = decompose(t);
      return d.scalarPart() + d.weyl;
    }
  }
  return t;
}

template <typename Scalar>
CurvatureTensor<Scalar> random_curvature(int n, std::uint64_t seed,
                                         RandomMode mode = RandomMode::Full) {
  std::mt19937_64 gen(seed);
  return random_curvature<Scalar>(n, gen, mode);
}

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-fixed).
template <typename Scalar, typename Generator>
MatrixX<Scalar> random_orthogonal(int n, Generator& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixX<Scalar> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Scalar(normal(gen));
  Eigen::HouseholderQR<MatrixX<Scalar>> qr(a);
  MatrixX<Scalar> q = qr.householderQ();
  const MatrixX<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < Scalar(0)) q.col(j) *= Scalar(-1);
  return q;
}

/// R'_ijkl = Q_ia Q_jb Q_kc Q_ld R_abcd, i.e. the tensor expressed in the
/// rotated frame e'_i = sum_a Q_ia e_a.
template <typename Scalar>
CurvatureTensor<Scalar> rotate(const CurvatureTensor<Scalar>& t, const MatrixX<Scalar>& q) {
  const int n = t.dim();
  if (q.rows() != n || q.cols() != n) throw StructuralError("rotation size mismatch");
  typename CurvatureTensor<Scalar>::MatrixType qq(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) qq(i * n + j, a * n + b) = q(i, a) * q(j, b);
  CurvatureTensor<Scalar> out(n);
  out.pairMatrix() = qq * t.pairMatrix() * qq.transpose();
  return out;
}

}  // namespace curvop
