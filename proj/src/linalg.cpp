#include "qfact/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qfact {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_split(const ComplexMatrix& m, Dims dims, const char* what) {
  if (dims.d1 == 0 || dims.d2 == 0 || m.dim() != dims.total()) {
    throw DimensionError(std::string(what) + ": matrix dim " + std::to_string(m.dim()) +
                         " does not match split " + std::to_string(dims.d1) + "x" +
                         std::to_string(dims.d2));
  }
}

// Unitary J acting on coordinates (p, q) that zeroes the (p, q) entry of the
// Hermitian 2x2 block [[app, apq], [conj(apq), aqq]] under J^dagger A J.
struct Rotation {
  cplx pp, pq, qp, qq;
};

Rotation jacobi_rotation(double app, double aqq, cplx apq) {
  const double r = std::abs(apq);
  const cplx phase = apq / r;
  const double theta = (aqq - app) / (2.0 * r);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx ph = std::conj(phase);
  return {cplx(c), cplx(s), -s * ph, c * ph};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, Vector row_major) : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                         std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("ComplexMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> ket, std::span<const cplx> bra) {
  if (ket.size() != bra.size()) throw DimensionError("outer: length mismatch");
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix m(*this);
  for (auto& x : m.data_) x = std::conj(x);
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Vector ComplexMatrix::column(std::size_t c) const {
  Vector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const cplx> v) {
  if (v.size() != dim_) throw DimensionError("set_column: length mismatch");
  for (std::size_t r = 0; r < dim_; ++r) (*this)(r, c) = v[r];
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const ComplexMatrix& a, std::span<const cplx> v) {
  if (v.size() != a.dim()) throw DimensionError("matrix-vector product: length mismatch");
  Vector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Vector normalized(std::span<const cplx> v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  Vector out(v.begin(), v.end());
  for (auto& x : out) x /= n;
  return out;
}

Vector kron(std::span<const cplx> a, std::span<const cplx> b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

Vector basis_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = 1.0;
  return v;
}

double phase_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("phase_distance: length mismatch");
  std::size_t k = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (std::abs(a[i]) > std::abs(a[k])) k = i;
  cplx phase = 1.0;
  if (std::abs(b[k]) > 0.0 && std::abs(a[k]) > 0.0) {
    phase = a[k] / b[k];
    phase /= std::abs(phase);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - phase * b[i]);
  return std::sqrt(s);
}

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix id() { return ComplexMatrix::identity(2); }
}  // namespace pauli

std::vector<ComplexMatrix> spin_generators(std::size_t dim) {
  if (dim == 0) throw DimensionError("spin_generators: dim must be positive");
  const double s = 0.5 * static_cast<double>(dim - 1);
  ComplexMatrix sz(dim), splus(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double m = s - static_cast<double>(i);
    sz(i, i) = m;
    // S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>, and |m+1> sits at index i-1.
    if (i > 0) splus(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix sminus = splus.adjoint();
  ComplexMatrix sx = 0.5 * (splus + sminus);
  ComplexMatrix sy = cplx(0.0, -0.5) * (splus - sminus);
  return {sx, sy, sz};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep) {
  require_split(m, dims, "partial_trace");
  const auto [d1, d2] = dims;
  if (keep == Subsystem::A) {
    ComplexMatrix out(d1);
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t jp = 0; jp < d1; ++jp)
        for (std::size_t k = 0; k < d2; ++k) out(j, jp) += m(j * d2 + k, jp * d2 + k);
    return out;
  }
  ComplexMatrix out(d2);
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t kp = 0; kp < d2; ++kp)
      for (std::size_t j = 0; j < d1; ++j) out(k, kp) += m(j * d2 + k, j * d2 + kp);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem which) {
  require_split(m, dims, "partial_transpose");
  const auto [d1, d2] = dims;
  ComplexMatrix out(m.dim());
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t k = 0; k < d2; ++k)
      for (std::size_t jp = 0; jp < d1; ++jp)
        for (std::size_t kp = 0; kp < d2; ++kp) {
          const std::size_t row = j * d2 + k, col = jp * d2 + kp;
          out(row, col) = which == Subsystem::B ? m(j * d2 + kp, jp * d2 + k) : m(jp * d2 + k, j * d2 + kp);
        }
  return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& input, const Tolerances& tol) {
  if (!input.is_finite()) throw DimensionError("hermitian_eig: non-finite entries");
  if (!input.is_hermitian(tol.hermitian)) throw DimensionError("hermitian_eig: matrix is not Hermitian");
  const std::size_t n = input.dim();
  ComplexMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, input.frobenius_norm());

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_mass() >= tol.eig_offdiag * scale) {
    if (sweep++ >= tol.eig_max_sweeps) throw ConvergenceError("hermitian_eig: Jacobi did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        const Rotation j = jacobi_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * j.pp + akq * j.qp;
          a(k, q) = akp * j.pq + akq * j.qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(j.pp) * apk + std::conj(j.qp) * aqk;
          a(q, k) = std::conj(j.pq) * apk + std::conj(j.qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * j.pp + vkq * j.qp;
          v(k, q) = vkp * j.pq + vkq * j.qq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  HermitianEig out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]).real();
    out.eigenvectors.set_column(i, v.column(order[i]));
  }
  return out;
}

std::vector<double> eigenvalues(const ComplexMatrix& m, const Tolerances& tol) {
  return hermitian_eig(m, tol).eigenvalues;
}

Svd svd(std::span<const cplx> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw DimensionError("svd: size mismatch");
  if (rows < cols) {
    // a^dagger = sum s right left^dagger
    Vector at(cols * rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) at[j * rows + i] = std::conj(a[i * cols + j]);
    Svd t = svd(at, cols, rows);
    std::swap(t.left, t.right);
    return t;
  }
  const std::size_t n = cols;
  std::vector<Vector> c(n, Vector(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) c[j][i] = a[i * cols + j];
  std::vector<Vector> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = basis_vector(n, j);

  constexpr double eps = 1e-15;
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = std::real(inner(c[p], c[p]));
        const double beta = std::real(inner(c[q], c[q]));
        const cplx gamma = inner(c[p], c[q]);
        if (std::abs(gamma) == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Rotation j = jacobi_rotation(alpha, beta, gamma);
        auto apply = [&](Vector& x, Vector& y) {
          for (std::size_t k = 0; k < x.size(); ++k) {
            const cplx xp = x[k], yq = y[k];
            x[k] = xp * j.pp + yq * j.qp;
            y[k] = xp * j.pq + yq * j.qq;
          }
        };
        apply(c[p], c[q]);
        apply(v[p], v[q]);
      }
    if (!rotated) break;
  }

  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = norm(c[j]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return s[x] > s[y]; });

  Svd out;
  const double smax = n > 0 ? s[order[0]] : 0.0;
  std::vector<Vector> good;
  for (std::size_t idx : order) {
    out.singular_values.push_back(s[idx]);
    out.right.push_back(v[idx]);
    if (s[idx] > 1e-13 * std::max(smax, 1e-300) && s[idx] > 0.0) {
      Vector u = c[idx];
      for (auto& x : u) x /= s[idx];
      good.push_back(std::move(u));
    }
  }
  // Left vectors for vanishing singular values are any orthonormal completion.
  std::vector<Vector> basis = good.empty() ? gram_schmidt_complete({}, rows) : gram_schmidt_complete(good, rows);
  out.left.assign(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_inner");
  cplx s = 0.0;
  auto da = a.data(), db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += std::conj(da[i]) * db[i];
  return s;
}

double hs_norm(const ComplexMatrix& a) { return a.frobenius_norm(); }

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_distance");
  return (a - b).frobenius_norm();
}

std::vector<Vector> gram_schmidt_complete(const std::vector<Vector>& seeds, std::size_t dim,
                                          const Tolerances& tol) {
  std::vector<Vector> basis;
  basis.reserve(dim);
  auto residual = [&](Vector r) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const cplx proj = inner(b, r);
        for (std::size_t i = 0; i < dim; ++i) r[i] -= proj * b[i];
      }
    return r;
  };
  for (const auto& s : seeds) {
    if (s.size() != dim) throw DimensionError("gram_schmidt_complete: seed length mismatch");
    const double sn = norm(s);
    Vector r = residual(s);
    const double rn = norm(r);
    if (sn == 0.0 || rn < tol.gram_schmidt * sn) {
      throw std::invalid_argument("gram_schmidt_complete: seed vectors are linearly dependent");
    }
    for (auto& x : r) x /= rn;
    basis.push_back(std::move(r));
  }
  for (std::size_t e = 0; e < dim && basis.size() < dim; ++e) {
    Vector r = residual(basis_vector(dim, e));
    const double rn = norm(r);
    if (rn < tol.gram_schmidt) continue;
    for (auto& x : r) x /= rn;
    basis.push_back(std::move(r));
  }
  return basis;
}

ComplexMatrix from_columns(const std::vector<Vector>& columns) {
  ComplexMatrix m(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.dim() == 0 || !m.is_finite()) return false;
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.dim())) <= tol;
}

std::size_t algebra_span_dim(const std::vector<ComplexMatrix>& generators, const Tolerances& tol) {
  if (generators.empty()) return 1;
  const std::size_t d = generators.front().dim();
  for (const auto& g : generators) require_same_dim(g, generators.front(), "algebra_span_dim");

  // Orthonormal (Hilbert-Schmidt) basis of the span found so far.
  std::vector<ComplexMatrix> basis;
  auto add = [&](ComplexMatrix m) -> bool {
    const double mn = hs_norm(m);
    if (mn == 0.0) return false;
    m *= cplx(1.0 / mn);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) m -= hs_inner(b, m) * b;
    const double rn = hs_norm(m);
    if (rn < tol.rank) return false;
    m *= cplx(1.0 / rn);
    basis.push_back(std::move(m));
    return true;
  };

  std::vector<ComplexMatrix> frontier;
  if (add(ComplexMatrix::identity(d))) frontier.push_back(basis.back());
  for (const auto& g : generators)
    if (add(g)) frontier.push_back(basis.back());

  // span(words of length n+1) = span(words <= n) + G * (new elements at length n).
  while (!frontier.empty() && basis.size() < d * d) {
    std::vector<ComplexMatrix> next;
    for (const auto& g : generators)
      for (const auto& f : frontier)
        if (add(g * f)) next.push_back(basis.back());
    frontier = std::move(next);
  }
  return basis.size();
}

}  // namespace qfact
