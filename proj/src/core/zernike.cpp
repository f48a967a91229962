#include "core/zernike.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zernlets {

namespace {

constexpr double kPi = std::numbers::pi;

double check_radius(double r) {
  if (r < -1e-12 || r > 1.0 + 1e-12)
    throw numeric_error("radius outside the unit disk: " + std::to_string(r));
  return std::clamp(r, 0.0, 1.0);
}

long double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  k = std::min(k, n - k);
  long double b = 1.0L;
  for (int i = 1; i <= k; ++i) b = b * (long double)(n - k + i) / (long double)i;
  return b;
}

}  // namespace

bool index_valid(int n, int m) {
  return n >= 0 && std::abs(m) <= n && (n - m) % 2 == 0;
}

int index_pack(int n, int m) {
  if (!index_valid(n, m))
    throw std::invalid_argument("invalid Zernike index (" + std::to_string(n) +
                                ", " + std::to_string(m) + ")");
  return (n * (n + 2) + m) / 2;
}

ZernikeIndex index_unpack(int j) {
  if (j < 0) throw std::invalid_argument("negative single index");
  // Smallest index of degree n is n(n+1)/2; invert the triangular bound.
  int n = (int)((std::sqrt(8.0 * j + 1.0) - 1.0) / 2.0);
  while (n * (n + 3) / 2 < j) ++n;
  while (n * (n + 1) / 2 > j) --n;
  int m = 2 * j - n * (n + 2);
  ZernikeIndex idx{n, m};
  if (!index_valid(n, m) || index_pack(n, m) != j)
    throw std::logic_error("single-index unpack failed");
  return idx;
}

std::vector<double> radial_coefficients(int n, int m) {
  const int ma = std::abs(m);
  const int p = (n + ma) / 2, q = (n - ma) / 2;
  std::vector<double> c(q + 1);
  // Leading coefficient is binom(n, p); successors follow from the ratio of
  // consecutive terms of the factorial sum, keeping every value an exact
  // integer regardless of n.
  long double cur = binomial(n, p);
  for (int s = 0; s <= q; ++s) {
    c[s] = (double)cur;
    cur *= -(long double)((p - s) * (q - s)) / (long double)((n - s) * (s + 1));
  }
  return c;
}

double radial_eval(int n, int m, double r) {
  const int ma = std::abs(m);
  if (n < 0 || n < ma || (n - ma) % 2 != 0) return 0.0;
  r = check_radius(r);
  // c[s] multiplies r^{n-2s}, so in t = r^2 the coefficients run from the
  // leading power down; Horner then a single r^{|m|} factor.
  const auto c = radial_coefficients(n, m);
  const double t = r * r;
  double acc = c[0];
  for (size_t s = 1; s < c.size(); ++s) acc = acc * t + c[s];
  return acc * std::pow(r, ma);
}

double zernike_norm_constant(int n) { return std::sqrt((n + 1) / kPi); }

double zernike_real_norm_constant(int n, int m) {
  return m == 0 ? std::sqrt((n + 1) / kPi) : std::sqrt(2.0 * (n + 1) / kPi);
}

complexd zernike_eval(ZernikeIndex idx, PolarPoint p) {
  if (!index_valid(idx.n, idx.m))
    throw std::invalid_argument("invalid Zernike index");
  const double rad =
      zernike_norm_constant(idx.n) * radial_eval(idx.n, idx.m, p.rho);
  return std::polar(rad, idx.m * p.theta);
}

double zernike_real_eval(ZernikeIndex idx, PolarPoint p) {
  if (!index_valid(idx.n, idx.m))
    throw std::invalid_argument("invalid Zernike index");
  const double rad =
      zernike_real_norm_constant(idx.n, idx.m) * radial_eval(idx.n, idx.m, p.rho);
  if (idx.m == 0) return rad;
  return idx.m > 0 ? rad * std::cos(idx.m * p.theta)
                   : rad * std::sin(-idx.m * p.theta);
}

Eigen::VectorXcd basis_row(int degree, PolarPoint p) {
  Eigen::VectorXcd row(space_dim(degree));
  p.rho = check_radius(p.rho);
  for (int n = 0; n <= degree; ++n) {
    const double gamma = zernike_norm_constant(n);
    for (int ma = n % 2; ma <= n; ma += 2) {
      const double rad = gamma * radial_eval(n, ma, p.rho);
      const complexd up = std::polar(rad, ma * p.theta);
      row[index_pack(n, ma)] = up;
      if (ma > 0) row[index_pack(n, -ma)] = std::conj(up);
    }
  }
  return row;
}

Eigen::VectorXd real_basis_row(int degree, PolarPoint p) {
  Eigen::VectorXd row(space_dim(degree));
  p.rho = check_radius(p.rho);
  for (int n = 0; n <= degree; ++n) {
    for (int ma = n % 2; ma <= n; ma += 2) {
      const double rad =
          zernike_real_norm_constant(n, ma) * radial_eval(n, ma, p.rho);
      if (ma == 0) {
        row[index_pack(n, 0)] = rad;
      } else {
        row[index_pack(n, ma)] = rad * std::cos(ma * p.theta);
        row[index_pack(n, -ma)] = rad * std::sin(ma * p.theta);
      }
    }
  }
  return row;
}

complexd eval_poly(const DiskPolynomial& p, PolarPoint pt) {
  const Eigen::VectorXcd row = basis_row(p.max_degree, pt);
  return (p.coeffs.array() * row.array()).sum();
}

complexd inner_product(const DiskPolynomial& p, const DiskPolynomial& q) {
  const Eigen::Index len = std::min(p.coeffs.size(), q.coeffs.size());
  // <p, q> = sum_j p_j conj(q_j); Eigen's dot conjugates its *first* operand.
  return q.coeffs.head(len).dot(p.coeffs.head(len));
}

double norm_l2(const DiskPolynomial& p) { return p.coeffs.norm(); }

double real_valued_defect(const DiskPolynomial& p) {
  double worst = 0.0;
  for (int n = 0; n <= p.max_degree; ++n)
    for (int ma = n % 2; ma <= n; ma += 2) {
      const complexd up = p.coeffs[index_pack(n, ma)];
      const complexd dn = p.coeffs[index_pack(n, -ma)];
      worst = std::max(worst, std::abs(dn - std::conj(up)));
    }
  return worst;
}

DiskPolynomial embed(const DiskPolynomial& p, int degree) {
  if (degree < p.max_degree)
    throw std::invalid_argument("embed target degree below source degree");
  DiskPolynomial out = DiskPolynomial::zero(degree);
  out.coeffs.head(p.coeffs.size()) = p.coeffs;
  return out;
}

DiskPolynomial add(const DiskPolynomial& a, const DiskPolynomial& b) {
  const int deg = std::max(a.max_degree, b.max_degree);
  DiskPolynomial out = DiskPolynomial::zero(deg);
  out.coeffs.head(a.coeffs.size()) += a.coeffs;
  out.coeffs.head(b.coeffs.size()) += b.coeffs;
  return out;
}

DiskPolynomial subtract(const DiskPolynomial& a, const DiskPolynomial& b) {
  return add(a, scale(b, -1.0));
}

DiskPolynomial scale(const DiskPolynomial& a, complexd factor) {
  DiskPolynomial out = a;
  out.coeffs *= factor;
  return out;
}

double three_term_a(int n, int m) {
  const int ma = std::abs(m);
  const double lower = n == 0 ? 0.0 : (double)((n + ma) * (n + ma)) / n;
  const double upper = (double)((n - ma + 2) * (n - ma + 2)) / (n + 2);
  return (lower + upper) / (4.0 * (n + 1));
}

double three_term_b(int n, int m) {
  const double num = (double)((n + 2) * (n + 2) - m * m);
  return num / (4.0 * (n + 2)) / std::sqrt((double)(n + 1) * (n + 3));
}

complexd three_term_apply(int n, int m, complexd z_lower, complexd z_center,
                          complexd z_upper) {
  complexd acc = three_term_a(n, m) * z_center;
  if (index_valid(n - 2, m)) acc += three_term_b(n - 2, m) * z_lower;
  if (index_valid(n + 2, m)) acc += three_term_b(n, m) * z_upper;
  return acc;
}

DiskPolynomial multiply_r2(const DiskPolynomial& p) {
  DiskPolynomial out = DiskPolynomial::zero(p.max_degree + 2);
  for (int j = 0; j < p.coeffs.size(); ++j) {
    const complexd c = p.coeffs[j];
    if (c == 0.0) continue;
    const auto [n, m] = index_unpack(j);
    if (index_valid(n - 2, m))
      out.coeffs[index_pack(n - 2, m)] += c * three_term_b(n - 2, m);
    out.coeffs[index_pack(n, m)] += c * three_term_a(n, m);
    out.coeffs[index_pack(n + 2, m)] += c * three_term_b(n, m);
  }
  return out;
}

DiskPolynomial multiply_z(const DiskPolynomial& p) {
  DiskPolynomial out = DiskPolynomial::zero(p.max_degree + 1);
  // r e^{i theta} Z_n^m splits over Z_{n+1}^{m'} and Z_{n-1}^{m'} with
  // m' = m + 1; the radial weights come from the classical recurrences
  //   r R_n^m = [(n+m+2) R_{n+1}^{m+1} + (n-m) R_{n-1}^{m+1}] / (2(n+1))
  //   r R_n^m = [(n-m+2) R_{n+1}^{m-1} + (n+m) R_{n-1}^{m-1}] / (2(n+1))
  // (m >= 0), the first raising |m'| = m + 1, the second used for m < 0
  // where m' = m + 1 lowers the magnitude.
  for (int j = 0; j < p.coeffs.size(); ++j) {
    const complexd c = p.coeffs[j];
    if (c == 0.0) continue;
    const auto [n, m] = index_unpack(j);
    const int ma = std::abs(m);
    double up, down;  // weights on Z_{n+1}^{m+1}, Z_{n-1}^{m+1}
    if (m >= 0) {
      up = (n + ma + 2) / (2.0 * (n + 1));
      down = (n - ma) / (2.0 * (n + 1));
    } else {
      up = (n - ma + 2) / (2.0 * (n + 1));
      down = (n + ma) / (2.0 * (n + 1));
    }
    const double gn = std::sqrt((double)(n + 1));
    if (index_valid(n + 1, m + 1))
      out.coeffs[index_pack(n + 1, m + 1)] += c * up * gn / std::sqrt((double)(n + 2));
    if (index_valid(n - 1, m + 1) && down != 0.0)
      out.coeffs[index_pack(n - 1, m + 1)] += c * down * gn / std::sqrt((double)n);
  }
  return out;
}

RealCoeffs complex_to_real_coeffs(const DiskPolynomial& p, double tol) {
  const double defect = real_valued_defect(p);
  if (defect > tol)
    throw numeric_error("coefficients lack conjugate symmetry (defect " +
                        std::to_string(defect) + ")");
  RealCoeffs rc;
  rc.max_degree = p.max_degree;
  for (int n = 0; n <= p.max_degree; ++n)
    for (int ma = n % 2; ma <= n; ma += 2) {
      const complexd cp = p.coeffs[index_pack(n, ma)];
      const complexd cm = p.coeffs[index_pack(n, -ma)];
      // For m = 0 the two slots coincide and A is the coefficient itself.
      const complexd A = ma == 0 ? cp : cp + cm;
      const complexd B = complexd(0, 1) * (cp - cm);
      rc.rows.push_back({n, ma, A.real(), ma == 0 ? 0.0 : B.real()});
    }
  return rc;
}

DiskPolynomial real_to_complex_coeffs(const RealCoeffs& rc) {
  DiskPolynomial p = DiskPolynomial::zero(rc.max_degree);
  for (const auto& row : rc.rows) {
    if (row.m == 0) {
      p.coeffs[index_pack(row.n, 0)] = complexd(row.A, 0.0);
      continue;
    }
    const complexd half(row.A / 2.0, -row.B / 2.0);
    p.coeffs[index_pack(row.n, row.m)] = half;
    p.coeffs[index_pack(row.n, -row.m)] = std::conj(half);
  }
  return p;
}

Eigen::VectorXd complex_to_real_basis(const Eigen::VectorXcd& c, double tol) {
  DiskPolynomial p;
  p.coeffs = c;
  p.max_degree = index_unpack((int)c.size() - 1).n;
  if (space_dim(p.max_degree) != (int)c.size())
    throw std::invalid_argument("coefficient vector length is not a full J_N");
  const double defect = real_valued_defect(p);
  if (defect > tol)
    throw numeric_error("coefficients lack conjugate symmetry (defect " +
                        std::to_string(defect) + ")");
  Eigen::VectorXd g(c.size());
  const double rt2 = std::sqrt(2.0);
  for (int n = 0; n <= p.max_degree; ++n)
    for (int ma = n % 2; ma <= n; ma += 2) {
      const complexd cp = c[index_pack(n, ma)];
      if (ma == 0) {
        g[index_pack(n, 0)] = cp.real();
      } else {
        g[index_pack(n, ma)] = rt2 * cp.real();
        g[index_pack(n, -ma)] = -rt2 * cp.imag();
      }
    }
  return g;
}

Eigen::VectorXcd real_basis_to_complex(const Eigen::VectorXd& g) {
  const int deg = index_unpack((int)g.size() - 1).n;
  if (space_dim(deg) != (int)g.size())
    throw std::invalid_argument("coefficient vector length is not a full J_N");
  Eigen::VectorXcd c(g.size());
  const double rt2 = std::sqrt(2.0);
  for (int n = 0; n <= deg; ++n)
    for (int ma = n % 2; ma <= n; ma += 2) {
      if (ma == 0) {
        c[index_pack(n, 0)] = g[index_pack(n, 0)];
      } else {
        const complexd cp(g[index_pack(n, ma)] / rt2,
                          -g[index_pack(n, -ma)] / rt2);
        c[index_pack(n, ma)] = cp;
        c[index_pack(n, -ma)] = std::conj(cp);
      }
    }
  return c;
}

Eigen::MatrixXcd monomial_coeffs(ZernikeIndex idx) {
  if (!index_valid(idx.n, idx.m))
    throw std::invalid_argument("invalid Zernike index");
  const int n = idx.n, ma = std::abs(idx.m);
  const int q = (n - ma) / 2;
  const complexd iunit = idx.m >= 0 ? complexd(0, 1) : complexd(0, -1);
  const auto rad = radial_coefficients(n, idx.m);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  // r^{n-2s} e^{i m theta} = (x^2+y^2)^{q-s} (x + i sign(m) y)^{|m|}
  for (int s = 0; s <= q; ++s) {
    const int K = q - s;
    for (int t = 0; t <= K; ++t) {
      const double ck = (double)binomial(K, t);
      for (int u = 0; u <= ma; ++u) {
        complexd ipow(1, 0);
        for (int e = 0; e < ma - u; ++e) ipow *= iunit;
        const complexd w = rad[s] * ck * (double)binomial(ma, u) * ipow;
        out(2 * t + u, 2 * (K - t) + ma - u) += w;
      }
    }
  }
  return out * zernike_norm_constant(n);
}

Eigen::MatrixXcd to_monomials(const DiskPolynomial& p) {
  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Zero(p.max_degree + 1, p.max_degree + 1);
  for (int j = 0; j < p.coeffs.size(); ++j) {
    if (p.coeffs[j] == 0.0) continue;
    const auto idx = index_unpack(j);
    out.block(0, 0, idx.n + 1, idx.n + 1) += p.coeffs[j] * monomial_coeffs(idx);
  }
  return out;
}

complexd eval_monomials(const Eigen::MatrixXcd& mono, double x, double y) {
  complexd acc = 0.0;
  for (Eigen::Index a = mono.rows() - 1; a >= 0; --a) {
    complexd inner = 0.0;
    for (Eigen::Index b = mono.cols() - 1; b >= 0; --b)
      inner = inner * y + mono(a, b);
    acc = acc * x + inner;
  }
  return acc;
}

}  // namespace zernlets
