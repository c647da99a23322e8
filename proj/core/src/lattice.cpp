#include <latloc/lattice.hpp>

#include <sstream>
#include <utility>

namespace latloc {

Int content(const Weight& w) {
  Int g = 0;
  for (const Int& x : w) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? Int(-g) : g;
}

bool is_primitive(const Weight& w) { return content(w) == 1; }

Int make_primitive(Weight& w) {
  Int g = content(w);
  if (g > 1)
    for (Int& x : w) x /= g;
  return g;
}

Int xgcd(const Int& a, const Int& b, Int& u, Int& v) {
  // Iterative extended Euclid with truncated quotients; returns g >= 0.
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp;
    tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  u = old_s;
  v = old_t;
  return old_r;
}

IMat identity(int n) {
  IMat a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  int m = (int)a.size(), k = (int)b.size(), n = k ? (int)b[0].size() : 0;
  IMat c(m, std::vector<Int>(n, 0));
  for (int i = 0; i < m; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Weight mat_vec(const IMat& a, const Weight& x) {
  Weight y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

IMat transpose(const IMat& a) {
  int m = (int)a.size(), n = m ? (int)a[0].size() : 0;
  IMat t(n, std::vector<Int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

Int det(const IMat& a) {
  // Fraction-free Bareiss elimination; exact for integer matrices.
  int n = (int)a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if ((int)row.size() != n) throw domain_error("det: matrix not square");
  IMat m = a;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int rank(const IMat& a) {
  // Gaussian elimination over Q, done in exact rationals.
  std::vector<std::vector<Rat>> m;
  for (const auto& row : a) {
    std::vector<Rat> r;
    r.reserve(row.size());
    for (const Int& x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int i = rk; i < rows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    for (int i = rk + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[rk][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

IMat unimodular_inverse(const IMat& a) {
  int n = (int)a.size();
  Int d = det(a);
  if (d != 1 && d != -1)
    throw domain_error("unimodular_inverse: determinant is " + d.str() +
                       ", not +-1");
  // Adjugate via cofactors; n is small (<= 4) throughout this library.
  IMat inv(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IMat minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Int> row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = det(minor);
      if ((i + j) % 2) cof = -cof;
      inv[j][i] = d * cof;  // d = 1/det for unimodular matrices
    }
  return inv;
}

HermiteResult hermite_normal_form(const IMat& a) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  for (const auto& row : a)
    if ((int)row.size() != cols)
      throw domain_error("hermite_normal_form: ragged matrix");
  int rk = rank(a);
  if (rk != rows) {
    std::ostringstream msg;
    msg << "hermite_normal_form requires full row rank; rank is " << rk
        << " of " << rows;
    throw domain_error(msg.str());
  }
  IMat h = a;
  IMat u = identity(cols);
  auto col_combine = [&](IMat& m, int ci, int cj, const Int& p, const Int& q,
                         const Int& r, const Int& s) {
    // (col_i, col_j) <- (p*col_i + q*col_j, r*col_i + s*col_j)
    for (auto& row : m) {
      Int x = row[ci], y = row[cj];
      row[ci] = p * x + q * y;
      row[cj] = r * x + s * y;
    }
  };
  int pivot_col = 0;
  for (int i = 0; i < rows; ++i) {
    // Clear row i to the right of pivot_col with Bezout 2x2 column blocks.
    for (int j = pivot_col + 1; j < cols; ++j) {
      if (h[i][j] == 0) continue;
      Int p, q;
      Int g = xgcd(h[i][pivot_col], h[i][j], p, q);
      Int r = -h[i][j] / g, s = h[i][pivot_col] / g;
      // det [[p, r],[q, s]] = p*s - q*r = (p*a + q*b)/g = 1: unimodular.
      col_combine(h, pivot_col, j, p, q, r, s);
      col_combine(u, pivot_col, j, p, q, r, s);
    }
    if (h[i][pivot_col] < 0) {
      for (auto& row : h) row[pivot_col] = -row[pivot_col];
      for (auto& row : u) row[pivot_col] = -row[pivot_col];
    }
    ++pivot_col;
  }
  return HermiteResult{std::move(h), std::move(u)};
}

IMat unimodular_reducing(const Weight& xi) {
  int n = (int)xi.size();
  if (n == 0) throw domain_error("unimodular_reducing: empty vector");
  Int g = content(xi);
  if (g != 1)
    throw domain_error("vector " + weight_to_string(xi) +
                       " is not primitive (content " + g.str() + ")");
  // Signed unit vector: a permutation matrix (with one sign flip) does it.
  for (int i = 0; i < n; ++i) {
    bool unit = (xi[i] == 1 || xi[i] == -1);
    if (!unit) continue;
    bool rest_zero = true;
    for (int j = 0; j < n; ++j)
      if (j != i && xi[j] != 0) { rest_zero = false; break; }
    if (!rest_zero) continue;
    IMat w(n, std::vector<Int>(n, 0));
    // Row 0 extracts coordinate i (with sign); remaining rows keep the other
    // coordinates in their original order.
    w[0][i] = xi[i];
    int r = 1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      w[r++][j] = 1;
    }
    return w;
  }
  // General case: fold entries into position 0 by Bezout row operations.
  IMat w = identity(n);
  Weight v = xi;
  for (int j = 1; j < n; ++j) {
    if (v[j] == 0) continue;
    Int p, q;
    Int g2 = xgcd(v[0], v[j], p, q);
    Int r = -v[j] / g2, s = v[0] / g2;
    // (row_0, row_j) <- (p*row_0 + q*row_j, r*row_0 + s*row_j), det = 1.
    for (int c = 0; c < n; ++c) {
      Int x = w[0][c], y = w[j][c];
      w[0][c] = p * x + q * y;
      w[j][c] = r * x + s * y;
    }
    Int x = v[0], y = v[j];
    v[0] = p * x + q * y;
    v[j] = r * x + s * y;
  }
  if (v[0] == -1) {
    for (int c = 0; c < n; ++c) w[0][c] = -w[0][c];
    v[0] = 1;
  }
  return w;
}

IMat complete_to_basis(const Weight& xi) {
  IMat w = unimodular_reducing(xi);
  return unimodular_inverse(w);  // U = W^{-1}; first column of U is xi
}

}  // namespace latloc
