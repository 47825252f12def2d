#include "symanzik/gkz.hpp"

#include <sstream>

namespace symanzik {

std::vector<EulerOperator> euler_operators(const SupportMatrix& a) {
  std::vector<EulerOperator> ops;
  for (int r = 0; r < a.dim(); ++r) {
    EulerOperator op;
    op.row = r;
    op.coeffs.resize(a.columns.size());
    for (std::size_t c = 0; c < a.columns.size(); ++c)
      op.coeffs[c] = a.columns[c][r];
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<Binomial> lattice_kernel_binomials(const SupportMatrix& a) {
  const IntMat kernel = integer_kernel(a.rows());  // n x (n - rank)
  const int n = static_cast<int>(a.columns.size());
  const int k = kernel.empty() ? 0 : static_cast<int>(kernel[0].size());
  std::vector<Binomial> out;
  for (int c = 0; c < k; ++c) {
    Binomial b;
    b.u.assign(n, 0);
    b.v.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      const Int& z = kernel[j][c];
      if (z > 0)
        b.u[j] = static_cast<int>(z.get_si());
      else if (z < 0)
        b.v[j] = static_cast<int>(Int(-z).get_si());
    }
    // defining check: A u == A v
    for (int r = 0; r < a.dim(); ++r) {
      long long lhs = 0, rhs = 0;
      for (int j = 0; j < n; ++j) {
        lhs += static_cast<long long>(a.columns[j][r]) * b.u[j];
        rhs += static_cast<long long>(a.columns[j][r]) * b.v[j];
      }
      if (lhs != rhs)
        throw MathCheckError("kernel binomial fails A u == A v");
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::string gkz_pretty(const SupportMatrix& a) {
  std::ostringstream os;
  os << "A (" << a.dim() << " x " << a.columns.size() << "):\n";
  for (int r = 0; r < a.dim(); ++r) {
    os << " ";
    for (std::size_t c = 0; c < a.columns.size(); ++c)
      os << " " << a.columns[c][r];
    os << "\n";
  }
  os << "Euler operators (beta symbolic):\n";
  for (const EulerOperator& op : euler_operators(a)) {
    os << "  E" << op.row << " =";
    bool first = true;
    for (std::size_t j = 0; j < op.coeffs.size(); ++j) {
      if (op.coeffs[j] == 0) continue;
      os << (first ? " " : " + ");
      if (op.coeffs[j] != 1) os << op.coeffs[j] << "*";
      os << "y" << j + 1 << "*d" << j + 1;
      first = false;
    }
    if (first) os << " 0";
    os << "\n";
  }
  os << "Lattice kernel binomials:\n";
  const std::vector<Binomial> bins = lattice_kernel_binomials(a);
  if (bins.empty()) os << "  (trivial kernel)\n";
  for (const Binomial& b : bins) {
    auto mono = [&](const std::vector<int>& e) {
      std::string s;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += "d" + std::to_string(j + 1);
        if (e[j] > 1) s += "^" + std::to_string(e[j]);
      }
      return s.empty() ? std::string("1") : s;
    };
    os << "  " << mono(b.u) << " - " << mono(b.v) << "\n";
  }
  return os.str();
}

}  // namespace symanzik
