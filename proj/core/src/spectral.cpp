#include "zzlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace zzlab {

const char* spectrum_source_name(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::Numeric: return "numeric";
    case SpectrumSource::CirculantFormula: return "circulant-formula";
    case SpectrumSource::DcFormula: return "dc-formula";
  }
  return "?";
}

SpectrumReport group_multiplicities(std::vector<double> eigenvalues, SpectrumSource source,
                                    double tolerance) {
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  SpectrumReport rep;
  rep.source = source;
  rep.grouping_tolerance = tolerance;
  for (double v : eigenvalues) {
    if (!rep.multiplicities.empty() && std::abs(rep.multiplicities.back().first - v) <= tolerance)
      rep.multiplicities.back().second++;
    else
      rep.multiplicities.push_back({v, 1});
  }
  rep.eigenvalues = std::move(eigenvalues);
  return rep;
}

static SpectrumReport solve_symmetric(Eigen::MatrixXd m) {
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) fail(Errc::NotSymmetric, "matrix asymmetry " + std::to_string(asym) + " exceeds 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  return group_multiplicities(std::move(ev), SpectrumSource::Numeric);
}

SpectrumReport eigenvalues_symmetric(const IntMatrix& m) {
  Eigen::MatrixXd dense(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) dense(r, c) = static_cast<double>(m(r, c));
  return solve_symmetric(std::move(dense));
}

SpectrumReport eigenvalues_symmetric(int n, const std::vector<double>& row_major) {
  if (static_cast<std::size_t>(n) * n != row_major.size())
    fail(Errc::NotSymmetric, "matrix data does not match its size");
  Eigen::MatrixXd dense(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) dense(r, c) = row_major[static_cast<std::size_t>(r) * n + c];
  return solve_symmetric(std::move(dense));
}

std::vector<std::complex<double>> circulant_eigenvalues(const std::vector<double>& first_row) {
  const int n = static_cast<int>(first_row.size());
  std::vector<std::complex<double>> out(n);
  for (int j = 0; j < n; ++j) {
    std::complex<double> sum = 0;
    for (int k = 0; k < n; ++k) {
      double angle = 2.0 * std::numbers::pi * j * k / n;
      sum += first_row[k] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[j] = sum;
  }
  return out;
}

std::vector<std::complex<double>> circulant_eigenvector(int n, int j) {
  std::vector<std::complex<double>> v(n);
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * j * k / n;
    v[k] = {std::cos(angle), std::sin(angle)};
  }
  return v;
}

bool is_circulant(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const int n = m.rows();
  for (int r = 1; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m(r, c) != m(0, ((c - r) % n + n) % n)) return false;
  return true;
}

SpectrumReport dc_spectrum(int n) {
  if (n < 2) fail(Errc::SizeTooSmall, "double cycle needs length >= 2");
  std::vector<double> ev(n, 0.0);
  ev.reserve(2 * n);
  for (int j = 0; j < n; ++j) ev.push_back(4.0 * std::cos(2.0 * std::numbers::pi * j / n));
  return group_multiplicities(std::move(ev), SpectrumSource::DcFormula);
}

int component_count_spectral(const RotationGraph& g) {
  SpectrumReport rep = eigenvalues_symmetric(g.adjacency_matrix());
  const double d = g.degree();
  int mult = 0;
  for (double v : rep.eigenvalues)
    if (std::abs(v - d) <= 1e-6) ++mult;
  const int bfs = static_cast<int>(g.connected_components().size());
  if (mult != bfs)
    fail(Errc::MultiplicityMismatch, "eigenvalue-d multiplicity " + std::to_string(mult) +
                                         " != component count " + std::to_string(bfs));
  return mult;
}

}  // namespace zzlab
