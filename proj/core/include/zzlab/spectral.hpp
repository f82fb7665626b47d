#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "zzlab/core.hpp"

namespace zzlab {

enum class SpectrumSource { Numeric, CirculantFormula, DcFormula };

const char* spectrum_source_name(SpectrumSource s);

struct SpectrumReport {
  SpectrumSource source = SpectrumSource::Numeric;
  std::vector<double> eigenvalues;                    // sorted descending
  std::vector<std::pair<double, int>> multiplicities;  // grouped at tolerance
  double grouping_tolerance = 1e-6;
};

SpectrumReport group_multiplicities(std::vector<double> eigenvalues, SpectrumSource source,
                                    double tolerance = 1e-6);

// Full symmetric eigensolve; input must be symmetric within 1e-12.
SpectrumReport eigenvalues_symmetric(const IntMatrix& m);
SpectrumReport eigenvalues_symmetric(int n, const std::vector<double>& row_major);

// lambda_j = sum_k c_k w^{jk} with w = exp(2 pi i / n).
std::vector<std::complex<double>> circulant_eigenvalues(const std::vector<double>& first_row);
// v_j = (1, w^j, w^{2j}, ...).
std::vector<std::complex<double>> circulant_eigenvector(int n, int j);

bool is_circulant(const IntMatrix& m);

// Spectrum of the double cycle of length n: n zeros plus 4cos(2 pi j / n),
// j = 0..n-1.
SpectrumReport dc_spectrum(int n);

// Multiplicity of the eigenvalue `degree` (tolerance 1e-6), cross-checked
// against the BFS component count.
int component_count_spectral(const RotationGraph& g);

}  // namespace zzlab
