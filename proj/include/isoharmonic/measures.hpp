#pragma once

#include "isoharmonic/periods.hpp"

namespace isoharmonic {

// eta = k(z) dz / v on the even-degree model of E; k monic, so the residues are -+1 at inf+-.
struct EtaData {
  PolyR k;
  Eigen::VectorXd gap_zeros;  // one per gap, ascending
};

EtaData eta(const IntervalSystem& E, const QuadOptions& opt = {});
// Masses indexed like the intervals: entry k-1 is interval k = [c_{2k}, c_{2k-1}].
Eigen::VectorXd equilibrium_measure(const IntervalSystem& E, const QuadOptions& opt = {});
// f_j = masses of the j leftmost intervals, j = 1..d-1.
Eigen::VectorXd frequency_map(const IntervalSystem& E, const QuadOptions& opt = {});
Eigen::VectorXd partial_sums(const Eigen::VectorXd& ascending_masses);

// eta_hat = khat(u) du / ((u - y0) v) on the normalized model, khat(y0) = -v(Q0).
struct EtaHatData {
  DifferentialRep rep;  // numerator khat, pole y0
  PolyR h;              // khat = -v0 h with h real, h(y0) = 1
  cplx v0;
};

EtaHatData eta_hat(const TCurveConfig& config, const QuadOptions& opt = {});

struct HarmonicMeasures {
  Eigen::VectorXd masses;  // bands ascending, last one unbounded; renormalized
  double raw_sum = 0.0;    // sum before renormalization
};

HarmonicMeasures harmonic_measures(const TCurveConfig& config, const QuadOptions& opt = {});
// Harmonic measures of the intervals of E at y0 (outside E), indexed like equilibrium_measure.
Eigen::VectorXd harmonic_measures(const IntervalSystem& E, double y0, const QuadOptions& opt = {});
// Frequencies of the normalized configuration: partial sums of the first g bands.
Eigen::VectorXd harmonic_frequencies(const TCurveConfig& config, const QuadOptions& opt = {});

// Complex Green function G = int_{c_{2d}}^z eta, for Im z >= 0. Re G = log|z| + O(1) at infinity.
cplx green_function(const IntervalSystem& E, cplx z, const QuadOptions& opt = {});
cplx green_function(const IntervalSystem& E, const EtaData& et, cplx z, const QuadOptions& opt = {});
// Pole at a finite real y0 outside E, through w = 1/(z - y0).
cplx green_function(const IntervalSystem& E, cplx z, double y0, const QuadOptions& opt = {});
// G_{E_x}(z, y0) = int_0^z eta_hat on the normalized model.
cplx green_function(const TCurveConfig& config, const EtaHatData& eh, cplx z, const QuadOptions& opt = {});

}  // namespace isoharmonic
