#ifndef VTB_SIGNAL_HPP
#define VTB_SIGNAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vtb/error.hpp"

namespace vtb {

/// Uniformly sampled multichannel time series. Rows are time steps, columns
/// are channels. `unstable` marks records truncated by a divergence watchdog.
struct Signal {
  double sample_rate = 0.0;  // Hz
  double t0 = 0.0;           // s
  std::vector<std::string> channels;
  Eigen::MatrixXd data;
  bool unstable = false;

  Eigen::Index rows() const { return data.rows(); }
  Eigen::Index n_channels() const { return data.cols(); }
  double dt() const { return 1.0 / sample_rate; }
  double duration() const { return static_cast<double>(rows()) / sample_rate; }
  double time_at(Eigen::Index i) const { return t0 + static_cast<double>(i) / sample_rate; }

  Eigen::Index channel_index(std::string_view label) const;
  Eigen::VectorXd channel(std::string_view label) const { return data.col(channel_index(label)); }

  /// Throws if the basic invariants (positive rate, label/column match) fail.
  void validate() const;
};

struct MultisineSpec {
  double f_min = 0.0;          // Hz
  double f_max = 0.0;          // Hz
  double rms_level = 1.0;      // signal units
  double sample_rate = 0.0;    // Hz
  int n_points_per_block = 0;  // power of two
  int n_blocks = 1;
  int n_realizations = 1;
  std::uint64_t seed = 0;
};

struct Spectrum {
  Eigen::VectorXd frequencies;   // Hz, strictly increasing
  Eigen::MatrixXcd amplitudes;   // bins x channels
};

/// One row per detected full cycle of oscillation.
struct InstantaneousEnvelope {
  Eigen::VectorXd times;  // s, cycle midpoints
  Eigen::VectorXd freq;   // Hz
  Eigen::VectorXd amp;    // signal units
};

/// Periodic signal with constant magnitude on the DFT bins inside
/// [f_min, f_max] and uniform random phases; n_blocks identical repetitions of
/// one block, scaled so the RMS equals spec.rms_level exactly. The phase
/// stream is SplitMix64 keyed by (seed, realization_index).
Signal gen_multisine(const MultisineSpec& spec, int realization_index);

/// Constant-amplitude sine whose instantaneous frequency ramps linearly from
/// f_start to f_end at `rate` Hz/s; phase is the exact integral of the
/// instantaneous frequency.
Signal gen_sweep(double f_start_hz, double f_end_hz, double rate_hz_per_s,
                 double amplitude, double sample_rate);

/// Cycle-wise instantaneous frequency and amplitude from rising-edge zero
/// crossings (sub-sample crossing location by linear interpolation). The
/// amplitude of a cycle is the maximum absolute value between its bounding
/// crossings. The channel mean is removed before detection.
InstantaneousEnvelope extract_instantaneous(const Signal& signal, std::string_view channel);

/// sqrt(mean((y_test - y_sim)^2)) / sqrt(mean(y_test^2)).
double rms_rel_error(const Eigen::VectorXd& y_test, const Eigen::VectorXd& y_sim);

/// Complex fundamental coefficient S with s(t) ~ Re(S * exp(i*2*pi*freq*t)),
/// averaged over the last n_periods full periods of the record. Time is
/// absolute (t0 included) so the phase is referenced to t = 0.
std::complex<double> fundamental_harmonic(const Signal& signal, std::string_view channel,
                                          double freq_hz, int n_periods);

/// One-sided DFT of every channel over the full record; a unit-amplitude
/// sinusoid on an exact bin yields magnitude 1 on that bin.
Spectrum dft_spectrum(const Signal& signal);

}  // namespace vtb

#endif
