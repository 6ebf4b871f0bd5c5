#include "vtb/signal.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vtb/prng.hpp"

namespace vtb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Eigen::Index Signal::channel_index(std::string_view label) const {
  for (std::size_t i = 0; i < channels.size(); ++i)
    if (channels[i] == label) return static_cast<Eigen::Index>(i);
  throw Error(ErrorCode::invalid_argument, "signal: no channel named '" + std::string(label) + "'");
}

void Signal::validate() const {
  if (!(sample_rate > 0.0))
    throw Error(ErrorCode::invalid_argument, "signal: sample_rate must be > 0");
  if (static_cast<Eigen::Index>(channels.size()) != data.cols())
    throw Error(ErrorCode::invalid_argument, "signal: channel label count != data columns");
  if (!unstable && !data.allFinite())
    throw Error(ErrorCode::invalid_argument, "signal: non-finite samples without unstable flag");
}

Signal gen_multisine(const MultisineSpec& spec, int realization_index) {
  if (!(spec.sample_rate > 0.0) || !(spec.f_min > 0.0) || !(spec.f_min < spec.f_max) ||
      !(spec.f_max < spec.sample_rate / 2.0))
    throw Error(ErrorCode::config, "multisine: need 0 < f_min < f_max < fs/2");
  if (!is_power_of_two(spec.n_points_per_block))
    throw Error(ErrorCode::config, "multisine: n_points_per_block must be a power of two");
  if (spec.n_blocks < 1 || realization_index < 0)
    throw Error(ErrorCode::config, "multisine: n_blocks >= 1, realization_index >= 0");

  const int n = spec.n_points_per_block;
  const double df = spec.sample_rate / n;
  const int k_lo = static_cast<int>(std::ceil(spec.f_min / df - 1e-9));
  const int k_hi = static_cast<int>(std::floor(spec.f_max / df + 1e-9));
  const int k_min = std::max(1, k_lo);
  const int k_max = std::min(n / 2 - 1, k_hi);
  if (k_min > k_max)
    throw Error(ErrorCode::config, "multisine: no DFT bin inside [f_min, f_max]");

  SplitMix64 rng(stream_seed(spec.seed, static_cast<std::uint64_t>(realization_index)));
  Eigen::VectorXd block = Eigen::VectorXd::Zero(n);
  for (int k = k_min; k <= k_max; ++k) {
    const double phase = kTwoPi * rng.next_double();
    const double w = kTwoPi * k / n;
    for (int j = 0; j < n; ++j) block(j) += std::cos(w * j + phase);
  }

  const double rms = std::sqrt(block.squaredNorm() / n);
  block *= spec.rms_level / rms;

  Signal out;
  out.sample_rate = spec.sample_rate;
  out.channels = {"u"};
  out.data.resize(static_cast<Eigen::Index>(n) * spec.n_blocks, 1);
  for (int b = 0; b < spec.n_blocks; ++b) out.data.col(0).segment(static_cast<Eigen::Index>(b) * n, n) = block;
  return out;
}

Signal gen_sweep(double f_start_hz, double f_end_hz, double rate_hz_per_s,
                 double amplitude, double sample_rate) {
  if (f_start_hz == f_end_hz || !(rate_hz_per_s > 0.0))
    throw Error(ErrorCode::invalid_argument, "sweep: f_start != f_end and rate > 0 required");
  if (!(sample_rate > 2.0 * std::max(f_start_hz, f_end_hz)))
    throw Error(ErrorCode::invalid_argument, "sweep: fs must exceed 2*max frequency");

  const double direction = f_end_hz > f_start_hz ? 1.0 : -1.0;
  const double duration = std::abs(f_end_hz - f_start_hz) / rate_hz_per_s;
  const auto n = static_cast<Eigen::Index>(std::llround(duration * sample_rate));

  Signal out;
  out.sample_rate = sample_rate;
  out.channels = {"u"};
  out.data.resize(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    const double phase = kTwoPi * (f_start_hz * t + 0.5 * direction * rate_hz_per_s * t * t);
    out.data(i, 0) = amplitude * std::sin(phase);
  }
  return out;
}

InstantaneousEnvelope extract_instantaneous(const Signal& signal, std::string_view channel) {
  Eigen::VectorXd x = signal.channel(channel);
  x.array() -= x.mean();
  const double dt = signal.dt();

  Eigen::Index n_sign_changes = 0;
  std::vector<double> rising;        // crossing times, sub-sample
  std::vector<Eigen::Index> r_idx;   // sample index just before each crossing
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    if (x(i) == 0.0) continue;
    if (x(i) * x(i + 1) < 0.0 || (x(i + 1) == 0.0 && x(i) != 0.0)) ++n_sign_changes;
    if (x(i) < 0.0 && x(i + 1) >= 0.0) {
      const double tau = x(i) / (x(i) - x(i + 1));
      rising.push_back(signal.t0 + (static_cast<double>(i) + tau) * dt);
      r_idx.push_back(i);
    }
  }
  if (n_sign_changes < 3 || rising.size() < 2)
    throw Error(ErrorCode::extraction, "extract_instantaneous: fewer than 3 zero crossings");

  const auto n_cycles = static_cast<Eigen::Index>(rising.size()) - 1;
  InstantaneousEnvelope env;
  env.times.resize(n_cycles);
  env.freq.resize(n_cycles);
  env.amp.resize(n_cycles);
  for (Eigen::Index c = 0; c < n_cycles; ++c) {
    env.times(c) = 0.5 * (rising[c] + rising[c + 1]);
    env.freq(c) = 1.0 / (rising[c + 1] - rising[c]);
    double peak = 0.0;
    for (Eigen::Index i = r_idx[c]; i <= r_idx[c + 1] + 1 && i < x.size(); ++i)
      peak = std::max(peak, std::abs(x(i)));
    env.amp(c) = peak;
  }
  return env;
}

double rms_rel_error(const Eigen::VectorXd& y_test, const Eigen::VectorXd& y_sim) {
  if (y_test.size() == 0 || y_test.size() != y_sim.size())
    throw Error(ErrorCode::invalid_argument, "rms_rel_error: length mismatch or empty input");
  const double denom = y_test.squaredNorm();
  if (denom == 0.0)
    throw Error(ErrorCode::invalid_argument, "rms_rel_error: y_test is identically zero");
  return std::sqrt((y_test - y_sim).squaredNorm() / denom);
}

std::complex<double> fundamental_harmonic(const Signal& signal, std::string_view channel,
                                          double freq_hz, int n_periods) {
  if (!(freq_hz > 0.0) || n_periods < 1)
    throw Error(ErrorCode::invalid_argument, "fundamental_harmonic: freq > 0 and n_periods >= 1");
  const auto n_win =
      static_cast<Eigen::Index>(std::llround(n_periods * signal.sample_rate / freq_hz));
  if (n_win > signal.rows() || n_win < 2)
    throw Error(ErrorCode::invalid_argument, "fundamental_harmonic: window exceeds record length");

  const Eigen::VectorXd x = signal.channel(channel);
  const Eigen::Index start = signal.rows() - n_win;
  const double omega = kTwoPi * freq_hz;
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index j = 0; j < n_win; ++j) {
    const double t = signal.time_at(start + j);
    acc += x(start + j) * std::exp(std::complex<double>(0.0, -omega * t));
  }
  return 2.0 * acc / static_cast<double>(n_win);
}

Spectrum dft_spectrum(const Signal& signal) {
  const Eigen::Index n = signal.rows();
  const Eigen::Index n_bins = n / 2 + 1;
  Spectrum spec;
  spec.frequencies.resize(n_bins);
  for (Eigen::Index k = 0; k < n_bins; ++k)
    spec.frequencies(k) = static_cast<double>(k) * signal.sample_rate / static_cast<double>(n);
  spec.amplitudes.resize(n_bins, signal.n_channels());

  Eigen::FFT<double> fft;
  std::vector<double> in(static_cast<std::size_t>(n));
  std::vector<std::complex<double>> out;
  for (Eigen::Index c = 0; c < signal.n_channels(); ++c) {
    for (Eigen::Index i = 0; i < n; ++i) in[static_cast<std::size_t>(i)] = signal.data(i, c);
    fft.fwd(out, in);
    for (Eigen::Index k = 0; k < n_bins; ++k) {
      const bool edge = (k == 0) || (n % 2 == 0 && k == n / 2);
      const double scale = (edge ? 1.0 : 2.0) / static_cast<double>(n);
      spec.amplitudes(k, c) = scale * out[static_cast<std::size_t>(k)];
    }
  }
  return spec;
}

}  // namespace vtb
