#ifndef VTB_SIGNAL_IO_HPP
#define VTB_SIGNAL_IO_HPP

#include <filesystem>

#include "vtb/signal.hpp"

namespace vtb {

/// CSV layout: mandatory header `time_s,<ch0>,<ch1>,...`, one row per sample,
/// values printed with 17 significant digits so a rewrite of identical data is
/// byte-identical.
void write_signal_csv(const Signal& signal, const std::filesystem::path& path);
Signal read_signal_csv(const std::filesystem::path& path);

/// Compact binary twin. Fixed layout, little-endian:
///   bytes 0-7   magic "VTBSIG01"
///   u8          unstable flag
///   f64         sample_rate [Hz]
///   f64         t0 [s]
///   u32         channel count C, then C x { u32 name length, name bytes }
///   u64         row count N
///   N*C f64     samples, row-major
void write_signal_binary(const Signal& signal, const std::filesystem::path& path);
Signal read_signal_binary(const std::filesystem::path& path);

}  // namespace vtb

#endif
