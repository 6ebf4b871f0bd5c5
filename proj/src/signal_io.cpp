#include "vtb/signal_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace vtb {

namespace {

constexpr char kMagic[8] = {'V', 'T', 'B', 'S', 'I', 'G', '0', '1'};

void atomic_replace(const std::filesystem::path& tmp, const std::filesystem::path& path) {
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::io, "cannot move temporary file onto " + path.string());
  }
}

}  // namespace

void write_signal_csv(const Signal& signal, const std::filesystem::path& path) {
  signal.validate();
  const std::filesystem::path tmp = path.string() + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "w");
  if (!f) throw Error(ErrorCode::io, "cannot open " + tmp.string() + " for writing");

  std::fputs("time_s", f);
  for (const auto& ch : signal.channels) std::fprintf(f, ",%s", ch.c_str());
  std::fputc('\n', f);
  for (Eigen::Index i = 0; i < signal.rows(); ++i) {
    std::fprintf(f, "%.17g", signal.time_at(i));
    for (Eigen::Index c = 0; c < signal.n_channels(); ++c)
      std::fprintf(f, ",%.17g", signal.data(i, c));
    std::fputc('\n', f);
  }
  if (std::fclose(f) != 0) throw Error(ErrorCode::io, "write failed: " + tmp.string());
  atomic_replace(tmp, path);
}

Signal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::io, "empty CSV: " + path.string());
  Signal sig;
  {
    std::stringstream ss(line);
    std::string field;
    if (!std::getline(ss, field, ',') || field != "time_s")
      throw Error(ErrorCode::io, "CSV header must start with time_s: " + path.string());
    while (std::getline(ss, field, ',')) sig.channels.push_back(field);
  }
  if (sig.channels.empty()) throw Error(ErrorCode::io, "CSV has no channel columns: " + path.string());

  std::vector<double> times;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::getline(ss, field, ',');
    times.push_back(std::strtod(field.c_str(), nullptr));
    for (std::size_t c = 0; c < sig.channels.size(); ++c) {
      if (!std::getline(ss, field, ','))
        throw Error(ErrorCode::io, "CSV row with missing columns: " + path.string());
      values.push_back(std::strtod(field.c_str(), nullptr));
    }
  }
  if (times.size() < 2) throw Error(ErrorCode::io, "CSV needs >= 2 rows: " + path.string());

  sig.t0 = times.front();
  sig.sample_rate = (static_cast<double>(times.size()) - 1.0) / (times.back() - times.front());
  const auto n = static_cast<Eigen::Index>(times.size());
  const auto nc = static_cast<Eigen::Index>(sig.channels.size());
  sig.data.resize(n, nc);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index c = 0; c < nc; ++c)
      sig.data(i, c) = values[static_cast<std::size_t>(i * nc + c)];
  return sig;
}

void write_signal_binary(const Signal& signal, const std::filesystem::path& path) {
  signal.validate();
  const std::filesystem::path tmp = path.string() + ".tmp";
  std::ofstream out(tmp, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open " + tmp.string() + " for writing");

  out.write(kMagic, sizeof(kMagic));
  const std::uint8_t flag = signal.unstable ? 1 : 0;
  out.write(reinterpret_cast<const char*>(&flag), 1);
  out.write(reinterpret_cast<const char*>(&signal.sample_rate), 8);
  out.write(reinterpret_cast<const char*>(&signal.t0), 8);
  const auto nc = static_cast<std::uint32_t>(signal.channels.size());
  out.write(reinterpret_cast<const char*>(&nc), 4);
  for (const auto& ch : signal.channels) {
    const auto len = static_cast<std::uint32_t>(ch.size());
    out.write(reinterpret_cast<const char*>(&len), 4);
    out.write(ch.data(), len);
  }
  const auto n = static_cast<std::uint64_t>(signal.rows());
  out.write(reinterpret_cast<const char*>(&n), 8);
  for (Eigen::Index i = 0; i < signal.rows(); ++i)
    for (Eigen::Index c = 0; c < signal.n_channels(); ++c)
      out.write(reinterpret_cast<const char*>(&signal.data(i, c)), 8);
  if (!out) throw Error(ErrorCode::io, "write failed: " + tmp.string());
  out.close();
  atomic_replace(tmp, path);
}

Signal read_signal_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());

  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw Error(ErrorCode::io, "bad magic in " + path.string());

  Signal sig;
  std::uint8_t flag = 0;
  in.read(reinterpret_cast<char*>(&flag), 1);
  sig.unstable = flag != 0;
  in.read(reinterpret_cast<char*>(&sig.sample_rate), 8);
  in.read(reinterpret_cast<char*>(&sig.t0), 8);
  std::uint32_t nc = 0;
  in.read(reinterpret_cast<char*>(&nc), 4);
  for (std::uint32_t c = 0; c < nc; ++c) {
    std::uint32_t len = 0;
    in.read(reinterpret_cast<char*>(&len), 4);
    std::string name(len, '\0');
    in.read(name.data(), len);
    sig.channels.push_back(std::move(name));
  }
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), 8);
  sig.data.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(nc));
  for (Eigen::Index i = 0; i < sig.data.rows(); ++i)
    for (Eigen::Index c = 0; c < sig.data.cols(); ++c)
      in.read(reinterpret_cast<char*>(&sig.data(i, c)), 8);
  if (!in) throw Error(ErrorCode::io, "truncated binary signal: " + path.string());
  return sig;
}

}  // namespace vtb
