#include "ltv/signal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace ltv {

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw InvalidArgument("a signal needs at least one sample");
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    if (!std::isfinite(samples_[k])) {
      throw NonFiniteResult("signal sample is not finite", static_cast<long>(k));
    }
  }
}

Signal Signal::zeros(long K) {
  if (K < 0) throw InvalidArgument("signal horizon must be nonnegative");
  return Signal(std::vector<double>(static_cast<std::size_t>(K) + 1, 0.0));
}

Signal Signal::unit_sample(long l, long K) {
  if (l < 0 || l > K) {
    throw InvalidArgument("unit sample position " + std::to_string(l) +
                          " outside horizon [0, " + std::to_string(K) + "]");
  }
  std::vector<double> v(static_cast<std::size_t>(K) + 1, 0.0);
  v[static_cast<std::size_t>(l)] = 1.0;
  return Signal(std::move(v));
}

Signal Signal::from_expression(const Expr& e, long K) {
  if (K < 0) throw InvalidArgument("signal horizon must be nonnegative");
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(K) + 1);
  for (long k = 0; k <= K; ++k) v.push_back(e.eval(k));
  return Signal(std::move(v));
}

double Signal::max_abs() const {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double Signal::min_value() const { return *std::min_element(samples_.begin(), samples_.end()); }

double Signal::max_value() const { return *std::max_element(samples_.begin(), samples_.end()); }

namespace {
void require_same_size(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw InvalidArgument("signal lengths differ");
}
}  // namespace

Signal operator+(const Signal& a, const Signal& b) {
  require_same_size(a, b);
  std::vector<double> v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.samples_[k] + b.samples_[k];
  return Signal(std::move(v));
}

Signal operator-(const Signal& a, const Signal& b) {
  require_same_size(a, b);
  std::vector<double> v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.samples_[k] - b.samples_[k];
  return Signal(std::move(v));
}

Signal operator*(double scale, const Signal& s) {
  std::vector<double> v(s.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = scale * s.samples_[k];
  return Signal(std::move(v));
}

bool approx_equal(const Signal& a, const Signal& b, const Tolerance& tol) {
  if (a.size() != b.size()) return false;
  for (long k = 0; k <= a.horizon(); ++k) {
    if (!approx_equal(a[k], b[k], tol)) return false;
  }
  return true;
}

double max_abs_difference(const Signal& a, const Signal& b) {
  require_same_size(a, b);
  double m = 0.0;
  for (long k = 0; k <= a.horizon(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

void write_csv(const std::filesystem::path& path, const Signal& s) {
  std::ofstream out(path, std::ios::binary);  // binary: no platform newline translation
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "k,value\n";
  char buf[64];
  for (long k = 0; k <= s.horizon(); ++k) {
    std::snprintf(buf, sizeof(buf), "%ld,%.17g\n", k, s[k]);
    out << buf;
  }
  if (!out) throw IoError("write failed for " + path.string());
}

Signal read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV file " + path.string());
  std::vector<double> v;
  long expected_k = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError("malformed CSV row in " + path.string());
    long k = 0;
    auto [kp, kerr] = std::from_chars(line.data(), line.data() + comma, k);
    if (kerr != std::errc() || kp != line.data() + comma || k != expected_k) {
      throw IoError("malformed sample index in " + path.string());
    }
    // from_chars round-trips every finite double, subnormals included
    double value = 0.0;
    const char* begin = line.data() + comma + 1;
    const char* end = line.data() + line.size();
    auto [vp, verr] = std::from_chars(begin, end, value);
    if (verr != std::errc() || vp != end) {
      throw IoError("malformed sample value in " + path.string());
    }
    v.push_back(value);
    ++expected_k;
  }
  return Signal(std::move(v));
}

}  // namespace ltv
