#include "prosodiff/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace prosodiff {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_real(const std::string& s, const std::string& what) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("invalid real value '" + s + "' for key '" + what + "'");
  return v;
}

long parse_int(const std::string& s, const std::string& what) {
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("invalid integer value '" + s + "' for key '" + what + "'");
  return v;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("invalid config: " + msg); };
  if (mel_bins < 1) fail("mel_bins must be >= 1");
  if (prosody_band < 1 || prosody_band > mel_bins) fail("prosody_band must be in [1, mel_bins]");
  if (codebook_size < 2) fail("codebook_size must be >= 2");
  if (code_dim < 1) fail("code_dim must be >= 1");
  if (k_references < 1) fail("k_references must be >= 1");
  if (vocab_size < 2) fail("vocab_size must be >= 2");
  if (n_prosody_classes < 1) fail("n_prosody_classes must be >= 1");
  if (!(beta1 > beta0 && beta0 > 0)) fail("need beta1 > beta0 > 0");
  if (!(terminal_time > 0)) fail("terminal_time must be > 0");
  if (!(t_min > 0 && t_min < terminal_time)) fail("t_min must be in (0, terminal_time)");
  if (batch_size < 1) fail("batch_size must be >= 1");
  if (min_phonemes < 1 || max_phonemes < min_phonemes) fail("need max_phonemes >= min_phonemes >= 1");
  if (prior_min_frames > prior_max_frames) fail("need prior_max_frames >= prior_min_frames");
  if (seed < 0) fail("seed must be >= 0");
}

std::string RunConfig::to_text() const {
  std::ostringstream out;
#define P_INT(name) out << #name << "=" << name << "\n";
#define P_REAL(name)                                                     \
  if (!std::isnan(name)) out << #name << "=" << format_real(name) << "\n";
#define P_STR(name) out << #name << "=" << name << "\n";
  PROSODIFF_CONFIG_INT_FIELDS(P_INT)
  PROSODIFF_CONFIG_REAL_FIELDS(P_REAL)
  PROSODIFF_CONFIG_STR_FIELDS(P_STR)
#undef P_INT
#undef P_REAL
#undef P_STR
  return out.str();
}

void RunConfig::set(const std::string& key, const std::string& value) {
#define S_INT(name)                      \
  if (key == #name) {                    \
    name = parse_int(value, key);        \
    return;                              \
  }
#define S_REAL(name)                     \
  if (key == #name) {                    \
    name = parse_real(value, key);       \
    return;                              \
  }
#define S_STR(name)                      \
  if (key == #name) {                    \
    name = value;                        \
    return;                              \
  }
  PROSODIFF_CONFIG_INT_FIELDS(S_INT)
  PROSODIFF_CONFIG_REAL_FIELDS(S_REAL)
  PROSODIFF_CONFIG_STR_FIELDS(S_STR)
#undef S_INT
#undef S_REAL
#undef S_STR
  throw ConfigError("unknown config key '" + key + "'");
}

bool RunConfig::is_known_key(const std::string& key) {
#define K_CHECK(name) \
  if (key == #name) return true;
  PROSODIFF_CONFIG_INT_FIELDS(K_CHECK)
  PROSODIFF_CONFIG_REAL_FIELDS(K_CHECK)
  PROSODIFF_CONFIG_STR_FIELDS(K_CHECK)
#undef K_CHECK
  return false;
}

namespace {
std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}
}  // namespace

RunConfig RunConfig::from_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

void RunConfig::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write config file '" + path + "'");
  out << to_text();
}

std::string RunConfig::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (char c : to_text()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

}  // namespace prosodiff
