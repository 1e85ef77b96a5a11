#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prosodiff {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Run-wide configuration. Serialized as flat key=value text, one pair per
// line, '#' comments. Unknown keys are hard errors.
//
// X(name) for int fields, R(name) for real fields, S(name) for strings.
#define PROSODIFF_CONFIG_INT_FIELDS(X) \
  X(mel_bins)                          \
  X(prosody_band)                      \
  X(codebook_size)                     \
  X(code_dim)                          \
  X(d_h)                               \
  X(d_s)                               \
  X(d_plm)                             \
  X(plm_layers)                        \
  X(plm_heads)                         \
  X(enc_heads)                         \
  X(est_hidden)                        \
  X(est_blocks)                        \
  X(vocab_size)                        \
  X(n_prosody_classes)                 \
  X(k_references)                      \
  X(pretrain_steps)                    \
  X(plm_steps)                         \
  X(finetune_steps)                    \
  X(batch_size)                        \
  X(prior_pool_size)                   \
  X(prior_min_frames)                  \
  X(prior_max_frames)                  \
  X(sample_steps)                      \
  X(n_speakers)                        \
  X(n_utts_per_speaker)                \
  X(min_phonemes)                      \
  X(max_phonemes)                      \
  X(seed)

#define PROSODIFF_CONFIG_REAL_FIELDS(R) \
  R(beta0)                              \
  R(beta1)                              \
  R(terminal_time)                      \
  R(t_min)                              \
  R(lr_pretrain)                        \
  R(lr_plm)                             \
  R(lr_finetune)                        \
  R(lambda_ppl)                         \
  R(noise_snr_db)                       \
  R(noise_clip)

#define PROSODIFF_CONFIG_STR_FIELDS(S) S(noise_kind)

struct RunConfig {
  // model
  long mel_bins = 80;
  long prosody_band = 15;
  long codebook_size = 128;
  long code_dim = 16;
  long d_h = 128;
  long d_s = 64;
  long d_plm = 128;
  long plm_layers = 4;
  long plm_heads = 4;
  long enc_heads = 4;
  long est_hidden = 160;
  long est_blocks = 2;
  long vocab_size = 16;
  long n_prosody_classes = 4;
  long k_references = 3;

  // training
  long pretrain_steps = 2000;
  long plm_steps = 2000;
  long finetune_steps = 500;
  long batch_size = 8;
  long prior_pool_size = 16;
  long prior_min_frames = 100;
  long prior_max_frames = 150;
  long sample_steps = 100;

  // corpus
  long n_speakers = 8;
  long n_utts_per_speaker = 40;
  long min_phonemes = 8;
  long max_phonemes = 30;

  long seed = 0;

  // diffusion schedule and optimizers
  double beta0 = 0.05;
  double beta1 = 20.0;
  double terminal_time = 1.0;
  double t_min = 1e-4;
  double lr_pretrain = 1e-3;
  double lr_plm = 1e-3;
  double lr_finetune = 1e-4;
  double lambda_ppl = 1.0;

  // corpus corruption; NaN means "not set"
  double noise_snr_db = std::numeric_limits<double>::quiet_NaN();
  double noise_clip = std::numeric_limits<double>::quiet_NaN();
  std::string noise_kind = "broadband";

  void validate() const;

  // Canonical text form (fixed key order, shortest float round-trip).
  std::string to_text() const;
  void set(const std::string& key, const std::string& value);

  static RunConfig from_text(const std::string& text);
  static RunConfig from_file(const std::string& path);
  void save(const std::string& path) const;

  static bool is_known_key(const std::string& key);

  // FNV-1a hash of the canonical text, as 16 hex chars.
  std::string hash() const;
};

std::string format_real(double v);
double parse_real(const std::string& s, const std::string& what);
long parse_int(const std::string& s, const std::string& what);

}  // namespace prosodiff
