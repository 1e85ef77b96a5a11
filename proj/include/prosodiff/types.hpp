#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace prosodiff {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using MatF = Mat<float>;
using MatD = Mat<double>;

// Log-magnitude frame-by-bin matrix, the universal speech representation.
struct MelSpectrogram {
  MatF values;  // [frames x bins]

  int frames() const { return static_cast<int>(values.rows()); }
  int bins() const { return static_cast<int>(values.cols()); }

  void validate(int expected_bins) const {
    if (frames() < 1) throw std::invalid_argument("mel must have at least one frame");
    if (bins() != expected_bins)
      throw std::invalid_argument("mel has " + std::to_string(bins()) + " bins, expected " +
                                  std::to_string(expected_bins));
    if (!values.allFinite()) throw std::invalid_argument("mel contains non-finite values");
  }
};

struct PhonemeSequence {
  std::vector<int> ids;

  void validate(int vocab_size) const {
    if (ids.empty()) throw std::invalid_argument("phoneme sequence must be non-empty");
    for (int id : ids)
      if (id < 0 || id >= vocab_size)
        throw std::invalid_argument("phoneme id " + std::to_string(id) + " outside vocab of " +
                                    std::to_string(vocab_size));
  }

  size_t size() const { return ids.size(); }
};

// Per-phoneme frame counts; sums to the paired mel's frame count.
struct DurationSequence {
  std::vector<int> frames_per_phoneme;

  int total() const {
    int t = 0;
    for (int d : frames_per_phoneme) t += d;
    return t;
  }

  void validate() const {
    if (frames_per_phoneme.empty()) throw std::invalid_argument("duration sequence must be non-empty");
    for (int d : frames_per_phoneme)
      if (d < 1) throw std::invalid_argument("durations must be >= 1");
  }

  size_t size() const { return frames_per_phoneme.size(); }
};

// Phoneme-aligned indices into the learned prosody codebook.
struct ProsodyCodeSequence {
  std::vector<int> codes;

  void validate(int codebook_size, size_t phoneme_count) const {
    if (codes.size() != phoneme_count)
      throw std::invalid_argument("code sequence length does not match phoneme count");
    for (int c : codes)
      if (c < 0 || c >= codebook_size)
        throw std::invalid_argument("prosody code " + std::to_string(c) + " outside codebook of " +
                                    std::to_string(codebook_size));
  }
};

// Fixed-size continuous speaker embedding.
struct TimbreVector {
  Eigen::VectorXf values;

  int dim() const { return static_cast<int>(values.size()); }
};

// Raw-float mel file IO (little-endian float32, row-major [frames x bins]).
void save_mel(const std::string& path, const MatF& mel);
MatF load_mel(const std::string& path, int bins);

}  // namespace prosodiff
