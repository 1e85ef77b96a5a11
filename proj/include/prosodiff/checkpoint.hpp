#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prosodiff {

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TensorRecord {
  std::string name;
  std::vector<long> shape;
  bool trainable = true;
  std::vector<float> data;  // row-major

  long numel() const {
    long n = 1;
    for (long d : shape) n *= d;
    return n;
  }
};

// Named-tensor archive: magic "STTS1", a length-prefixed UTF-8 manifest
// block, then raw little-endian float32 payload in manifest order.
// Loading then saving is byte-identical.
struct Checkpoint {
  std::vector<TensorRecord> tensors;
  std::vector<std::pair<std::string, std::string>> metadata;  // ordered

  const TensorRecord* find(const std::string& name) const;
  TensorRecord* find(const std::string& name);
  const std::string* meta(const std::string& key) const;
  void set_meta(const std::string& key, const std::string& value);

  void save(const std::string& path) const;
  static Checkpoint load(const std::string& path);
};

}  // namespace prosodiff
