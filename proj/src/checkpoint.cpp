#include "prosodiff/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little, "checkpoint format assumes a little-endian host");

namespace prosodiff {

const TensorRecord* Checkpoint::find(const std::string& name) const {
  for (const auto& t : tensors)
    if (t.name == name) return &t;
  return nullptr;
}

TensorRecord* Checkpoint::find(const std::string& name) {
  for (auto& t : tensors)
    if (t.name == name) return &t;
  return nullptr;
}

const std::string* Checkpoint::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return &v;
  return nullptr;
}

void Checkpoint::set_meta(const std::string& key, const std::string& value) {
  for (auto& [k, v] : metadata) {
    if (k == key) {
      v = value;
      return;
    }
  }
  metadata.emplace_back(key, value);
}

namespace {
constexpr char kMagic[5] = {'S', 'T', 'T', 'S', '1'};
}

void Checkpoint::save(const std::string& path) const {
  std::ostringstream man;
  for (const auto& [k, v] : metadata) man << "meta " << k << "=" << v << "\n";
  for (const auto& t : tensors) {
    man << "tensor " << t.name << " " << (t.trainable ? "trainable" : "frozen") << " " << t.shape.size();
    for (long d : t.shape) man << " " << d;
    man << "\n";
    if (t.numel() != static_cast<long>(t.data.size()))
      throw CheckpointError("tensor '" + t.name + "' data size does not match its shape");
  }
  std::string manifest = man.str();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw CheckpointError("cannot open '" + path + "' for writing");
  out.write(kMagic, sizeof(kMagic));
  uint64_t len = manifest.size();
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(manifest.data(), static_cast<std::streamsize>(manifest.size()));
  for (const auto& t : tensors)
    out.write(reinterpret_cast<const char*>(t.data.data()),
              static_cast<std::streamsize>(t.data.size() * sizeof(float)));
  if (!out) throw CheckpointError("write failed for '" + path + "'");
}

Checkpoint Checkpoint::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint '" + path + "'");

  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw CheckpointError("corrupt manifest: bad magic in '" + path + "'");

  uint64_t len = 0;
  if (!in.read(reinterpret_cast<char*>(&len), sizeof(len)))
    throw CheckpointError("corrupt manifest: missing length in '" + path + "'");
  std::string manifest(len, '\0');
  if (!in.read(manifest.data(), static_cast<std::streamsize>(len)))
    throw CheckpointError("corrupt manifest: manifest block shorter than its declared length");

  Checkpoint ckpt;
  std::istringstream ms(manifest);
  std::string line;
  while (std::getline(ms, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "meta") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw CheckpointError("corrupt manifest: meta line without '='");
      ckpt.metadata.emplace_back(rest.substr(0, eq), rest.substr(eq + 1));
    } else if (kind == "tensor") {
      TensorRecord t;
      size_t ndim = 0;
      std::string role;
      if (!(ls >> t.name >> role >> ndim)) throw CheckpointError("corrupt manifest: malformed tensor line");
      if (role == "trainable")
        t.trainable = true;
      else if (role == "frozen")
        t.trainable = false;
      else
        throw CheckpointError("corrupt manifest: unknown tensor role '" + role + "'");
      for (size_t i = 0; i < ndim; ++i) {
        long d = 0;
        if (!(ls >> d) || d < 1) throw CheckpointError("corrupt manifest: bad shape for tensor '" + t.name + "'");
        t.shape.push_back(d);
      }
      ckpt.tensors.push_back(std::move(t));
    } else {
      throw CheckpointError("corrupt manifest: unknown record kind '" + kind + "'");
    }
  }

  for (auto& t : ckpt.tensors) {
    t.data.resize(static_cast<size_t>(t.numel()));
    if (!in.read(reinterpret_cast<char*>(t.data.data()),
                 static_cast<std::streamsize>(t.data.size() * sizeof(float))))
      throw CheckpointError("truncated payload: tensor '" + t.name + "' needs " +
                            std::to_string(t.numel() * sizeof(float)) + " bytes");
  }
  // Reject trailing bytes so payload length exactly matches the manifest.
  char extra;
  if (in.read(&extra, 1)) throw CheckpointError("payload longer than manifest declares");
  return ckpt;
}

}  // namespace prosodiff
