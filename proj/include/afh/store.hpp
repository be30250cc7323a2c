#pragma once

// On-disk experiment layout:
//   <out>/weights/*.agw   <out>/tables/*.csv   <out>/results/*.csv
//   <out>/report/*        <out>/manifest.json
// Every artifact is registered in the manifest with its SHA-256. Existing
// artifacts are never replaced unless the store was opened with overwrite.

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace afh::cli {

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Refusal to replace an existing artifact without --overwrite.
class ArtifactExists : public std::runtime_error {
 public:
  explicit ArtifactExists(const std::string& relative);
};

/// A referenced artifact that has not been produced yet.
class MissingArtifact : public std::runtime_error {
 public:
  explicit MissingArtifact(const std::string& relative);
};

/// Another process holds the output directory.
class StoreLocked : public std::runtime_error {
 public:
  explicit StoreLocked(const std::filesystem::path& lock);
};

struct ManifestEntry {
  std::string sha256;
  std::uintmax_t bytes = 0;
  std::string producer;  // command that wrote it
};

class ArtifactStore {
 public:
  /// Creates the directory tree and takes the lock marker.
  ArtifactStore(std::filesystem::path root, bool overwrite);
  ~ArtifactStore();
  ArtifactStore(const ArtifactStore&) = delete;
  ArtifactStore& operator=(const ArtifactStore&) = delete;

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path path(const std::string& relative) const { return root_ / relative; }
  bool exists(const std::string& relative) const;

  /// Path of an existing artifact; throws MissingArtifact otherwise.
  std::filesystem::path require(const std::string& relative) const;

  /// Throws ArtifactExists if `relative` is present and overwrite is off.
  void check_writable(const std::string& relative) const;

  /// Atomically writes `bytes` and records it in the manifest.
  void write(const std::string& relative, const std::string& bytes, const std::string& producer);

  /// Records a file that was written in place (e.g. by a library saver).
  void record(const std::string& relative, const std::string& producer);

  std::string read(const std::string& relative) const;

  const std::map<std::string, ManifestEntry>& manifest() const { return manifest_; }

  /// Relative paths whose current contents differ from the manifest.
  std::vector<std::string> verify() const;

 private:
  void load_manifest();
  void save_manifest() const;

  std::filesystem::path root_;
  bool overwrite_;
  std::filesystem::path lock_;
  std::map<std::string, ManifestEntry> manifest_;
};

}  // namespace afh::cli
