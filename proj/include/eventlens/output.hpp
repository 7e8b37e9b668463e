#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eventlens {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view data);

/// Writes via a temporary sibling then renames over the target.
void write_file_atomic(const std::string& path, std::string_view contents);

/// Tracks every file a run writes beneath one directory so the manifest can
/// list them.
class OutputDir {
 public:
  explicit OutputDir(std::string root);

  /// `relative` uses '/' separators; parent directories are created.
  void write(const std::string& relative, std::string_view contents);
  /// Records a file some other component already wrote beneath root.
  void record(const std::string& relative, std::string_view contents);

  /// Writes manifest.txt: "<sha256>  <bytes>  <path>" per file, sorted by path.
  std::string write_manifest();

  const std::string& root() const { return root_; }
  std::vector<std::string> files() const;

 private:
  struct Entry {
    std::string path;
    std::string sha256;
    std::size_t bytes;
  };
  std::string root_;
  std::vector<Entry> entries_;
};

}  // namespace eventlens
