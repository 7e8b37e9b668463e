#include "eventlens/output.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>

#include "eventlens/error.hpp"

namespace eventlens {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw Error(ErrorCode::IoError, "SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::IoError, "rename to '" + path + "' failed: " + ec.message());
  }
}

OutputDir::OutputDir(std::string root) : root_(std::move(root)) {}

void OutputDir::write(const std::string& relative, std::string_view contents) {
  write_file_atomic((fs::path(root_) / relative).string(), contents);
  record(relative, contents);
}

void OutputDir::record(const std::string& relative, std::string_view contents) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Entry& e) { return e.path == relative; });
  Entry entry{relative, sha256_hex(contents), contents.size()};
  if (it == entries_.end()) entries_.push_back(std::move(entry));
  else *it = std::move(entry);
}

std::vector<std::string> OutputDir::files() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.path);
  std::sort(out.begin(), out.end());
  return out;
}

std::string OutputDir::write_manifest() {
  auto sorted = entries_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Entry& a, const Entry& b) { return a.path < b.path; });
  std::string text;
  for (const auto& e : sorted) {
    text += e.sha256 + "  " + std::to_string(e.bytes) + "  " + e.path + "\n";
  }
  write_file_atomic((fs::path(root_) / "manifest.txt").string(), text);
  return text;
}

}  // namespace eventlens
