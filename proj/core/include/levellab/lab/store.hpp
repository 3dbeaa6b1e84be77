#pragma once

#include "levellab/lab/classify.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace levellab::lab {

inline constexpr int kStoreSchema = 1;

/// One line of the certificate store.
struct StoreRecord {
  int schema = kStoreSchema;
  std::string timestamp;
  HVector h;
  std::size_t r = 0;
  std::size_t e = 0;
  std::int64_t t = 0;
  Status status = Status::Unknown;
  std::string condition;  // NonLevel
  std::string detail;
  std::optional<Certificate> certificate;  // Level

  friend bool operator==(const StoreRecord&, const StoreRecord&);
};

bool operator==(const Certificate&, const Certificate&);

/// Nullopt for Unknown classifications, which are not stored.
std::optional<StoreRecord> make_record(const Classification& c);

std::string to_line(const StoreRecord& record);
StoreRecord from_line(const std::string& line);

struct StoreFilter {
  std::optional<Status> status;
  std::optional<std::size_t> r;
  std::optional<std::size_t> e;
  std::optional<HVector> h;

  bool accepts(const StoreRecord& record) const;
};

/// Appends one line; concurrent appends from this process are serialized.
void store_append(const std::string& path, const StoreRecord& record);
std::vector<StoreRecord> store_load(const std::string& path, const StoreFilter& filter = {});

/// Path from LEVELLAB_STORE, or "levellab-store.jsonl".
std::string default_store_path();

struct VerifyResult {
  bool ok = false;
  std::string message;
};

/// Level: replays the recipe and compares generators and ranks byte for byte.
/// NonLevel: re-evaluates the named condition, which must fail.
VerifyResult store_verify(const StoreRecord& record);

}  // namespace levellab::lab
