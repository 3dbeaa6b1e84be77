#include "levellab/lab/store.hpp"

#include "levellab/error.hpp"
#include "levellab/lab/conditions.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <mutex>

namespace levellab::lab {

using Json = nlohmann::ordered_json;

bool operator==(const Certificate& a, const Certificate& b) {
  return a.recipe == b.recipe && a.prime == b.prime && a.seed == b.seed && a.r == b.r &&
         a.e == b.e && a.generators == b.generators && a.ranks == b.ranks &&
         a.characteristic == b.characteristic;
}

bool operator==(const StoreRecord& a, const StoreRecord& b) {
  return a.schema == b.schema && a.timestamp == b.timestamp && a.h == b.h && a.r == b.r &&
         a.e == b.e && a.t == b.t && a.status == b.status && a.condition == b.condition &&
         a.detail == b.detail && a.certificate == b.certificate;
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

std::string h_text(const HVector& h) { return levellab::to_string(h.entries()); }

std::mutex& append_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::optional<StoreRecord> make_record(const Classification& c) {
  if (c.status == Status::Unknown) return std::nullopt;
  StoreRecord record;
  record.timestamp = utc_timestamp();
  record.h = c.h;
  record.r = static_cast<std::size_t>(c.h.codimension());
  record.e = c.h.socle_degree();
  record.t = c.h.last();
  record.status = c.status;
  record.condition = c.condition;
  record.detail = c.detail;
  record.certificate = c.certificate;
  return record;
}

std::string to_line(const StoreRecord& record) {
  Json j;
  j["schema"] = record.schema;
  j["timestamp"] = record.timestamp;
  j["h"] = h_text(record.h);
  j["r"] = record.r;
  j["e"] = record.e;
  j["t"] = record.t;
  j["status"] = to_string(record.status);
  if (record.status == Status::NonLevel) {
    j["condition"] = record.condition;
    j["detail"] = record.detail;
  }
  if (record.certificate) {
    const Certificate& c = *record.certificate;
    j["recipe"] = c.recipe;
    j["prime"] = c.prime;
    j["seed"] = c.seed;
    j["ring"] = c.r;
    j["degree"] = c.e;
    j["ranks"] = c.ranks;
    j["generators"] = c.generators;
    j["char"] = c.characteristic;
  }
  return j.dump();
}

StoreRecord from_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(ex.byte, "malformed store record");
  }
  try {
    StoreRecord record;
    record.schema = j.at("schema").get<int>();
    if (record.schema != kStoreSchema) {
      throw InvalidArgument("unsupported store schema " + std::to_string(record.schema));
    }
    record.timestamp = j.at("timestamp").get<std::string>();
    record.h = HVector::parse(j.at("h").get<std::string>());
    record.r = j.at("r").get<std::size_t>();
    record.e = j.at("e").get<std::size_t>();
    record.t = j.at("t").get<std::int64_t>();
    record.status = status_from_string(j.at("status").get<std::string>());
    if (j.contains("condition")) record.condition = j["condition"].get<std::string>();
    if (j.contains("detail")) record.detail = j["detail"].get<std::string>();
    if (j.contains("recipe")) {
      Certificate c;
      c.recipe = j.at("recipe").get<std::string>();
      c.prime = j.at("prime").get<std::uint64_t>();
      c.seed = j.at("seed").get<std::uint64_t>();
      c.r = j.at("ring").get<std::size_t>();
      c.e = j.at("degree").get<std::uint32_t>();
      c.ranks = j.at("ranks").get<std::vector<std::size_t>>();
      c.generators = j.at("generators").get<std::string>();
      c.characteristic = j.at("char").get<std::string>();
      record.certificate = std::move(c);
    }
    return record;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, std::string("store record: ") + ex.what());
  }
}

bool StoreFilter::accepts(const StoreRecord& record) const {
  if (status && record.status != *status) return false;
  if (r && record.r != *r) return false;
  if (e && record.e != *e) return false;
  if (h && record.h != *h) return false;
  return true;
}

void store_append(const std::string& path, const StoreRecord& record) {
  const std::string line = to_line(record) + "\n";
  std::lock_guard lock(append_mutex());
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw IoError("cannot open store '" + path + "' for appending");
  out << line;
  out.flush();
  if (!out) throw IoError("write to store '" + path + "' failed");
}

std::vector<StoreRecord> store_load(const std::string& path, const StoreFilter& filter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open store '" + path + "'");
  std::vector<StoreRecord> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    StoreRecord record;
    try {
      record = from_line(line);
    } catch (const ParseError& ex) {
      throw ParseError(ex.position(), "line " + std::to_string(number) + ": " + ex.cause());
    }
    if (filter.accepts(record)) records.push_back(std::move(record));
  }
  return records;
}

std::string default_store_path() {
  if (const char* env = std::getenv("LEVELLAB_STORE"); env && *env) return env;
  return "levellab-store.jsonl";
}

VerifyResult store_verify(const StoreRecord& record) {
  const std::string h = h_text(record.h);
  if (record.status == Status::NonLevel) {
    auto violation = check_condition(record.condition, record.h);
    if (!violation) return {false, h + ": condition " + record.condition + " holds"};
    return {true, h + ": " + record.condition + " fails (" + violation->detail + ")"};
  }
  if (record.status != Status::Level || !record.certificate) {
    return {false, h + ": no certificate to verify"};
  }
  const Certificate& cert = *record.certificate;
  const std::vector<std::size_t> expected(record.h.entries().begin(), record.h.entries().end());
  if (cert.ranks != expected) return {false, h + ": recorded ranks differ from h"};
  if (cert.recipe == kStanleyTheorem) {
    if (!stanley_classification_applies(record.h)) {
      return {false, h + ": not a codimension <= 3 SI-sequence of type 1"};
    }
    return {true, h + ": SI-sequence of type 1 in codimension " + std::to_string(record.r)};
  }
  const Certificate replay =
      make_certificate(construct::Recipe::parse(cert.recipe), cert.seed,
                       poly::PrimeField(cert.prime), cert.characteristic == kChar0);
  if (replay.generators != cert.generators) return {false, h + ": replayed generators differ"};
  if (replay.ranks != cert.ranks) return {false, h + ": replayed ranks differ"};
  if (replay.r != cert.r || replay.e != cert.e) return {false, h + ": replayed ring differs"};
  if (replay.characteristic != cert.characteristic) {
    return {false, h + ": rational ranks no longer match"};
  }
  return {true, h + ": " + cert.recipe + " replayed (" + cert.characteristic + ")"};
}

}  // namespace levellab::lab
