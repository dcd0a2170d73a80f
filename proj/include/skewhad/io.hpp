#pragma once

// JSON set files, distribution serialization (JSON + CSV), the shipped
// moduli config, and content hashing for the distribution cache. Set files
// pin the modulus so element indices stay byte-identical across platforms.

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "skewhad/element_set.hpp"
#include "skewhad/invariants.hpp"
#include "skewhad/version.hpp"

namespace skewhad {

using ordered_json = nlohmann::ordered_json;

inline ordered_json set_to_json(const FieldCtx& f, const ElementSet& d) {
  ordered_json j;
  j["m"] = f.m();
  j["modulus"] = f.modulus();
  j["elements"] = d.to_sorted_indices();
  return j;
}

inline void write_set_file(const std::string& path, const FieldCtx& f, const ElementSet& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open set file for writing: " + path);
  out << set_to_json(f, d).dump(2) << "\n";
}

struct LoadedSet {
  std::shared_ptr<FieldCtx> ctx;  // owns the context the set points into
  ElementSet set;
};

inline LoadedSet set_from_json(const ordered_json& j) {
  const int m = j.at("m").get<int>();
  const std::vector<int> modulus = j.at("modulus").get<std::vector<int>>();
  auto ctx = std::make_shared<FieldCtx>(m, modulus);
  ElementSet set(*ctx);
  for (const auto& e : j.at("elements")) {
    const std::uint64_t idx = e.get<std::uint64_t>();
    if (idx >= ctx->q()) throw std::invalid_argument("set file: element index out of range");
    set.insert(static_cast<Felt>(idx));
  }
  return {std::move(ctx), std::move(set)};
}

inline LoadedSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file: " + path);
  ordered_json j;
  in >> j;
  return set_from_json(j);
}

// report metadata common to every emitted report; null where not applicable
inline ordered_json report_meta(const FieldCtx* f, const PairConvention* convention,
                                const std::uint64_t* seed) {
  ordered_json meta;
  meta["tool_version"] = kToolVersion;
  if (f) {
    meta["m"] = f->m();
    meta["modulus"] = f->modulus();
  } else {
    meta["m"] = nullptr;
    meta["modulus"] = nullptr;
  }
  meta["convention"] = convention ? ordered_json(to_string(*convention)) : ordered_json(nullptr);
  meta["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  return meta;
}

inline ordered_json dist_to_json(const FieldCtx& f, const TripleDist& d) {
  ordered_json j;
  j["family"] = d.family_label;
  j["m"] = d.m;
  j["modulus"] = f.modulus();
  j["convention"] = to_string(d.convention);
  ordered_json entries = ordered_json::array();
  for (const auto& [v, mult] : d.entries) entries.push_back({v, mult});
  j["entries"] = entries;
  return j;
}

inline TripleDist dist_from_json(const ordered_json& j) {
  TripleDist d;
  d.family_label = j.at("family").get<std::string>();
  d.m = j.at("m").get<int>();
  const std::string conv = j.at("convention").get<std::string>();
  if (conv == "unordered_distinct")
    d.convention = PairConvention::unordered_distinct;
  else if (conv == "ordered_distinct")
    d.convention = PairConvention::ordered_distinct;
  else
    throw std::invalid_argument("dist_from_json: unknown convention " + conv);
  for (const auto& e : j.at("entries"))
    d.entries.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::int64_t>());
  return d;
}

inline std::string dist_to_csv(const FieldCtx& f, const TripleDist& d) {
  std::ostringstream out;
  out << "# family=" << d.family_label << " m=" << d.m << " modulus=";
  for (std::size_t i = 0; i < f.modulus().size(); ++i) {
    if (i) out << ",";
    out << f.modulus()[i];
  }
  out << " convention=" << to_string(d.convention) << " tool_version=" << kToolVersion << "\n";
  out << "value,multiplicity\n";
  for (const auto& [v, mult] : d.entries) out << v << "," << mult << "\n";
  return out.str();
}

// --- shipped moduli config ---

inline std::map<int, std::vector<int>> load_moduli_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open moduli config: " + path);
  ordered_json j;
  in >> j;
  if (j.at("version").get<int>() != 1)
    throw std::invalid_argument("moduli config: unsupported version");
  std::map<int, std::vector<int>> out;
  for (const auto& [key, value] : j.at("moduli").items())
    out[std::stoi(key)] = value.get<std::vector<int>>();
  return out;
}

// --- cache keys ---

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

// content-addressed key: the canonical set JSON plus the convention
inline std::string dist_cache_key(const FieldCtx& f, const ElementSet& d,
                                  PairConvention convention) {
  const std::string payload = set_to_json(f, d).dump() + "|" + to_string(convention);
  return hex64(fnv1a64(payload));
}

}  // namespace skewhad
