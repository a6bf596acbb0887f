#include "wl/report.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wl {

std::string file_digest_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  Digest128 acc{0, 0};
  char buf[4096];
  std::uint64_t total = 0;
  while (in) {
    in.read(buf, sizeof buf);
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) h = absorb(h, static_cast<unsigned char>(buf[i]));
    total += static_cast<std::uint64_t>(got);
  }
  acc = {mix64(h ^ total), mix64(h + total)};
  return acc.hex();
}

std::string verdict_json(const WlVerdict& v) {
  nlohmann::json j;
  j["outcome"] = v.outcome == WlOutcome::distinguished ? "distinguished" : "stable_equal";
  j["round"] = v.round;
  j["classes"] = v.classes;
  j["histogram_digest_G"] = v.hist0.hex();
  j["histogram_digest_H"] = v.hist1.hex();
  return j.dump();
}

}  // namespace wl
