#include "gcmlab/instance_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "gcmlab/parse.hpp"
#include "json.hpp"

namespace gcmlab {

namespace {

bool small_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Instance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("instance file " + path + ": " + e.what());
  }
  try {
    long long p = j.at("characteristic").get<long long>();
    if (!small_prime(p))
      throw std::invalid_argument("characteristic " + std::to_string(p) +
                                  " is not prime");
    if (p < 3 || p >= (1ll << 31))
      throw std::invalid_argument("characteristic out of range");
    auto vars = j.at("variables").get<std::vector<std::string>>();
    auto quo = j.value("ambient_quotient", std::vector<std::string>{});
    auto seq = j.at("sequence").get<std::vector<std::string>>();
    std::string label = j.value("label", std::string{});

    Ring amb = Ring::make((std::uint32_t)p, vars);
    Ring ring = amb;
    if (!quo.empty()) {
      std::vector<Poly> qgens;
      for (const auto& s : quo) qgens.push_back(parse_poly(amb, s));
      ring = amb.with_quotient(std::move(qgens));
    }
    std::vector<Poly> fs;
    for (const auto& s : seq) fs.push_back(parse_poly(ring, s));
    return make_instance(ring, fs, label);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("instance file " + path + ": " + e.what());
  }
}

void write_instance(const std::string& path, const Instance& inst) {
  nlohmann::json j;
  j["label"] = inst.label;
  j["characteristic"] = inst.ring.field().characteristic();
  j["variables"] = inst.ring.vars();
  std::vector<std::string> quo;
  for (const auto& g : inst.ring.quotient()) quo.push_back(g.str());
  j["ambient_quotient"] = quo;
  std::vector<std::string> seq;
  for (const auto& f : inst.seq) seq.push_back(f.str());
  j["sequence"] = seq;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << j.dump(2) << "\n";
}

std::string content_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::uint64_t h = 14695981039346656037ull;
  char c;
  while (in.get(c)) {
    h ^= (std::uint8_t)c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace gcmlab
