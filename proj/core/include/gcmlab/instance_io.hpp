#pragma once

#include <string>

#include "gcmlab/perturb.hpp"

namespace gcmlab {

// On-disk instance schema: structured text with fields characteristic,
// variables, ambient_quotient, sequence, label. Reading validates the lab
// invariants eagerly; violations surface as semantic_error, anything the
// file itself gets wrong as invalid_argument / runtime_error.
Instance read_instance(const std::string& path);

void write_instance(const std::string& path, const Instance& inst);

// 64-bit FNV-1a of the raw file bytes, as fixed-width hex.
std::string content_hash(const std::string& path);

}  // namespace gcmlab
