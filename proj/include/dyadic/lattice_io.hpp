#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dyadic/bong.hpp"

namespace dyadic {

// One orthogonal block of a lattice literal.
struct Block {
  enum class Kind { Diag, Binary, Hyperbolic } kind = Kind::Diag;
  std::vector<Elem> diag;   // Diag
  Elem xi, eta, scale;      // Binary: scale * [[xi, 1], [1, eta]]
  int level = 0;            // Hyperbolic: H_level
};

std::vector<std::vector<Elem>> blocks_gram(const Field& field, const std::vector<Block>& blocks);
Bong bong_from_blocks(const Field& field, const std::vector<Block>& blocks);

// {"field": ..., "bong": [...]} or {"field": ..., "blocks": [...]}. The field entry is a name or
// {"name": ..., "precision": k}; when it is missing, fallback is used.
Bong parse_lattice_json(std::string_view text, const Field* fallback = nullptr);
Bong load_lattice_file(const std::string& path, const Field* fallback = nullptr);
std::string lattice_json(const Bong& b);

}  // namespace dyadic
