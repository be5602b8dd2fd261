#include "dyadic/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include "dyadic/parse.hpp"
#include "json.hpp"

namespace dyadic {

using nlohmann::json;

std::vector<std::vector<Elem>> blocks_gram(const Field& field, const std::vector<Block>& blocks) {
  std::vector<std::vector<std::vector<Elem>>> pieces;
  for (const auto& b : blocks) {
    switch (b.kind) {
      case Block::Kind::Diag:
        for (const auto& x : b.diag) pieces.push_back({{x}});
        break;
      case Block::Kind::Binary:
        pieces.push_back({{b.scale * b.xi, b.scale}, {b.scale, b.scale * b.eta}});
        break;
      case Block::Kind::Hyperbolic: {
        if (b.level < 0 || b.level > field.e()) throw DomainError("H_l needs 0 <= l <= e");
        Elem top = b.level < field.e() ? field.pi().pow(b.level) : field.zero();
        pieces.push_back({{top, field.one()}, {field.one(), field.zero()}});
        break;
      }
    }
  }
  std::size_t n = 0;
  for (const auto& p : pieces) n += p.size();
  std::vector<std::vector<Elem>> g(n, std::vector<Elem>(n, field.zero()));
  std::size_t off = 0;
  for (const auto& p : pieces) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) g[off + i][off + j] = p[i][j];
    off += p.size();
  }
  return g;
}

Bong bong_from_blocks(const Field& field, const std::vector<Block>& blocks) {
  return bong_from_gram(field, blocks_gram(field, blocks));
}

namespace {

Field field_from_json(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  if (j.is_object() && j.contains("name")) {
    int prec = j.value("precision", 0);
    return Field::parse(j.at("name").get<std::string>(), prec);
  }
  throw ParseError("field must be a name or {\"name\": ..., \"precision\": ...}");
}

Elem elem_from_json(const Field& f, const json& j) {
  if (j.is_string()) return parse_elem(f, j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  throw ParseError("element must be a string or an integer");
}

}  // namespace

Bong parse_lattice_json(std::string_view text, const Field* fallback) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("lattice JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("lattice JSON must be an object");
  Field field;
  if (j.contains("field")) {
    field = field_from_json(j.at("field"));
  } else if (fallback) {
    field = *fallback;
  } else {
    throw ParseError("lattice JSON has no field");
  }
  try {
    if (j.contains("bong")) {
      std::vector<Elem> entries;
      for (const auto& x : j.at("bong")) entries.push_back(elem_from_json(field, x));
      return Bong::make(field, entries);
    }
    if (j.contains("blocks")) {
      std::vector<Block> blocks;
      for (const auto& b : j.at("blocks")) {
        Block blk;
        if (b.contains("diag")) {
          blk.kind = Block::Kind::Diag;
          const auto& d = b.at("diag");
          if (d.is_array()) {
            for (const auto& x : d) blk.diag.push_back(elem_from_json(field, x));
          } else {
            blk.diag.push_back(elem_from_json(field, d));
          }
        } else if (b.contains("A")) {
          blk.kind = Block::Kind::Binary;
          const auto& a = b.at("A");
          if (!a.is_array() || a.size() != 2) throw ParseError("A block needs [xi, eta]");
          blk.xi = elem_from_json(field, a[0]);
          blk.eta = elem_from_json(field, a[1]);
          blk.scale = b.contains("scale") ? elem_from_json(field, b.at("scale")) : field.one();
        } else if (b.contains("H")) {
          blk.kind = Block::Kind::Hyperbolic;
          blk.level = b.at("H").get<int>();
        } else {
          throw ParseError("unknown block; expected diag, A or H");
        }
        blocks.push_back(blk);
      }
      return bong_from_blocks(field, blocks);
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("lattice JSON: ") + ex.what());
  }
  throw ParseError("lattice JSON needs \"bong\" or \"blocks\"");
}

Bong load_lattice_file(const std::string& path, const Field* fallback) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lattice_json(ss.str(), fallback);
}

std::string lattice_json(const Bong& b) {
  json j;
  j["field"] = {{"name", b.field().name()}, {"precision", b.field().precision()}};
  j["bong"] = json::array();
  for (const auto& x : b.entries()) j["bong"].push_back(x.str());
  return j.dump();
}

}  // namespace dyadic
