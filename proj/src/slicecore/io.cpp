#include "slicebench/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "slicebench/errors.hpp"

namespace slicebench {

int packed_width(std::size_t alphabet_size) {
  int w = 1;
  while ((std::size_t{1} << w) < alphabet_size) ++w;
  return w;
}

std::string pack_table(std::span<const std::uint8_t> table, std::size_t alphabet_size) {
  const int w = packed_width(alphabet_size);
  const std::size_t bits = table.size() * static_cast<std::size_t>(w);
  std::vector<std::uint8_t> bytes((bits + 7) / 8, 0);
  std::size_t bit = 0;
  for (std::uint8_t v : table) {
    for (int b = 0; b < w; ++b, ++bit) {
      if ((v >> b) & 1U) bytes[bit / 8] |= static_cast<std::uint8_t>(1U << (bit % 8));
    }
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t byte : bytes) {
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 0xF]);
  }
  return out;
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::vector<std::uint8_t> unpack_table(const std::string& hex, std::size_t entries,
                                       std::size_t alphabet_size) {
  const int w = packed_width(alphabet_size);
  const std::size_t bits = entries * static_cast<std::size_t>(w);
  const std::size_t expected = (bits + 7) / 8 * 2;
  if (hex.size() != expected) {
    throw InputError("table hex has " + std::to_string(hex.size()) + " digits, expected " +
                     std::to_string(expected));
  }
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const int hi = hex_digit(hex[2 * i]);
    const int lo = hex_digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw InputError("invalid hex digit at offset " + std::to_string(2 * i));
    bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  std::vector<std::uint8_t> table(entries, 0);
  std::size_t bit = 0;
  for (std::size_t e = 0; e < entries; ++e) {
    unsigned v = 0;
    for (int b = 0; b < w; ++b, ++bit) {
      if ((bytes[bit / 8] >> (bit % 8)) & 1U) v |= 1U << b;
    }
    if (v >= alphabet_size) {
      throw InputError("table entry " + std::to_string(e) + " indexes outside the alphabet");
    }
    table[e] = static_cast<std::uint8_t>(v);
  }
  for (; bit < bytes.size() * 8; ++bit) {
    if ((bytes[bit / 8] >> (bit % 8)) & 1U) throw InputError("nonzero padding bits in table");
  }
  return table;
}

Json label_to_json(const Label& label) {
  if (label.is_scalar()) return label.value();
  return Json(label.parts());
}

Label label_from_json(const Json& j) {
  if (j.is_number_integer()) return Label::scalar(j.get<int>());
  if (j.is_array()) {
    std::vector<int> parts;
    for (const auto& e : j) {
      if (!e.is_number_integer()) throw InputError("tuple label entries must be integers");
      parts.push_back(e.get<int>());
    }
    return Label::tuple(std::move(parts));
  }
  throw InputError("label must be an integer or an array of integers");
}

Json function_to_json(const LabeledFunction& f, const Json& metadata) {
  const Domain& d = f.domain();
  Json j;
  j["n"] = d.n();
  switch (d.kind()) {
    case DomainKind::slice:
      j["kind"] = "slice";
      j["k"] = d.k();
      break;
    case DomainKind::cube:
      j["kind"] = "cube";
      break;
    case DomainKind::explicit_set: {
      j["kind"] = "explicit";
      Json members = Json::array();
      for (Mask x : d.explicit_members()) members.push_back(to_bitstring(x, d.n()));
      j["members"] = std::move(members);
      break;
    }
  }
  Json alphabet = Json::array();
  for (const auto& label : f.alphabet()) alphabet.push_back(label_to_json(label));
  j["alphabet"] = std::move(alphabet);
  j["table"] = pack_table(f.table(), f.alphabet().size());
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

LabeledFunction function_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("function file must be a JSON object");
    const int n = j.at("n").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    Domain d = Domain::cube(0);
    if (kind == "slice") {
      d = Domain::slice(n, j.at("k").get<int>());
    } else if (kind == "cube") {
      d = Domain::cube(n);
    } else if (kind == "explicit") {
      std::vector<Mask> members;
      for (const auto& s : j.at("members")) {
        const auto text = s.get<std::string>();
        if (static_cast<int>(text.size()) != n) throw InputError("explicit member length != n");
        members.push_back(parse_bitstring(text));
      }
      d = Domain::explicit_set(n, std::move(members));
    } else {
      throw InputError("unknown domain kind '" + kind + "'");
    }
    if (d.size() > kMaxTableSize) throw ResourceError("domain " + d.describe() + " exceeds 2^26");
    std::vector<Label> alphabet;
    for (const auto& l : j.at("alphabet")) alphabet.push_back(label_from_json(l));
    if (alphabet.empty()) throw InputError("alphabet must not be empty");
    auto table = unpack_table(j.at("table").get<std::string>(), d.size(), alphabet.size());
    return LabeledFunction(std::move(d), std::move(alphabet), std::move(table));
  } catch (const Json::exception& e) {
    throw InputError(std::string("function file schema error: ") + e.what());
  } catch (const DomainError& e) {
    throw InputError(std::string("function file describes an invalid function: ") + e.what());
  }
}

std::string canonical_function_text(const LabeledFunction& f) {
  return function_to_json(f).dump();
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": JSON parse error (byte " + std::to_string(e.byte) + ")");
  }
}

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void write_function_file(const std::string& path, const LabeledFunction& f, const Json& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << function_to_json(f, metadata).dump(2) << '\n';
}

LabeledFunction read_function_file(const std::string& path) {
  return function_from_json(parse_json_text(read_text(path), path));
}

void write_graph(std::ostream& out, const SliceGraph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

SliceGraph read_graph(std::istream& in, std::optional<int> vertices) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    int u = 0;
    int v = 0;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0 || u == v) {
      throw InputError("graph line " + std::to_string(line_no) + ": expected 'u v' with u != v");
    }
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  const int n = vertices.value_or(max_vertex + 1);
  if (max_vertex >= n) throw InputError("graph edge endpoint exceeds the vertex count");
  SliceGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace slicebench
