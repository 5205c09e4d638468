#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicebench/function.hpp"
#include "slicebench/slice_graph.hpp"

namespace slicebench {

using Json = nlohmann::ordered_json;

/// Bits used per packed table entry: ceil(log2(alphabet size)), at least 1.
int packed_width(std::size_t alphabet_size);

/// Packs alphabet indices LSB-first into bytes and renders them as lowercase
/// hex, two digits per byte, byte 0 first.
std::string pack_table(std::span<const std::uint8_t> table, std::size_t alphabet_size);
/// Inverse of pack_table. Throws InputError on malformed hex, short input or
/// out-of-range indices.
std::vector<std::uint8_t> unpack_table(const std::string& hex, std::size_t entries,
                                       std::size_t alphabet_size);

Json label_to_json(const Label& label);
Label label_from_json(const Json& j);

/// Function file object. `metadata` is written under the "metadata" key when
/// not null.
Json function_to_json(const LabeledFunction& f, const Json& metadata = nullptr);
/// Throws InputError on schema violations.
LabeledFunction function_from_json(const Json& j);

/// Canonical text of the function (no metadata), used for content hashing.
std::string canonical_function_text(const LabeledFunction& f);

void write_function_file(const std::string& path, const LabeledFunction& f,
                         const Json& metadata = nullptr);
/// Throws InputError with the parser's byte offset on malformed JSON.
LabeledFunction read_function_file(const std::string& path);
/// Parses JSON text, reporting line and column on failure.
Json parse_json_text(const std::string& text, const std::string& source);

/// One "u v" line per edge, u < v, lexicographic.
void write_graph(std::ostream& out, const SliceGraph& g);
/// Reads "u v" lines; blank lines and lines starting with '#' are ignored.
/// Vertex count is `vertices` when given, else one more than the largest
/// endpoint.
SliceGraph read_graph(std::istream& in, std::optional<int> vertices = std::nullopt);

}  // namespace slicebench
