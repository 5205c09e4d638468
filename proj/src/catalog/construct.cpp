#include "slicebench/assignment.hpp"
#include "slicebench/catalog.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

int int_param(const Json& params, const char* key) {
  if (!params.contains(key)) throw InputError(std::string("missing parameter '") + key + "'");
  const Json& v = params.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("parameter '") + key + "' must be an integer");
  return v.get<int>();
}

std::uint64_t seed_param(const Json& params) {
  if (!params.contains("seed")) throw InputError("missing parameter 'seed'");
  const Json& v = params.at("seed");
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InputError("parameter 'seed' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<int> vector_param(const Json& params, const char* key) {
  if (!params.contains(key) || !params.at(key).is_array()) {
    throw InputError(std::string("parameter '") + key + "' must be an array of integers");
  }
  std::vector<int> out;
  for (const auto& v : params.at(key)) {
    if (!v.is_number_integer()) throw InputError(std::string("parameter '") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

LabeledFunction build(const std::string& name, const Json& p) {
  if (name == "eq") return make_eq(int_param(p, "k"));
  if (name == "ed") return make_ed(int_param(p, "k"), int_param(p, "l"));
  if (name == "graham_sloane") {
    const int n = int_param(p, "n");
    const int k = int_param(p, "k");
    if (p.contains("index")) return graham_sloane_class(n, k, int_param(p, "index"));
    return graham_sloane(n, k).indicator;
  }
  if (name == "kml") return kml_set(int_param(p, "r"));
  if (name == "paley") return from_graph(paley_graph(int_param(p, "q")));
  if (name == "random_graph") return from_graph(random_graph(int_param(p, "n"), seed_param(p)));
  if (name == "rubinstein_variant") return rubinstein_variant(int_param(p, "n"));
  if (name == "rubinstein_original") {
    auto f = rubinstein_original(int_param(p, "n"));
    if (p.value("balanced_slice", false)) return slice_of_cube_function(f, f.n() / 2);
    return f;
  }
  if (name == "lift") {
    if (!p.contains("of")) throw InputError("lift needs an 'of' construction");
    return lift(construct(p.at("of")));
  }
  if (name == "weights") return weights_task(int_param(p, "n"), int_param(p, "m"), int_param(p, "k"));
  if (name == "compose") {
    return compose_symmetric(vector_param(p, "outer"), vector_param(p, "inner"), int_param(p, "k"));
  }
  if (name == "random") {
    const int alphabet = p.contains("alphabet") ? int_param(p, "alphabet") : 2;
    return random_slice_function(int_param(p, "n"), int_param(p, "k"), seed_param(p), alphabet);
  }
  if (name == "random_cube") return random_cube_function(int_param(p, "n"), seed_param(p));
  if (name == "dictator") return dictator(int_param(p, "n"), int_param(p, "k"), int_param(p, "i"));
  if (name == "or_first_half") return or_first_half(int_param(p, "n"));
  if (name == "constant") {
    const int n = int_param(p, "n");
    const Domain d = p.contains("k") ? Domain::slice(n, int_param(p, "k")) : Domain::cube(n);
    return LabeledFunction::constant(d, p.contains("value") ? int_param(p, "value") : 0);
  }
  if (name == "cube_table") {
    const int n = int_param(p, "n");
    const std::string bits = p.at("bits").get<std::string>();
    const Domain d = Domain::cube(n);
    if (bits.size() != d.size()) throw InputError("cube_table needs 2^n bits");
    std::vector<std::uint8_t> table;
    for (char c : bits) {
      if (c != '0' && c != '1') throw InputError("cube_table bits must be 0 or 1");
      table.push_back(c == '1');
    }
    return LabeledFunction::boolean(d, std::move(table));
  }
  if (name == "complement") {
    if (!p.contains("of")) throw InputError("complement needs an 'of' construction");
    return complement_domain(construct(p.at("of")));
  }
  throw InputError("unknown construction '" + name + "'");
}

}  // namespace

LabeledFunction construct(const Json& spec) {
  if (!spec.is_object() || !spec.contains("name") || !spec.at("name").is_string()) {
    throw InputError("construction spec needs a string 'name'");
  }
  const Json params = spec.value("params", Json::object());
  if (!params.is_object()) throw InputError("construction 'params' must be an object");
  try {
    return build(spec.at("name").get<std::string>(), params);
  } catch (const DomainError& e) {
    throw InputError(std::string("construction parameters rejected: ") + e.what());
  } catch (const Json::exception& e) {
    throw InputError(std::string("construction spec: ") + e.what());
  }
}

}  // namespace slicebench
