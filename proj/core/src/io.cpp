#include "k3lat/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "k3lat/glue.hpp"

#ifndef K3LAT_DEFAULT_DATA_DIR
#define K3LAT_DEFAULT_DATA_DIR "data"
#endif
#ifndef K3LAT_INSTALL_DATA_DIR
#define K3LAT_INSTALL_DATA_DIR K3LAT_DEFAULT_DATA_DIR
#endif

namespace k3lat {

using nlohmann::json;

namespace {

struct Pos {
  std::size_t line = 1, column = 1;
};

Pos position_of(const std::string& text, std::size_t byte) {
  Pos p;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Location of a key, searching from `from`; used for semantic errors.
Pos key_position(const std::string& text, const std::string& key, std::size_t from = 0) {
  auto at = text.find("\"" + key + "\"", from);
  return position_of(text, at == std::string::npos ? 0 : at);
}

[[noreturn]] void fail(const std::string& text, const std::string& key, const std::string& msg) {
  Pos p = key_position(text, key);
  throw ParseError(msg, p.line, p.column);
}

Rat rat_of(const json& v, const std::string& text, const std::string& key) {
  if (v.is_number_integer()) return Rat(Int(static_cast<long>(v.get<long long>())));
  if (v.is_number_unsigned()) return Rat(Int(std::to_string(v.get<unsigned long long>())));
  if (v.is_string()) {
    Rat r;
    std::string s = v.get<std::string>();
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
      fail(text, key, "bad number '" + s + "' in " + key);
    r.canonicalize();
    return r;
  }
  if (v.is_number_float()) fail(text, key, "floating-point entry in " + key + " (use an integer or a string)");
  fail(text, key, "non-numeric entry in " + key);
}

Lattice from_json(const json& j, const std::string& text) {
  if (!j.is_object()) throw ParseError("lattice must be a JSON object", 1, 1);
  if (!j.contains("gram")) fail(text, "name", "missing \"gram\"");
  const json& g = j["gram"];
  if (!g.is_array()) fail(text, "gram", "\"gram\" must be an array of rows");
  const std::size_t n = g.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n)
      fail(text, "gram", "rank mismatch: row " + std::to_string(i) + " of \"gram\" does not have " +
                             std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      Rat r = rat_of(g[i][k], text, "gram");
      if (r.get_den() != 1) fail(text, "gram", "non-integral Gram entry");
      m(i, k) = r.get_num();
    }
  }
  if (!m.is_symmetric()) fail(text, "gram", "Gram matrix is not symmetric");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  Lattice l = make_lattice(m, name);
  bool has_amb = j.contains("ambient"), has_basis = j.contains("basis");
  if (has_amb != has_basis) fail(text, has_amb ? "ambient" : "basis", "\"ambient\" and \"basis\" go together");
  if (!has_amb) return l;
  Lattice amb;
  if (j["ambient"].is_string()) {
    try {
      amb = build_named(j["ambient"].get<std::string>());
    } catch (const Error& ex) {
      fail(text, "ambient", ex.what());
    }
  } else {
    amb = from_json(j["ambient"], text);
  }
  const json& b = j["basis"];
  if (!b.is_array() || b.size() != n)
    fail(text, "basis", "rank mismatch: \"basis\" must list " + std::to_string(n) + " vectors");
  RatMatrix bm(amb.rank(), n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!b[c].is_array() || b[c].size() != amb.rank())
      fail(text, "basis", "basis vector " + std::to_string(c) + " does not have ambient length " +
                              std::to_string(amb.rank()));
    for (std::size_t r = 0; r < amb.rank(); ++r) bm(r, c) = rat_of(b[c][r], text, "basis");
  }
  Lattice e;
  try {
    e = embed(amb, bm, name);
  } catch (const Error& ex) {
    fail(text, "basis", ex.what());
  }
  if (!(e.gram == m)) fail(text, "gram", "\"gram\" does not match basis^T * ambient * basis");
  return e;
}

std::string num(const Int& x) {
  if (x.fits_slong_p()) return x.get_str();
  return "\"" + x.get_str() + "\"";
}

std::string num(const Rat& x) {
  if (x.get_den() == 1) return num(Int(x.get_num()));
  return "\"" + to_string(x) + "\"";
}

void write(std::ostringstream& os, const Lattice& l, int indent, int depth) {
  std::string pad(indent * depth, ' '), in(indent * (depth + 1), ' '), in2(indent * (depth + 2), ' ');
  os << "{\n" << in << "\"name\": " << json(l.name).dump() << ",\n" << in << "\"gram\": [";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    os << (i ? ",\n" : "\n") << in2 << "[";
    for (std::size_t k = 0; k < l.rank(); ++k) os << (k ? ", " : "") << num(l.gram(i, k));
    os << "]";
  }
  os << (l.rank() ? "\n" + in : "") << "]";
  if (l.ambient) {
    os << ",\n" << in << "\"ambient\": ";
    write(os, *l.ambient, indent, depth + 1);
    os << ",\n" << in << "\"basis\": [";
    for (std::size_t c = 0; c < l.basis.cols(); ++c) {
      os << (c ? ",\n" : "\n") << in2 << "[";
      for (std::size_t r = 0; r < l.basis.rows(); ++r) os << (r ? ", " : "") << num(l.basis(r, c));
      os << "]";
    }
    os << (l.basis.cols() ? "\n" + in : "") << "]";
  }
  os << "\n" << pad << "}";
}

}  // namespace

Lattice parse_lattice(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    Pos p = position_of(text, e.byte ? e.byte - 1 : 0);
    std::string msg = e.what();
    auto colon = msg.find("syntax error");
    throw ParseError(colon == std::string::npos ? std::string("malformed JSON") : msg.substr(colon), p.line,
                     p.column);
  }
  return from_json(j, text);
}

Lattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lattice(ss.str());
}

std::string lattice_to_json(const Lattice& l, int indent) {
  std::ostringstream os;
  write(os, l, indent, 0);
  os << "\n";
  return os.str();
}

void save_lattice(const std::string& path, const Lattice& l) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << lattice_to_json(l, 2);
}

std::string data_dir() {
  if (const char* d = std::getenv("K3LATTICE_DATA"); d && *d) return d;
  // source tree first, then the install prefix
  if (std::filesystem::is_directory(K3LAT_DEFAULT_DATA_DIR)) return K3LAT_DEFAULT_DATA_DIR;
  return K3LAT_INSTALL_DATA_DIR;
}

std::string data_path(const std::string& file) { return data_dir() + "/" + file; }

}  // namespace k3lat
