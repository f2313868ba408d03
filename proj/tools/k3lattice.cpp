#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "k3lat/claims.hpp"
#include "k3lat/glue.hpp"
#include "k3lat/io.hpp"
#include "k3lat/quadform.hpp"

using namespace k3lat;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << text;
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

std::string disc_form_text(const Lattice& l) {
  auto f = discriminant_group(l);
  std::ostringstream os;
  os << "group: ";
  if (f.length() == 0) os << "trivial";
  for (std::size_t i = 0; i < f.length(); ++i) os << (i ? " x " : "") << "Z/" << f.invariant_factors[i];
  os << "\norder: " << f.order() << "\n";
  os << (f.even ? "q (mod 2Z):" : "q (mod Z):");
  for (const auto& x : f.q) os << " " << to_string(x);
  os << "\nb (mod Z):\n";
  for (std::size_t i = 0; i < f.length(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < f.length(); ++j) os << " " << to_string(f.b(i, j));
    os << "\n";
  }
  return os.str();
}

std::string info_text(const Lattice& l) {
  std::ostringstream os;
  auto f = discriminant_group(l);
  os << "name: " << (l.name.empty() ? "-" : l.name) << "\n"
     << "rank: " << l.rank() << "\n"
     << "det: " << l.det() << "\n"
     << "signature: " << to_string(l.signature()) << "\n"
     << "even: " << (l.is_even() ? "yes" : "no") << "\n"
     << "invariant factors: " << (f.length() ? join(f.invariant_factors) : "none") << "\n";
  if (l.ambient) os << "ambient: " << (l.ambient->name.empty() ? "-" : l.ambient->name) << " (rank " << l.ambient->rank() << ")\n";
  return os.str();
}

RatVector parse_vector(const std::string& s, std::size_t n) {
  RatVector v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Rat r;
    if (tok.empty() || r.set_str(tok, 10) != 0 || r.get_den() == 0) throw UsageError("bad vector entry '" + tok + "'");
    r.canonicalize();
    v.push_back(r);
  }
  if (v.size() != n) throw UsageError("vector '" + s + "' needs " + std::to_string(n) + " entries");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3lattice: exact lattice computations and claim verification"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run registered claims");
  std::string claim_id, tag, json_path;
  bool all = false, list = false, no_timing = false;
  verify->add_option("id", claim_id, "claim id");
  verify->add_flag("--all", all, "run every claim");
  verify->add_option("--tag", tag, "only claims with this tag (with --all)");
  verify->add_option("--json", json_path, "write the machine report here ('-' for stdout)");
  verify->add_flag("--list", list, "list claim ids and tags");
  verify->add_flag("--no-timing", no_timing, "omit timings from the text report");

  auto* lat = app.add_subcommand("lattice", "inspect or transform lattice files");
  lat->require_subcommand(1);
  auto* info = lat->add_subcommand("info", "rank, det, signature, parity, discriminant group");
  std::string file, file2, out;
  info->add_option("file", file)->required();
  auto* op = lat->add_subcommand("op", "lattice operations");
  op->require_subcommand(1);
  auto* op_comp = op->add_subcommand("complement", "orthogonal complement of a sublattice in its ambient");
  op_comp->add_option("file", file, "lattice with ambient and basis")->required();
  auto* op_adj = op->add_subcommand("adjoin", "overlattice generated by glue vectors");
  std::vector<std::string> glue;
  bool allow_odd = false;
  op_adj->add_option("file", file)->required();
  op_adj->add_option("--glue", glue, "rational vector in lattice coordinates, e.g. 1/2,0,1/2")->required();
  op_adj->add_flag("--allow-odd", allow_odd, "do not require the result to be even");
  auto* op_disc = op->add_subcommand("disc-form", "discriminant quadratic form");
  op_disc->add_option("file", file)->required();
  auto* op_sat = op->add_subcommand("saturate", "primitive closure in the ambient");
  op_sat->add_option("file", file)->required();
  auto* op_sum = op->add_subcommand("direct-sum", "orthogonal direct sum");
  op_sum->add_option("a", file)->required();
  op_sum->add_option("b", file2)->required();
  auto* op_scale = op->add_subcommand("rescale", "multiply the form by an integer");
  long factor = 1;
  op_scale->add_option("file", file)->required();
  op_scale->add_option("--by", factor)->required();
  for (auto* sc : {op_comp, op_adj, op_sat, op_sum, op_scale})
    sc->add_option("-o,--out", out, "output file (default stdout)");

  auto* qf = app.add_subcommand("quadform", "rational invariants");
  qf->require_subcommand(1);
  auto* qf_inv = qf->add_subcommand("invariants", "rank, discriminant class, signature, Hasse invariants");
  qf_inv->add_option("file", file)->required();

  auto* named = app.add_subcommand("named", "build a named lattice");
  std::string name, save;
  bool list_named = false;
  named->add_option("name", name);
  named->add_option("--save", save, "write the lattice file here");
  named->add_flag("--list", list_named, "list names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      if (list) {
        for (const auto& c : registry()) {
          std::cout << c.id << "  [";
          for (std::size_t i = 0; i < c.tags.size(); ++i) std::cout << (i ? "," : "") << c.tags[i];
          std::cout << "]  " << c.location << "\n";
        }
        return 0;
      }
      if (all == !claim_id.empty()) throw UsageError("give either a claim id or --all");
      if (!tag.empty() && !all) throw UsageError("--tag needs --all");
      std::vector<ClaimResult> rs;
      if (all) {
        rs = run_all(tag.empty() ? std::nullopt : std::optional<std::string>(tag));
        if (rs.empty()) throw UsageError("no claims with tag '" + tag + "'");
      } else {
        if (!find_claim(claim_id)) throw UsageError("unknown claim '" + claim_id + "'");
        rs.push_back(run_claim(claim_id));
      }
      if (json_path != "-") std::cout << human_report(rs, !no_timing);
      if (!json_path.empty()) emit(json_report(rs), json_path);
      return all_passed(rs) ? 0 : 1;
    }
    if (*lat) {
      if (*info) {
        std::cout << info_text(load_lattice(file));
      } else if (*op_comp) {
        Lattice l = load_lattice(file);
        if (!l.ambient) throw UsageError("complement needs a lattice with ambient and basis");
        emit(lattice_to_json(orthogonal_complement(l)), out);
      } else if (*op_adj) {
        Lattice l = load_lattice(file);
        std::vector<GlueSpec> g;
        for (const auto& s : glue) g.push_back(GlueSpec::from_rational(parse_vector(s, l.rank())));
        emit(lattice_to_json(adjoin(l, g, !allow_odd)), out);
      } else if (*op_disc) {
        std::cout << disc_form_text(load_lattice(file));
      } else if (*op_sat) {
        Lattice l = load_lattice(file);
        if (!l.ambient) throw UsageError("saturate needs a lattice with ambient and basis");
        RatMatrix b = l.basis;
        for (std::size_t c = 0; c < b.cols(); ++c)
          for (std::size_t r = 0; r < b.rows(); ++r)
            if (b(r, c).get_den() != 1) throw UsageError("saturate needs an integral basis");
        emit(lattice_to_json(embed(*l.ambient, saturation(to_int(b)), l.name + "^sat")), out);
      } else if (*op_sum) {
        emit(lattice_to_json(direct_sum(load_lattice(file), load_lattice(file2))), out);
      } else if (*op_scale) {
        emit(lattice_to_json(rescale(load_lattice(file), factor)), out);
      }
      return 0;
    }
    if (*qf) {
      Lattice l = load_lattice(file);
      auto inv = invariants(l.gram);
      std::cout << to_string(inv) << "\n";
      if (l.det() != 0)
        for (const auto& p : relevant_places(l.det()))
          std::cout << "hasse@" << (p == kInfinity ? std::string("inf") : p.get_str()) << ": "
                    << hasse_invariant(l.gram, p) << "\n";
      return 0;
    }
    if (*named) {
      if (list_named) {
        for (const auto& n : named_lattice_names()) std::cout << n << "\n";
        return 0;
      }
      if (name.empty()) throw UsageError("give a lattice name (or --list)");
      Lattice l = build_named(name);
      if (!save.empty()) save_lattice(save, l);
      std::cout << info_text(l);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
