// prj3d: projective equivalences and symmetries of rational space curves.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prj3d/bench.hpp"
#include "prj3d/json_io.hpp"

using namespace prj3d;

namespace {

enum Exit { kEquivalent = 0, kNotEquivalent = 1, kInvalid = 2, kUndecided = 3 };

int exit_code(Status s) {
  switch (s) {
    case Status::Equivalent: return kEquivalent;
    case Status::NotEquivalent: return kNotEquivalent;
    case Status::Undecided: return kUndecided;
  }
  return kInvalid;
}

std::uint64_t default_seed() {
  const char* s = std::getenv("PRJ3D_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument, "PRJ3D_SEED must be an unsigned integer");
  }
}

struct DetectFlags {
  bool json = false;
  bool force = false;
  bool dump = false;
  bool no_timings = false;
  int max_ext_degree = 2;
};

void add_detect_flags(CLI::App* cmd, DetectFlags& f) {
  cmd->add_flag("--json", f.json, "Print the report as JSON");
  cmd->add_flag("--force", f.force, "Skip the properness check");
  cmd->add_flag("--dump-invariants", f.dump, "Include the invariants and curvatures");
  cmd->add_flag("--no-timings", f.no_timings, "Omit wall times from the output");
  cmd->add_option("--max-ext-degree", f.max_ext_degree, "Degree of coefficient fields searched (only 2)");
}

std::string matrix_str(const Mat4<Scalar>& M) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? ", [" : "[";
    for (int k = 0; k < 4; ++k) s += (k ? ", " : "") + M[i][k].str();
    s += "]";
  }
  return s + "]";
}

void print_text(const DetectionReport& r, bool timings) {
  const Diagnostics& d = r.diagnostics;
  std::cout << "status: " << status_name(r.status) << "\n";
  std::cout << "pairs: " << r.pairs.size() << "\n";
  for (const auto& p : r.pairs) {
    std::cout << "  phi = " << p.phi.str();
    if (p.field != 1) std::cout << "  over Q(sqrt(" << p.field << "))";
    std::cout << "\n    M = " << matrix_str(p.M) << "\n";
  }
  std::cout << "bidegrees: E1 (" << d.e1_bidegree[0] << "," << d.e1_bidegree[1] << ")  E2 (" << d.e2_bidegree[0] << ","
            << d.e2_bidegree[1] << ")  G (" << d.g_bidegree[0] << "," << d.g_bidegree[1] << ")\n";
  if (d.extraction.unsupported_degree) std::cout << "note: G has factors over fields of degree > 2\n";
  if (timings) std::cout << "seconds: " << d.seconds << "\n";
}

int run_detect(const std::vector<std::string>& files, const DetectFlags& f) {
  if (f.max_ext_degree != 2) throw Error(Errc::InvalidArgument, "--max-ext-degree supports only 2");
  Curve p = io::load_curve(files[0]);
  Curve q = files.size() > 1 ? io::load_curve(files[1]) : p;
  DetectionReport r = files.size() > 1 ? detect_equivalences(p, q, {f.force}) : detect_symmetries(p, {f.force});
  io::json inv;
  if (f.dump) {
    auto dump = [](const Curve& c) {
      InvariantSet s = compute_invariants(c);
      return io::to_json(s, compute_curvatures(s));
    };
    inv["p"] = dump(p);
    if (files.size() > 1) inv["q"] = dump(q);
  }
  if (f.json) {
    io::json j = io::to_json(r, !f.no_timings);
    if (f.dump) j["invariants"] = inv;
    std::cout << j.dump(2) << "\n";
  } else {
    if (f.dump) std::cout << inv.dump(2) << "\n";
    print_text(r, !f.no_timings);
  }
  return exit_code(r.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective equivalences and symmetries of rational space curves"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  DetectFlags df;
  auto* equiv = app.add_subcommand("equiv", "Projectivities mapping the curve in P onto the curve in Q");
  equiv->add_option("files", files, "Curve files P and Q")->required()->expected(2);
  add_detect_flags(equiv, df);

  std::string sym_file;
  auto* sym = app.add_subcommand("sym", "Projective symmetries of a curve");
  sym->add_option("file", sym_file, "Curve file")->required();
  add_detect_flags(sym, df);

  int degree = 0, bitsize = 4;
  std::uint64_t seed = 0;
  bool pair = false, central = false;
  std::string out;
  auto* gen = app.add_subcommand("gen", "Random curves with a planted equivalence or symmetry");
  gen->add_option("--degree", degree, "Degree")->required();
  gen->add_option("--bitsize", bitsize, "Coefficient bitsize");
  auto* seed_opt = gen->add_option("--seed", seed, "Seed (default PRJ3D_SEED or 0)");
  auto* pair_flag = gen->add_flag("--pair", pair, "Write p = M (q o phi), q and the planted (M, phi)");
  gen->add_flag("--central-inversion", central, "Curve symmetric under (t0, t1) -> (t1, t0)")->excludes(pair_flag);
  gen->add_option("-o,--output", out, "Output path (stem for --pair)");

  std::string degrees = "4..12", bitsizes = "4", modes = "equiv", csv;
  int seeds = 3, jobs = 1;
  bool no_timings = false;
  std::uint64_t base_seed = 0;
  auto* bench = app.add_subcommand("bench", "Timing table as CSV");
  bench->add_option("--degrees", degrees, "Degrees, e.g. 5..12 or 4,6,8");
  bench->add_option("--bitsizes", bitsizes, "Bitsizes");
  bench->add_option("--seeds", seeds, "Seeds per cell");
  auto* base_opt = bench->add_option("--seed", base_seed, "First seed (default PRJ3D_SEED or 0)");
  bench->add_option("--modes", modes, "Comma-separated: equiv, sym, central-inversion, non-equiv");
  bench->add_option("--csv", csv, "Output file (default stdout)");
  bench->add_option("--jobs", jobs, "Parallel cases");
  bench->add_flag("--no-timings", no_timings, "Write NA for seconds, for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }

  try {
    if (*equiv) return run_detect(files, df);
    if (*sym) return run_detect({sym_file}, df);

    if (*gen) {
      if (!*seed_opt) seed = default_seed();
      if (pair) {
        EquivalentPair e = gen_equivalent_pair(degree, bitsize, seed);
        if (out.empty()) throw Error(Errc::InvalidArgument, "--pair needs -o");
        std::string stem = out.size() > 5 && out.ends_with(".json") ? out.substr(0, out.size() - 5) : out;
        io::write_json_file(stem + "_p.json", io::to_json(e.p));
        io::write_json_file(stem + "_q.json", io::to_json(e.q));
        io::json truth = {{"relation", "p = M (q o phi)"},
                          {"matrix", io::to_json(e.M)},
                          {"moebius", io::to_json(e.phi)},
                          {"degree", degree},
                          {"bitsize", bitsize},
                          {"seed", seed}};
        io::write_json_file(stem + "_truth.json", truth);
        std::cout << stem << "_p.json " << stem << "_q.json " << stem << "_truth.json\n";
        return 0;
      }
      Curve c = central ? gen_central_inversion(degree, bitsize, seed) : gen_random(degree, bitsize, seed);
      if (out.empty())
        std::cout << io::to_json(c).dump(2) << "\n";
      else
        io::write_json_file(out, io::to_json(c));
      return 0;
    }

    if (*bench) {
      if (!*base_opt) base_seed = default_seed();
      if (seeds < 1) throw Error(Errc::InvalidArgument, "--seeds must be positive");
      std::vector<bench::Mode> ms;
      std::size_t start = 0;
      for (;;) {
        std::size_t comma = modes.find(',', start);
        ms.push_back(bench::parse_mode(modes.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      auto cases = bench::case_list(ms, bench::parse_range(degrees), bench::parse_range(bitsizes), seeds, base_seed);
      auto recs = bench::run(cases, jobs);
      if (csv.empty()) {
        bench::write_csv(std::cout, recs, !no_timings);
      } else {
        std::ofstream f(csv);
        if (!f) throw Error(Errc::InvalidArgument, "cannot write " + csv);
        bench::write_csv(f, recs, !no_timings);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::UnsupportedAlgebraicDegree ? kUndecided : kInvalid;
  }
  return kInvalid;
}
