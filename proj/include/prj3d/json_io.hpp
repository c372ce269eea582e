#pragma once

// JSON forms of curves, polynomials and detection reports.

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "detect.hpp"
#include "invariants.hpp"

namespace prj3d::io {

using nlohmann::json;

// Integers that fit in int64 are plain numbers, everything else a string.
inline json to_json(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

inline json to_json(const Rat& x) {
  if (x.get_den() == 1) return to_json(x.get_num());
  return json(to_string(x));
}

inline json to_json(const Scalar& x) {
  if (x.is_rational()) return to_json(x.to_rat());
  return json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", to_json(x.d())}};
}

template <class T>
json to_json(const HPoly<T>& p) {
  json c = json::array();
  for (int j = 0; j <= p.degree(); ++j) c.push_back(to_json(p[j]));
  return json{{"degree", p.degree()}, {"coeffs", c}};
}

inline json to_json(const RatFn& f) { return json{{"num", to_json(f.num)}, {"den", to_json(f.den)}}; }

template <class T>
json to_json(const BiHPoly<T>& p) {
  json rows = json::array();
  for (int i = 0; i <= p.m1(); ++i) {
    json r = json::array();
    for (int k = 0; k <= p.m2(); ++k) r.push_back(to_json(p.at(i, k)));
    rows.push_back(r);
  }
  return json{{"bidegree", {p.m1(), p.m2()}}, {"coeffs", rows}};
}

template <class T>
json to_json(const Mat4<T>& m) {
  json r = json::array();
  for (const auto& row : m) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(to_json(x));
    r.push_back(jr);
  }
  return r;
}

inline json to_json(const Moebius& phi) {
  return json::array({json::array({to_json(phi.a()), to_json(phi.b())}), json::array({to_json(phi.c()), to_json(phi.d())})});
}

inline json to_json(const Curve& c) {
  json rows = json::array();
  for (const auto& r : c.rows()) {
    json jr = json::array();
    for (const auto& x : r) jr.push_back(to_json(x));
    rows.push_back(jr);
  }
  return json{{"degree", c.degree()}, {"coefficients", rows}};
}

inline json field_json(const Int& d) { return d == 1 ? json("Q") : json{{"sqrt", to_json(d)}}; }

inline json to_json(const DetectionReport& r, bool timings = true) {
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"moebius", to_json(p.phi)}, {"matrix", to_json(p.M)}, {"field", field_json(p.field)}});
  const Diagnostics& d = r.diagnostics;
  json pts = json::array();
  for (const auto& t : d.sample_points) pts.push_back({t[0], t[1]});
  json diag = {{"e1_bidegree", d.e1_bidegree},
               {"e2_bidegree", d.e2_bidegree},
               {"g_bidegree", d.g_bidegree},
               {"samples", d.extraction.samples},
               {"candidates", d.extraction.candidates},
               {"unsupported_algebraic_degree", d.extraction.unsupported_degree},
               {"discarded", d.extraction.discarded},
               {"matrix_sample_points", pts}};
  if (timings) diag["seconds"] = d.seconds;
  return json{{"status", status_name(r.status)}, {"pairs", pairs}, {"diagnostics", diag}};
}

inline json to_json(const InvariantSet& s, const Curvatures& k) {
  json A = json::array();
  for (const auto& a : s.A) A.push_back(to_json(a));
  json I = json::array();
  for (const auto& x : s.I) I.push_back(to_json(x));
  return json{{"degree", s.n}, {"delta", to_json(s.delta)}, {"A", A},         {"I", I},
              {"I0", to_json(s.I0)}, {"kappa1", to_json(k.k1)}, {"kappa2", to_json(k.k2)}};
}

// ---------------------------------------------------------------- parsing

inline Rat parse_scalar(const json& j) {
  try {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<std::int64_t>())));
    if (j.is_number_unsigned()) return Rat(Int(std::to_string(j.get<std::uint64_t>())));
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, std::string("bad coefficient: ") + e.what());
  }
  throw Error(Errc::ParseError, "coefficient must be an integer or a \"num/den\" string, got " + j.dump());
}

inline std::vector<Rat> parse_list(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, std::string(what) + " must be a nonempty array");
  std::vector<Rat> r;
  for (const auto& x : j) r.push_back(parse_scalar(x));
  return r;
}

namespace detail {

// Rational coefficient list (ascending powers of t) times the lcm of its denominators.
inline upoly::ZPoly integral(const std::vector<Rat>& a, Int* scale) {
  Int l = 1;
  for (const auto& x : a) l = ilcm(l, x.get_den());
  upoly::ZPoly r;
  for (const auto& x : a) r.push_back(Int(x * l));
  upoly::trim(r);
  *scale = l;
  return r;
}

}  // namespace detail

/// Affine x, y, z given as coefficient lists in ascending powers of t, each
/// either a plain list or {"num": [...], "den": [...]}; the common
/// denominator becomes component 0.
inline Curve parse_affine(const json& a) {
  if (!a.is_object()) throw Error(Errc::ParseError, "\"affine\" must be an object");
  std::array<upoly::ZPoly, 3> num, den;
  const char* names[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    if (!a.contains(names[i])) throw Error(Errc::ParseError, std::string("affine form lacks \"") + names[i] + "\"");
    const json& c = a[names[i]];
    std::vector<Rat> n, d{Rat(1)};
    if (c.is_object()) {
      if (!c.contains("num")) throw Error(Errc::ParseError, "affine component lacks \"num\"");
      n = parse_list(c["num"], "num");
      if (c.contains("den")) d = parse_list(c["den"], "den");
    } else {
      n = parse_list(c, names[i]);
    }
    Int sn, sd;
    upoly::ZPoly N = detail::integral(n, &sn), D = detail::integral(d, &sd);
    if (D.empty()) throw Error(Errc::ParseError, "zero denominator");
    // N/sn over D/sd = (N sd) / (D sn)
    N = upoly::scale(N, sd);
    D = upoly::scale(D, sn);
    if (!N.empty()) {
      upoly::ZPoly g = upoly::gcd(N, D), qn, qd;
      upoly::divide_exact(N, g, qn);
      upoly::divide_exact(D, g, qd);
      N = std::move(qn);
      D = std::move(qd);
    } else {
      D = {Int(1)};
    }
    num[i] = N;
    den[i] = D;
  }
  upoly::ZPoly L = den[0];
  for (int i = 1; i < 3; ++i) {
    upoly::ZPoly g = upoly::gcd(L, den[i]), q;
    upoly::divide_exact(den[i], g, q);
    L = upoly::mul(L, q);
  }
  std::array<upoly::ZPoly, 4> comp;
  comp[0] = L;
  for (int i = 0; i < 3; ++i) {
    upoly::ZPoly q;
    upoly::divide_exact(L, den[i], q);
    comp[i + 1] = upoly::mul(num[i], q);
  }
  int n = 0;
  for (const auto& c : comp) n = std::max(n, upoly::deg(c));
  std::vector<std::vector<Rat>> rows(4, std::vector<Rat>(n + 1, Rat(0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= upoly::deg(comp[i]); ++j) rows[i][j] = Rat(comp[i][j]);
  return Curve(n, rows);
}

/// Parses a curve document without validating it.
inline Curve parse_curve(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "curve document must be an object");
  if (j.contains("affine")) return parse_affine(j["affine"]);
  if (!j.contains("degree") || !j.contains("coefficients"))
    throw Error(Errc::ParseError, "curve needs \"degree\" and \"coefficients\"");
  if (!j["degree"].is_number_integer()) throw Error(Errc::ParseError, "\"degree\" must be an integer");
  long n = j["degree"].get<long>();
  if (n < 0 || n > 100000) throw Error(Errc::ParseError, "degree out of range");
  const json& c = j["coefficients"];
  if (!c.is_array() || c.size() != 4) throw Error(Errc::ParseError, "\"coefficients\" must hold four rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : c) {
    rows.push_back(parse_list(r, "coefficient row"));
    if (rows.back().size() != static_cast<std::size_t>(n + 1))
      throw Error(Errc::ParseError, "each row needs degree + 1 coefficients");
  }
  return Curve(static_cast<int>(n), rows);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

/// Reads, homogenizes and validates a curve file.
inline Curve load_curve(const std::string& path) {
  Curve c = parse_curve(read_json_file(path));
  validate_or_throw(c);
  return c;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace prj3d::io
