#pragma once

// Benchmark harness: deterministic case lists, one detection call per case.

#include <atomic>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "detect.hpp"

namespace prj3d::bench {

enum class Mode { Equiv, Sym, CentralInversion, NonEquiv };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Equiv: return "equiv";
    case Mode::Sym: return "sym";
    case Mode::CentralInversion: return "central-inversion";
    case Mode::NonEquiv: return "non-equiv";
  }
  return "?";
}

inline Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::Equiv, Mode::Sym, Mode::CentralInversion, Mode::NonEquiv})
    if (s == mode_name(m)) return m;
  throw Error(Errc::InvalidArgument, "unknown mode '" + s + "'");
}

struct Case {
  Mode mode;
  int degree;
  int bitsize;
  std::uint64_t seed;
};

struct Record {
  Case c;
  double seconds = 0;
  int count = 0;
  std::string status;
};

/// "5..12", "5-12", "4,8,16" or a single value; empty ranges are errors.
inline std::vector<int> parse_range(const std::string& s) {
  std::vector<int> r;
  auto num = [&](const std::string& t) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "bad range '" + s + "'");
    }
  };
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t dots = item.find("..");
    std::size_t dash = item.find('-', 1);
    if (dots != std::string::npos || dash != std::string::npos) {
      std::size_t sep = dots != std::string::npos ? dots : dash;
      int lo = num(item.substr(0, sep)), hi = num(item.substr(sep + (dots != std::string::npos ? 2 : 1)));
      for (int v = lo; v <= hi; ++v) r.push_back(v);
    } else {
      r.push_back(num(item));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (r.empty()) throw Error(Errc::InvalidArgument, "empty range '" + s + "'");
  return r;
}

inline std::vector<Case> case_list(const std::vector<Mode>& modes, const std::vector<int>& degrees,
                                   const std::vector<int>& bitsizes, int seeds, std::uint64_t base_seed) {
  std::vector<Case> r;
  for (Mode m : modes)
    for (int d : degrees)
      for (int b : bitsizes)
        for (int s = 0; s < seeds; ++s) r.push_back({m, d, b, base_seed + static_cast<std::uint64_t>(s)});
  return r;
}

// second curve of a non-equivalent pair comes from an unrelated stream
constexpr std::uint64_t kSecondCurveOffset = 0x9e3779b97f4a7c15ULL;

inline Record run_case(const Case& c) {
  Record rec{c, 0, 0, ""};
  try {
    DetectionReport r;
    switch (c.mode) {
      case Mode::Equiv: {
        EquivalentPair e = gen_equivalent_pair(c.degree, c.bitsize, c.seed);
        r = detect_equivalences(e.p, e.q);
        bool found = false;
        for (const auto& p : r.pairs) found |= p.phi == e.phi;
        rec.status = found ? "ok" : "missed";
        break;
      }
      case Mode::Sym: {
        r = detect_symmetries(gen_random(c.degree, c.bitsize, c.seed));
        bool id = false;
        for (const auto& p : r.pairs) id |= p.phi == Moebius::identity();
        rec.status = id ? "ok" : "missed";
        break;
      }
      case Mode::CentralInversion: {
        r = detect_symmetries(gen_central_inversion(c.degree, c.bitsize, c.seed));
        Moebius swap{Scalar(0L), Scalar(1L), Scalar(1L), Scalar(0L)};
        bool found = false;
        for (const auto& p : r.pairs) found |= p.phi == swap;
        rec.status = found ? "ok" : "missed";
        break;
      }
      case Mode::NonEquiv: {
        Curve p = gen_random(c.degree, c.bitsize, c.seed);
        Curve q = gen_random(c.degree, c.bitsize, c.seed ^ kSecondCurveOffset);
        r = detect_equivalences(p, q);
        rec.status = r.status == Status::NotEquivalent ? "ok" : status_name(r.status);
        break;
      }
    }
    if (rec.status == "ok" && r.status == Status::Undecided) rec.status = "undecided";
    rec.seconds = r.diagnostics.seconds;
    rec.count = static_cast<int>(r.pairs.size());
  } catch (const Error& e) {
    rec.status = std::string("error:") + errc_name(e.code());
  }
  return rec;
}

/// Runs cases on `jobs` threads; records come back in case order.
inline std::vector<Record> run(const std::vector<Case>& cases, int jobs) {
  std::vector<Record> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) out[i] = run_case(cases[i]);
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<Record>& recs, bool timings) {
  os << "mode,degree,bitsize,seed,seconds,count,status\n";
  char buf[32];
  for (const auto& r : recs) {
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    os << mode_name(r.c.mode) << ',' << r.c.degree << ',' << r.c.bitsize << ',' << r.c.seed << ','
       << (timings ? buf : "NA") << ',' << r.count << ',' << r.status << '\n';
  }
}

}  // namespace prj3d::bench
