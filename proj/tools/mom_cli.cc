// Copyright 2026 The mom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand writes one JSON document (or
// CSV with --format csv); domain errors exit 1 with {"error", "message"},
// usage errors exit 2.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mom/distribution.h"
#include "mom/error.h"
#include "mom/field.h"
#include "mom/interpolate.h"
#include "mom/kakeya.h"
#include "mom/merger.h"
#include "mom/poly.h"
#include "mom/rational.h"
#include "mom/rs_decode.h"
#include "mom/selftest.h"

namespace {

using json = nlohmann::ordered_json;
using namespace mom;

struct Output {
  std::string format = "json";
  std::string path;
  std::size_t offset = 0;
  std::size_t limit = 1000;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<Point> parse_points(const FieldSpec& f, const std::string& text) {
  std::vector<Point> out;
  for (const auto& p : split(text, ';')) out.push_back(parse_point(f, p));
  return out;
}

std::vector<Point> read_points_file(const FieldSpec& f, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::vector<Point> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_point(f, line));
  }
  return out;
}

Exponents parse_exponents(const std::string& text) {
  Exponents out;
  for (const auto& x : split(text, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(x)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad exponent '" + x + "'");
    }
  }
  return out;
}

MultiPoly read_poly(const FieldSpec& f, std::size_t n, const std::string& text) {
  return n == 0 ? parse_poly(f, text) : parse_poly(f, n, text);
}

json multiplicity_json(const Multiplicity& m) {
  if (m.is_infinite()) return "inf";
  return m.value();
}

json point_list(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

json poly_list(const std::vector<MultiPoly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

// Cuts `items` to the requested page and records the continuation.
json paginate(json items, const Output& o) {
  const std::size_t total = items.size();
  const std::size_t begin = std::min(o.offset, total);
  const std::size_t end = std::min(total, begin + o.limit);
  json page = json::array();
  for (std::size_t i = begin; i < end; ++i) page.push_back(std::move(items[i]));
  json out;
  out["items"] = std::move(page);
  out["total"] = total;
  out["offset"] = begin;
  out["next_offset"] = end < total ? json(end) : json(nullptr);
  return out;
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string to_csv(const json& doc) {
  std::vector<json> records;
  if (doc.contains("records") && doc["records"].is_array()) {
    for (const auto& r : doc["records"]) records.push_back(r);
  } else {
    json flat;
    for (const auto& [k, v] : doc.items()) flat[k] = v;
    records.push_back(flat);
  }
  std::vector<std::string> columns;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + csv_cell(columns[c]);
  out += "\n";
  for (const auto& r : records) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out += c ? "," : "";
      if (r.contains(columns[c])) out += csv_cell(r[columns[c]]);
    }
    out += "\n";
  }
  return out;
}

void emit(const json& doc, const Output& o) {
  const std::string text = o.format == "csv" ? to_csv(doc) : doc.dump(2) + "\n";
  if (o.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + o.path);
  out << text;
}

struct FieldArgs {
  std::string field;
  std::size_t n = 0;
};

void add_field(CLI::App* cmd, FieldArgs& a, bool need_n) {
  cmd->add_option("--field", a.field, "field order: p, p^e or q")->required();
  auto* opt = cmd->add_option("--n", a.n, "number of variables / dimension");
  if (need_n) opt->required()->check(CLI::PositiveNumber);
}

std::vector<Point> points_arg(const FieldSpec& f, std::size_t n, const std::string& text,
                              const std::string& file, bool all) {
  if (all) return all_points(f, n);
  if (!file.empty()) return read_points_file(f, file);
  return parse_points(f, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mom: polynomial method experiments over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::size_t jobs = 1;
  app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.path, "write output to this file");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--offset", out.offset, "first list item to print");
  app.add_option("--limit", out.limit, "maximum list items to print")->check(CLI::PositiveNumber);

  std::function<json()> run;
  std::function<int(const json&)> status = [](const json&) { return 0; };

  // hasse
  FieldArgs h;
  std::string h_poly, h_i, h_at;
  auto* hasse = app.add_subcommand("hasse", "Hasse derivative P^(i), optionally evaluated");
  add_field(hasse, h, false);
  hasse->add_option("--poly", h_poly)->required();
  hasse->add_option("--i", h_i, "derivative index, e.g. 1,0")->required();
  hasse->add_option("--at", h_at, "evaluation point");
  hasse->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(h.field);
      const MultiPoly p = read_poly(f, h.n, h_poly);
      const Exponents i = parse_exponents(h_i);
      json r;
      r["field"] = f.to_string();
      r["poly"] = to_string(p);
      r["i"] = i;
      r["derivative"] = to_string(hasse_derivative(p, i));
      if (!h_at.empty()) r["value"] = hasse_eval(p, i, parse_point(f, h_at)).index();
      return r;
    };
  });

  // mult
  FieldArgs mu;
  std::string mu_poly, mu_point;
  auto* mult = app.add_subcommand("mult", "multiplicity of P at a point");
  add_field(mult, mu, false);
  mult->add_option("--poly", mu_poly)->required();
  mult->add_option("--point", mu_point)->required();
  mult->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(mu.field);
      const Point a = parse_point(f, mu_point);
      const MultiPoly p = read_poly(f, mu.n ? mu.n : a.size(), mu_poly);
      json r;
      r["field"] = f.to_string();
      r["poly"] = to_string(p);
      r["point"] = to_string(a);
      r["multiplicity"] = multiplicity_json(multiplicity(p, a));
      return r;
    };
  });

  // sz-mass
  FieldArgs sz;
  std::string sz_poly, sz_set;
  auto* szm = app.add_subcommand("sz-mass", "sum of multiplicities over S^n against deg(P)|S|^(n-1)");
  add_field(szm, sz, false);
  szm->add_option("--poly", sz_poly)->required();
  szm->add_option("--set", sz_set, "S as field indices, default all of F_q");
  szm->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(sz.field);
      const MultiPoly p = read_poly(f, sz.n, sz_poly);
      std::vector<FieldElement> s;
      if (sz_set.empty()) {
        s = field_enumerate(f);
      } else {
        for (const auto& x : parse_point(f, sz_set)) s.push_back(x);
      }
      const std::uint64_t mass = multiplicity_mass(p, s, jobs);
      BigInt bound = p.degree().value_or(0);
      for (std::size_t j = 1; j < p.num_vars(); ++j) bound *= s.size();
      json r;
      r["mass"] = mass;
      r["bound"] = static_cast<std::uint64_t>(bound);
      r["ok"] = BigInt(mass) <= bound;
      return r;
    };
  });

  // interpolate
  FieldArgs ip;
  std::uint32_t ip_m = 1;
  std::optional<std::uint32_t> ip_degree;
  std::string ip_points, ip_weighted;
  auto* interp = app.add_subcommand("interpolate", "nonzero polynomial vanishing to order m on given points");
  add_field(interp, ip, true);
  interp->add_option("--m", ip_m, "required multiplicity")->check(CLI::PositiveNumber);
  interp->add_option("--points", ip_points, "points a,b;c,d;...")->required();
  interp->add_option("--degree", ip_degree, "total degree bound; default is the smallest that satisfies the count");
  interp->add_option("--weighted", ip_weighted, "bivariate (1,k)-weighted basis: k,d,ydeg_cap");
  interp->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(ip.field);
      InterpolationProblem pr{f, ip.n, parse_points(f, ip_points), ip_m, TotalDegreeBasis{0}};
      if (!ip_weighted.empty()) {
        const auto w = parse_exponents(ip_weighted);
        if (w.size() != 3) throw Error(ErrorCode::kParseError, "--weighted needs k,d,ydeg_cap");
        pr.basis = WeightedDegreeBasis{w[1], w[0], w[2]};
      } else if (ip_degree) {
        pr.basis = TotalDegreeBasis{*ip_degree};
      } else {
        const BigInt need = constraint_count(pr);
        std::uint32_t d = 0;
        while (count_total_degree_monomials(static_cast<std::uint32_t>(ip.n), d) <= need) ++d;
        pr.basis = TotalDegreeBasis{d};
      }
      const MultiPoly p = vanishing_interpolation(pr);
      json r;
      r["field"] = f.to_string();
      r["monomials"] = basis_monomials(pr).size();
      r["constraints"] = static_cast<std::uint64_t>(constraint_count(pr));
      r["degree"] = p.degree() ? json(*p.degree()) : json(nullptr);
      r["poly"] = to_string(p);
      return r;
    };
  });

  // kakeya-verify
  FieldArgs kv;
  std::string kv_points, kv_file;
  bool kv_all = false;
  std::optional<std::uint32_t> kv_l;
  auto* kver = app.add_subcommand("kakeya-verify", "check that a set contains a line in every direction");
  add_field(kver, kv, true);
  kver->add_option("--points", kv_points, "points a,b;c,d;...");
  kver->add_option("--points-file", kv_file, "one point per line");
  kver->add_flag("--all", kv_all, "use the whole space");
  kver->add_option("--homogeneous-check", kv_l, "also run the top-homogeneous-part vanishing check with this l");
  kver->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(kv.field);
      const auto pts = points_arg(f, kv.n, kv_points, kv_file, kv_all);
      const KakeyaCheck c = is_kakeya(f, kv.n, pts);
      json r;
      r["field"] = f.to_string();
      r["n"] = kv.n;
      r["size"] = pts.size();
      r["is_kakeya"] = c.is_kakeya;
      r["violating_direction"] = c.violating_direction ? json(to_string(*c.violating_direction)) : json(nullptr);
      json w = json::array();
      for (const auto& x : c.witnesses) {
        w.push_back({{"direction", to_string(x.direction)}, {"offset", to_string(x.offset)}});
      }
      r["witnesses"] = paginate(std::move(w), out);
      if (kv_l) {
        const auto rep = homogeneous_vanishing_check(KakeyaInstance{f, kv.n, pts, c.witnesses}, *kv_l);
        json hv;
        hv["l"] = rep.l;
        hv["m"] = rep.m;
        hv["d"] = rep.d;
        hv["interpolant"] = to_string(rep.interpolant);
        hv["top_part"] = to_string(rep.top_part);
        std::size_t covered = 0;
        json failing = json::array();
        for (const auto& e : rep.entries) {
          covered += e.covered;
          if (e.covered && e.multiplicity < Multiplicity(rep.l)) failing.push_back(to_string(e.point));
        }
        hv["covered_points"] = covered;
        hv["failing_covered_points"] = failing;
        hv["claim_holds"] = rep.claim_holds;
        hv["all_points_hold"] = rep.all_points_hold;
        r["homogeneous_check"] = hv;
      }
      return r;
    };
  });

  // kakeya-search
  FieldArgs ks;
  std::optional<std::size_t> ks_cap;
  auto* ksearch = app.add_subcommand("kakeya-search", "exhaustive minimum Kakeya set (q^n <= 16)");
  add_field(ksearch, ks, true);
  ksearch->add_option("--size-cap", ks_cap, "largest set size to try");
  ksearch->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(ks.field);
      const auto res = exhaustive_min_kakeya(f, ks.n, ks_cap);
      json r;
      r["min_size"] = res.found ? json(res.set.size()) : json(nullptr);
      r["lower_bound_crude"] = to_string(res.bounds.crude);
      r["lower_bound_main"] = to_string(res.bounds.main);
      r["subsets_examined"] = res.subsets_examined;
      r["set"] = point_list(res.set);
      return r;
    };
  });

  // kakeya-stat
  FieldArgs kst;
  std::string kst_points, kst_file;
  bool kst_all = false;
  auto* kstat = app.add_subcommand("kakeya-stat", "statistical Kakeya check built from the lines inside K");
  add_field(kstat, kst, true);
  kstat->add_option("--points", kst_points, "points a,b;c,d;...");
  kstat->add_option("--points-file", kst_file, "one point per line");
  kstat->add_flag("--all", kst_all, "use the whole space");
  kstat->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(kst.field);
      const auto pts = points_arg(f, kst.n, kst_points, kst_file, kst_all);
      const auto inst = stat_instance_from_lines(f, kst.n, pts);
      const auto rep = statistical_kakeya_check(inst);
      json r;
      r["lambda"] = to_string(inst.lambda);
      r["eta"] = to_string(inst.eta);
      r["curve_degree"] = inst.curve_degree;
      r["covered_points"] = inst.s.size();
      r["set_size"] = rep.set_size;
      r["bound"] = to_string(rep.bound);
      r["hypothesis_ok"] = rep.hypothesis_ok;
      r["bound_holds"] = rep.bound_holds;
      return r;
    };
  });

  // merger-run
  FieldArgs mr;
  std::uint32_t mr_lambda = 2;
  std::string mr_x, mr_source;
  std::optional<std::uint32_t> mr_u;
  std::optional<std::string> mr_bits;
  auto* mrun = app.add_subcommand("merger-run", "evaluate the curve merger or the exact law of one source");
  add_field(mrun, mr, true);
  mrun->add_option("--lambda", mr_lambda, "number of blocks")->check(CLI::PositiveNumber);
  mrun->add_option("--x", mr_x, "blocks x_1;x_2;...");
  mrun->add_option("--u", mr_u, "seed as a field index; default all seeds");
  mrun->add_option("--source", mr_source, "name of an adversarial-family source");
  mrun->add_option("--threshold-bits", mr_bits, "report the distance to this min-entropy");
  mrun->callback([&] {
    run = [&] {
      const FieldSpec f = parse_field(mr.field);
      const MergerSpec ms = merger_make(f, mr.n, mr_lambda);
      json r;
      r["field"] = f.to_string();
      r["n"] = mr.n;
      r["lambda"] = mr_lambda;
      if (!mr_source.empty()) {
        const auto family = adversarial_family(ms);
        auto it = std::find_if(family.begin(), family.end(), [&](const SourceSpec& s) { return s.name == mr_source; });
        if (it == family.end()) throw Error(ErrorCode::kInvalidParameters, "unknown source " + mr_source);
        const Distribution c = exact_output_distribution(ms, *it, jobs);
        r["source"] = it->name;
        r["support_size"] = c.support().size();
        r["max_probability"] = to_string(c.max_probability());
        if (mr_bits) {
          r["threshold_bits"] = *mr_bits;
          r["distance"] = to_string(distance_to_min_entropy(c, dyadic_threshold(parse_rational(*mr_bits))));
        }
        return r;
      }
      const auto x = parse_points(f, mr_x);
      json outputs = json::array();
      for (std::uint32_t u = 0; u < f.q(); ++u) {
        if (mr_u && *mr_u != u) continue;
        outputs.push_back({{"u", u}, {"point", to_string(f_dw(ms, x, f.element(u)))}});
      }
      if (mr_u && outputs.empty()) throw Error(ErrorCode::kInvalidParameters, "--u is not below q");
      r["outputs"] = paginate(std::move(outputs), out);
      return r;
    };
  });

  // merger-verify
  std::string mv_delta, mv_eps;
  std::uint32_t mv_lambda = 2;
  std::size_t mv_n = 1;
  auto* mver = app.add_subcommand("merger-verify", "exact check of the merger theorem on the adversarial family");
  mver->add_option("--delta", mv_delta, "delta, or a comma list to sweep")->required();
  mver->add_option("--eps", mv_eps, "eps, or a comma list to sweep")->required();
  mver->add_option("--lambda", mv_lambda, "number of blocks")->check(CLI::PositiveNumber);
  mver->add_option("--n", mv_n, "block dimension")->check(CLI::PositiveNumber);
  mver->callback([&] {
    run = [&] {
      json records = json::array();
      bool all = true;
      for (const auto& ds : split(mv_delta, ',')) {
        for (const auto& es : split(mv_eps, ',')) {
          const auto v = verify_merger_theorem(parse_rational(ds), parse_rational(es), mv_lambda, mv_n,
                                               adversarial_family, jobs);
          all = all && v.all_within_eps;
          for (const auto& s : v.results) {
            json rec;
            rec["delta"] = to_string(v.delta);
            rec["eps"] = to_string(v.eps);
            rec["lambda"] = v.blocks;
            rec["n"] = v.n;
            rec["d"] = v.seed_bits;
            rec["q"] = std::uint64_t{1} << v.seed_bits;
            rec["threshold_bits"] = to_string(v.threshold_bits);
            rec["source"] = s.source;
            rec["distance"] = to_string(s.distance);
            rec["max_probability"] = to_string(s.max_probability);
            rec["within_eps"] = s.within_eps;
            records.push_back(std::move(rec));
          }
        }
      }
      json r;
      r["all_within_eps"] = all;
      r["records"] = std::move(records);
      return r;
    };
  });

  // rs-decode
  std::string rs_field, rs_alphas, rs_betas, rs_instance, rs_eps = "1/4";
  std::uint32_t rs_k = 1, rs_t = 1;
  bool rs_oracle = false;
  auto* rsd = app.add_subcommand("rs-decode", "list-decode a Reed-Solomon received word");
  rsd->add_option("--instance", rs_instance, "JSON file {field, alphas, betas, k, t}");
  rsd->add_option("--field", rs_field);
  rsd->add_option("--alphas", rs_alphas, "evaluation points; default all of F_q");
  rsd->add_option("--betas", rs_betas, "received symbols");
  rsd->add_option("--k", rs_k, "degree bound");
  rsd->add_option("--t", rs_t, "agreement target");
  rsd->add_option("--eps", rs_eps, "slack parameter");
  rsd->add_flag("--oracle", rs_oracle, "also run exhaustive decoding");
  rsd->callback([&] {
    run = [&] {
      RSInstance inst;
      if (!rs_instance.empty()) {
        std::ifstream in(rs_instance);
        if (!in) throw Error(ErrorCode::kParseError, "cannot read " + rs_instance);
        json doc;
        try {
          doc = json::parse(in);
          inst.spec = parse_field(doc.at("field").is_string() ? doc.at("field").get<std::string>()
                                                              : std::to_string(doc.at("field").get<std::uint32_t>()));
          for (auto v : doc.at("alphas")) inst.alphas.push_back(inst.spec.element(v.get<std::uint32_t>()));
          for (auto v : doc.at("betas")) inst.betas.push_back(inst.spec.element(v.get<std::uint32_t>()));
          inst.k = doc.at("k").get<std::uint32_t>();
          inst.t = doc.at("t").get<std::uint32_t>();
        } catch (const json::exception& e) {
          throw Error(ErrorCode::kParseError, std::string("bad instance file: ") + e.what());
        }
      } else {
        if (rs_field.empty() || rs_betas.empty()) {
          throw Error(ErrorCode::kInvalidParameters, "need --instance or --field and --betas");
        }
        inst.spec = parse_field(rs_field);
        inst.alphas = rs_alphas.empty() ? field_enumerate(inst.spec) : parse_point(inst.spec, rs_alphas);
        inst.betas = parse_point(inst.spec, rs_betas);
        inst.k = rs_k;
        inst.t = rs_t;
      }
      for (const auto& a : inst.alphas) {
        if (a.index() >= inst.spec.q()) throw Error(ErrorCode::kParseError, "symbol >= q");
      }
      const DecodeResult res = list_decode_report(inst, parse_rational(rs_eps));
      json r;
      r["params"] = {{"m", res.params.m},
                     {"d", res.params.d},
                     {"theta_num", numerator(res.params.theta).str()},
                     {"theta_den", denominator(res.params.theta).str()},
                     {"ydeg_cap", res.params.ydeg_cap},
                     {"eps", to_string(res.params.eps)}};
      r["list"] = paginate(poly_list(res.list), out);
      r["bound"] = to_string(list_size_bound(inst.gamma(), inst.rate()));
      if (rs_oracle) r["oracle"] = poly_list(brute_force_decode(inst));
      return r;
    };
  });

  // rs-bound
  std::string rb_gamma, rb_rate;
  auto* rsb = app.add_subcommand("rs-bound", "list size bound 2 gamma/(gamma^2 - R)");
  rsb->add_option("--gamma", rb_gamma)->required();
  rsb->add_option("--rate", rb_rate)->required();
  rsb->callback([&] {
    run = [&] {
      const Rational g = parse_rational(rb_gamma), rate = parse_rational(rb_rate);
      json r;
      r["gamma"] = to_string(g);
      r["rate"] = to_string(rate);
      r["bound"] = to_string(list_size_bound(g, rate));
      return r;
    };
  });

  // selftest
  std::uint64_t st_seed = 0;
  std::uint32_t st_trials = 200;
  std::string st_moduli;
  auto* st = app.add_subcommand("selftest", "run the invariant suite");
  st->add_option("--seed", st_seed, "random seed")->required();
  st->add_option("--trials", st_trials, "instances per randomized law")->check(CLI::PositiveNumber);
  st->add_option("--moduli", st_moduli, "modulus table file replacing the built-in one");
  st->callback([&] {
    run = [&] {
      std::optional<ModulusTable> table;
      if (!st_moduli.empty()) table = ModulusTable::load(st_moduli);
      SelftestOptions opts;
      opts.seed = st_seed;
      opts.jobs = jobs;
      opts.trials = st_trials;
      opts.table = table ? &*table : nullptr;
      const SelftestReport rep = run_selftest(opts);
      json records = json::array();
      std::size_t failed = 0;
      for (const auto& row : rep.rows) {
        failed += !row.passed;
        records.push_back({{"statement", row.statement},
                           {"key", row.key},
                           {"result", row.passed ? "pass" : "fail"},
                           {"checked", row.checked},
                           {"detail", row.detail}});
      }
      json r;
      r["seed"] = st_seed;
      r["trials"] = st_trials;
      r["passed"] = rep.rows.size() - failed;
      r["failed"] = failed;
      r["all_passed"] = rep.all_passed();
      r["records"] = std::move(records);
      return r;
    };
    status = [](const json& r) { return r["all_passed"].get<bool>() ? 0 : 1; };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const json result = run();
    emit(result, out);
    return status(result);
  } catch (const Error& e) {
    json err;
    err["error"] = std::string(e.name());
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
