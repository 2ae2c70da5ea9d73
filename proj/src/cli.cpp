#include "puregaps/cli.hpp"

#include "puregaps/codes.hpp"
#include "puregaps/curve.hpp"
#include "puregaps/errors.hpp"
#include "puregaps/json_io.hpp"
#include "puregaps/kummer_maximals.hpp"
#include "puregaps/pure_gaps.hpp"
#include "puregaps/rr_oracle.hpp"
#include "puregaps/semigroup.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

namespace puregaps::cli {

namespace {

struct CurveOpts {
  Int m = 0;
  Int r = 0;
  Int lambda = 1;
};

struct PlaceOpts {
  std::size_t n = 0;
  std::vector<std::string> places;
};

void add_curve(CLI::App* app, CurveOpts& c) {
  app->add_option("--m", c.m, "degree of the extension")->required();
  app->add_option("--r", c.r, "number of ramified places")->required();
  app->add_option("--lambda", c.lambda, "exponent of the factors")->capture_default_str();
}

void add_places(CLI::App* app, PlaceOpts& p, bool required_n) {
  auto* opt = app->add_option("--n", p.n, "number of places");
  if (required_n) opt->required();
  app->add_option("--places", p.places, "ramified places, e.g. 1,4,7 (default P1..Pn)")
      ->delimiter(',');
}

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

KummerCurve build_curve(const CurveOpts& c) { return new_kummer(c.m, c.r, c.lambda); }

std::vector<PlaceId> resolve_places(const KummerCurve& curve, PlaceOpts& p) {
  std::vector<PlaceId> out;
  if (p.places.empty()) {
    out = first_places(p.n);
  } else {
    for (const std::string& s : p.places) out.push_back(parse_place(s));
    if (p.n == 0) p.n = out.size();
    if (out.size() != p.n)
      throw std::invalid_argument("--places lists " + std::to_string(out.size()) +
                                  " places but --n is " + std::to_string(p.n));
  }
  if (p.n < 1) throw std::invalid_argument("--n must be at least 1");
  if (static_cast<Int>(p.n) > curve.r())
    throw NOutOfRange("n = " + std::to_string(p.n) + " exceeds r = " + std::to_string(curve.r()));
  validate_ramified_places(curve, out);
  return out;
}

Json place_labels(std::span<const PlaceId> places) {
  Json a = Json::array();
  for (PlaceId p : places) a.push_back(p.label());
  return a;
}

std::string csv_row(const Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

void print_set(std::ostream& out, const std::string& format, const Json& header,
               const TupleSet& set, std::size_t n) {
  if (format == "json") {
    Json j = header;
    j["elements"] = to_json(set);
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t i = 1; i <= n; ++i) out << (i > 1 ? "," : "") << 'x' << i;
    out << '\n';
    for (const Tuple& t : set) out << csv_row(t) << '\n';
  } else {
    for (const Tuple& t : set) out << t.to_string() << '\n';
  }
}

// "P1:3,P2:-1,Pinf:4" or "3P1+2Pinf-P2"
Divisor parse_divisor(const std::string& text) {
  Divisor d;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty() || s == "0") return d;
  if (s.find(':') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad divisor term '" + item + "'");
      d.add(parse_place(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    }
    return d;
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    Int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const Int c = pos > start ? std::stoll(s.substr(start, pos - start)) : 1;
    if (pos < s.size() && s[pos] == '*') ++pos;
    start = pos;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
    if (pos == start) throw std::invalid_argument("bad divisor '" + text + "'");
    d.add(parse_place(s.substr(start, pos - start)), sign * c);
  }
  return d;
}

void set_threads(int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("PUREGAPS_THREADS")) {
      try {
        threads = std::stoi(env);
      } catch (const std::exception&) {
        throw std::invalid_argument("PUREGAPS_THREADS must be an integer");
      }
    }
  }
  if (threads > 0) omp_set_num_threads(threads);
}

// ---- verbs ---------------------------------------------------------------

int do_info(std::ostream& out, const CurveOpts& co, const std::string& format) {
  const KummerCurve c = build_curve(co);
  const Int top = max_pure_gap_level(c, 2);
  (void)top;
  Json j = to_json(c);
  j["period"] = period(c);
  j["canonical"] = canonical_divisor(c).to_string();
  j["max_maximal_places"] = max_maximal_places(c);
  j["max_pure_gap_places"] = c.r() - 1 - c.r_div_m();
  if (format == "json") {
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "curve y^" << c.m() << " = prod_{j=1}^{" << c.r() << "} (x - a_j)^" << c.lambda() << '\n';
  out << "genus " << c.genus() << '\n';
  out << "period " << period(c) << '\n';
  out << "canonical divisor " << canonical_divisor(c).to_string() << '\n';
  out << "maximal elements exist for n <= " << max_maximal_places(c) << '\n';
  const Int pg = c.r() - 1 - c.r_div_m();
  if (pg >= 2)
    out << "pure gaps exist for 2 <= n <= " << pg << '\n';
  else
    out << "no pure gaps at two or more ramified places\n";
  return kExitOk;
}

int do_gaps(std::ostream& out, const CurveOpts& co, const std::string& place,
            const std::string& format) {
  const KummerCurve c = build_curve(co);
  const PlaceId p = parse_place(place);
  if (!p.is_infinity()) validate_ramified_places(c, std::vector<PlaceId>{p});
  const OnePlaceGaps g = h_one_place(c, p.is_infinity());
  if (format == "json") {
    out << Json{{"curve", to_json(c)}, {"place", p.label()}, {"gaps", g.gaps}}.dump(2) << '\n';
  } else if (format == "csv") {
    out << "gap\n";
    for (Int v : g.gaps) out << v << '\n';
  } else {
    for (std::size_t i = 0; i < g.gaps.size(); ++i) out << (i ? " " : "") << g.gaps[i];
    out << '\n';
  }
  return kExitOk;
}

int do_pure_gaps(std::ostream& out, const CurveOpts& co, PlaceOpts po, bool count,
                 const std::string& format) {
  const KummerCurve c = build_curve(co);
  const auto places = resolve_places(c, po);
  if (po.n < 2) throw NOutOfRange("pure gaps need n >= 2");
  if (count) {
    const std::string v = big_to_string(pure_gap_count(c, po.n));
    if (format == "json")
      out << Json{{"curve", to_json(c)}, {"n", po.n}, {"count", v}}.dump(2) << '\n';
    else
      out << v << '\n';
    return kExitOk;
  }
  if (format == "json") {
    Json j = tuple_set_export(c, po.n, "pure_gap", collect(pure_gaps(c, po.n)));
    j["places"] = place_labels(places);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  // text and csv stream without materializing
  PureGapStream stream = pure_gaps(c, po.n);
  if (format == "csv") {
    for (std::size_t i = 1; i <= po.n; ++i) out << (i > 1 ? "," : "") << 'x' << i;
    out << '\n';
  }
  while (auto t = stream.next()) out << (format == "csv" ? csv_row(*t) : t->to_string()) << '\n';
  return kExitOk;
}

int do_maximals(std::ostream& out, const CurveOpts& co, PlaceOpts po, const std::string& kind,
                bool c_box, bool include_negative, const std::string& format) {
  const KummerCurve c = build_curve(co);
  const auto places = resolve_places(c, po);
  TupleSet set;
  if (c_box) {
    set = kind == "absolute" ? gamma_hat_box(c, po.n) : lambda_hat_box(c, po.n);
    if (!include_negative)
      std::erase_if(set, [](const Tuple& t) { return t[0] < 0; });
  } else {
    set = kind == "absolute" ? gamma_star(c, po.n) : lambda_star(c, po.n);
  }
  Json header = tuple_set_export(c, po.n, kind, {});
  header["places"] = place_labels(places);
  header["region"] = c_box ? "C" : "positive";
  header.erase("elements");
  print_set(out, format, header, set, po.n);
  return kExitOk;
}

int do_verify_ell(std::ostream& out, const CurveOpts& co, const std::string& text) {
  const KummerCurve c = build_curve(co);
  const Divisor d = parse_divisor(text);
  Json j = to_json(ell(c, d));
  j["divisor"] = d.to_string();
  j["degree"] = d.degree();
  out << j.dump(2) << '\n';
  return kExitOk;
}

int do_verify(std::ostream& out, std::ostream& err, const CurveOpts& co, PlaceOpts po,
              Int max_box) {
  const KummerCurve c = build_curve(co);
  const auto places = resolve_places(c, po);
  if (po.n < 2) throw NOutOfRange("pure gaps need n >= 2");
  if (max_box < 1) throw std::invalid_argument("--max-box must be positive");
  auto in_box = [max_box](const Tuple& t) {
    return std::all_of(t.begin(), t.end(), [max_box](Int v) { return v <= max_box; });
  };

  TupleSet stream_route;
  PureGapStream stream = pure_gaps(c, po.n);
  while (auto t = stream.next())
    if (in_box(*t)) stream_route.insert(*t);

  TupleSet glb_route;
  if (static_cast<Int>(po.n) <= max_maximal_places(c))
    for (const Tuple& t : pure_gaps_from_relative_maximals(lambda_star(c, po.n), po.n))
      if (in_box(t)) glb_route.insert(t);

  const TupleSet oracle_route = oracle_pure_gaps(c, places, max_box);

  if (stream_route == oracle_route && glb_route == oracle_route) {
    out << "OK: enumeration matches oracle (" << oracle_route.size() << " pure gaps)\n";
    return kExitOk;
  }
  auto report = [&err](const char* name, const TupleSet& a, const TupleSet& b) {
    for (const Tuple& t : a)
      if (!b.contains(t)) err << "  " << name << " only: " << t.to_string() << '\n';
  };
  err << "MISMATCH: stream " << stream_route.size() << ", glb " << glb_route.size()
      << ", oracle " << oracle_route.size() << '\n';
  report("stream", stream_route, oracle_route);
  report("oracle", oracle_route, stream_route);
  report("glb", glb_route, oracle_route);
  report("oracle (vs glb)", oracle_route, glb_route);
  return kExitDomain;
}

std::string rate_string(const CodeParams& p) {
  return std::to_string(p.rate_sum.numerator()) + "/" + std::to_string(p.rate_sum.denominator());
}

void print_rows(std::ostream& out, const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "json") {
    Json a = Json::array();
    for (const TableRow& row : rows)
      for (std::size_t i = 0; i < row.params.size(); ++i) {
        Json j = to_json(row.params[i]);
        j["family"] = family_name(row.spec.family);
        j["q"] = row.spec.q;
        if (row.spec.family == CurveFamily::norm_trace_like) j["t"] = row.spec.t;
        j["m"] = row.spec.m;
        j["n"] = row.spec.n;
        j["k"] = row.spec.k;
        j["a"] = row.a_sums[i];
        a.push_back(j);
      }
    out << a.dump(2) << '\n';
  } else if (format == "csv") {
    out << "N,kdim,dlb,degG,ratesum\n";
    for (const TableRow& row : rows)
      for (const CodeParams& p : row.params)
        out << p.length << ',' << p.dimension << ',' << p.distance_bound << ',' << p.deg_g << ','
            << rate_string(p) << '\n';
  } else {
    for (const TableRow& row : rows) {
      out << family_name(row.spec.family) << " q=" << row.spec.q;
      if (row.spec.family == CurveFamily::norm_trace_like) out << " t=" << row.spec.t;
      out << " m=" << row.spec.m << " n=" << row.spec.n << " k=" << row.spec.k << " a=";
      for (std::size_t i = 0; i < row.a_sums.size(); ++i) out << (i ? "," : "") << row.a_sums[i];
      out << "  " << format_bracket(row) << '\n';
    }
  }
}

int do_codes_table(std::ostream& out, const std::string& family, Int q, Int t, Int m,
                   const std::string& format) {
  print_rows(out, sweep_family(parse_curve_family(family), q, t, m), format);
  return kExitOk;
}

int do_codes_showcase(std::ostream& out, const std::string& family, const std::string& format) {
  std::vector<TableRow> rows;
  for (CurveFamily f : {CurveFamily::hermitian_subcover, CurveFamily::norm_trace_like}) {
    if (!family.empty() && parse_curve_family(family) != f) continue;
    const auto specs = showcase_specs(f);
    const auto part = generate_tables(specs);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  print_rows(out, rows, format);
  return kExitOk;
}

int do_codes_design(std::ostream& out, const CurveOpts& co, std::size_t n, Int k,
                    std::vector<Int> a, std::vector<Int> partition, Int length, Int shorten_by,
                    const std::string& format) {
  const KummerCurve c = build_curve(co);
  if (partition.empty()) {
    partition.assign(n, 0);
    if (n > 0) partition[0] = k;
  }
  CodeParams p = design_code(CodeSpec{c, n, k, partition, a, length});
  if (shorten_by > 0) p = shorten(p, shorten_by);
  if (format == "json") {
    out << to_json(p).dump(2) << '\n';
  } else if (format == "csv") {
    out << "N,kdim,dlb,degG,ratesum\n"
        << p.length << ',' << p.dimension << ',' << p.distance_bound << ',' << p.deg_g << ','
        << rate_string(p) << '\n';
  } else {
    out << '[' << p.length << ", " << p.dimension << ", ≥" << p.distance_bound << "]  deg G = "
        << p.deg_g << (p.flagged ? "  (distance bound clamped)" : "") << '\n';
  }
  return kExitOk;
}

int do_plot_data(std::ostream& out, const CurveOpts& co, std::size_t n) {
  const KummerCurve c = build_curve(co);
  out << to_json(plot_data(c, n)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pure gaps and maximal elements on Kummer curves", "puregaps"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (also PUREGAPS_THREADS)");

  CurveOpts curve;
  PlaceOpts places;
  std::string format = "text";
  std::function<int()> action;

  auto* info = app.add_subcommand("info", "genus, period and ranges of a curve");
  add_curve(info, curve);
  add_format(info, format);
  info->callback([&] { action = [&] { return do_info(out, curve, format); }; });

  std::string gap_place = "P1";
  auto* gaps = app.add_subcommand("gaps", "gaps of the semigroup at one place");
  add_curve(gaps, curve);
  gaps->add_option("--place", gap_place, "P<j> or Pinf")->capture_default_str();
  add_format(gaps, format);
  gaps->callback([&] { action = [&] { return do_gaps(out, curve, gap_place, format); }; });

  bool count = false;
  auto* pg = app.add_subcommand("pure-gaps", "pure gaps at n ramified places");
  add_curve(pg, curve);
  add_places(pg, places, false);
  pg->add_flag("--count", count, "print only the number of pure gaps");
  add_format(pg, format);
  pg->callback([&] { action = [&] { return do_pure_gaps(out, curve, places, count, format); }; });

  std::string kind = "relative";
  bool c_box = false;
  bool include_negative = false;
  auto* mx = app.add_subcommand("maximals", "absolute or relative maximal elements");
  add_curve(mx, curve);
  add_places(mx, places, false);
  mx->add_option("--kind", kind)->check(CLI::IsMember({"absolute", "relative"}))
      ->capture_default_str();
  mx->add_flag("--c-box", c_box, "list the maximals inside Z x [0, m)^(n-1) instead");
  mx->add_flag("--include-negative", include_negative,
               "with --c-box, keep elements with a negative first coordinate");
  add_format(mx, format);
  mx->callback([&] {
    action = [&] {
      return do_maximals(out, curve, places, kind, c_box, include_negative, format);
    };
  });

  Int max_box = 0;
  std::string ell_text;
  auto* vf = app.add_subcommand("verify", "cross-check enumeration against the dimension oracle");
  add_curve(vf, curve);
  add_places(vf, places, false);
  auto* box_opt = vf->add_option("--max-box", max_box, "scan [1, B]^n with the oracle");
  auto* ell_opt = vf->add_option("--ell", ell_text, "print l(D) for a divisor, e.g. 3P1+2Pinf");
  box_opt->excludes(ell_opt);
  vf->callback([&] {
    action = [&] {
      if (!ell_text.empty()) return do_verify_ell(out, curve, ell_text);
      if (places.n == 0 && places.places.empty())
        throw std::invalid_argument("verify needs --n (or --places) and --max-box");
      if (max_box == 0) max_box = 2 * build_curve(curve).genus();
      return do_verify(out, err, curve, places, max_box);
    };
  });

  auto* codes = app.add_subcommand("codes", "AG code parameters from pure-gap boxes");
  codes->require_subcommand(1);

  std::string family;
  Int q = 0;
  Int t = 0;
  auto* table = codes->add_subcommand("table", "every valid design for one curve");
  table->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"hermitian-subcover", "norm-trace-like"}));
  table->add_option("--q", q)->required();
  table->add_option("--t", t, "extension degree (norm-trace-like)");
  table->add_option("--m", curve.m)->required();
  std::string table_format = "csv";
  table->add_option("--format", table_format)
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  table->callback(
      [&] { action = [&] { return do_codes_table(out, family, q, t, curve.m, table_format); }; });

  auto* showcase = codes->add_subcommand("showcase", "the showcase rows of both families");
  showcase->add_option("--family", family)
      ->check(CLI::IsMember({"hermitian-subcover", "norm-trace-like"}));
  add_format(showcase, format);
  showcase->callback([&] { action = [&] { return do_codes_showcase(out, family, format); }; });

  std::size_t design_n = 0;
  Int design_k = 0;
  std::vector<Int> design_a;
  std::vector<Int> design_partition;
  Int length = 0;
  Int shorten_by = 0;
  auto* design = codes->add_subcommand("design", "parameters of one code");
  add_curve(design, curve);
  design->add_option("--n", design_n)->required();
  design->add_option("--k", design_k)->required();
  design->add_option("--a", design_a, "point of B_k, e.g. 1,1")->required()->delimiter(',');
  design->add_option("--partition", design_partition, "k_1..k_n (default k,0,..,0)")
      ->delimiter(',');
  design->add_option("--length", length, "code length N")->required();
  design->add_option("--shorten", shorten_by, "shorten by s positions");
  add_format(design, format);
  design->callback([&] {
    action = [&] {
      return do_codes_design(out, curve, design_n, design_k, design_a, design_partition, length,
                             shorten_by, format);
    };
  });

  std::size_t plot_n = 3;
  auto* plot = app.add_subcommand("plot-data", "cube inventory of the pure gaps at three places");
  add_curve(plot, curve);
  plot->add_option("--n", plot_n)->capture_default_str();
  plot->callback([&] { action = [&] { return do_plot_data(out, curve, plot_n); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_threads(threads);
    return action ? action() : kExitUsage;
  } catch (const DomainError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace puregaps::cli
