#include "gridcurve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "gridcurve/render.hpp"
#include "gridcurve/search.hpp"
#include "gridcurve/tiles.hpp"
#include "gridcurve/transforms.hpp"
#include "gridcurve/validity.hpp"

namespace gridcurve {

namespace fs = std::filesystem;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GridKind grid_or_throw(const std::string& tag) {
  auto g = parse_grid(tag);
  if (!g || !is_searchable(*g)) throw MalformedSystem("unknown grid '" + tag + "'");
  return *g;
}

std::vector<CurveRecord> listing_for(GridKind g, int order, const std::optional<fs::path>& cache) {
  if (cache) {
    fs::path file = *cache / (grid_tag(g) + "-" + std::to_string(order) + ".txt");
    if (fs::exists(file)) {
      std::ifstream in(file);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_listing(ss.str());
    }
    auto records = run_search(g, order, default_jobs()).records;
    fs::create_directories(*cache);
    std::ofstream(file) << emit_listing(records);
    return records;
  }
  return run_search(g, order, default_jobs()).records;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure("cannot write " + path);
  out << text;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw MalformedSystem("bad number list '" + csv + "'");
    }
  return out;
}

std::string format_maps(const MultiLsys& sys) {
  std::string s;
  for (auto& [c, w] : sys.maps) s += std::string(1, c) + " -> " + w + "\n";
  return s;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return +1;
  if (s == "-" || s == "-1") return -1;
  throw MalformedSystem("sign must be + or -");
}

RenderOptions render_options(double e, const std::string& color) {
  RenderOptions o;
  o.e = e;
  if (color == "flat")
    o.color = ColorScheme::Single;
  else if (color == "parts")
    o.color = ColorScheme::Parts;
  else if (color == "origin")
    o.color = ColorScheme::Origin;
  else
    throw MalformedSystem("colour scheme must be flat, parts or origin");
  return o;
}

}  // namespace

int default_jobs() {
  if (const char* v = std::getenv("GRIDCURVE_JOBS")) {
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return 1;
}

SimpleLsys resolve_curve(const std::string& spec, const std::optional<fs::path>& cache) {
  auto at = spec.rfind('@');
  if (at == std::string::npos) throw MalformedSystem("curve '" + spec + "' needs an @grid suffix");
  GridKind g = grid_or_throw(spec.substr(at + 1));
  std::string body = spec.substr(0, at);
  static const std::regex ref(R"(R(\d+)-(\d+))");
  std::smatch m;
  if (std::regex_match(body, m, ref)) {
    int order = std::stoi(m[1]), id = std::stoi(m[2]);
    auto orders = allowed_orders(g, order);
    if (std::find(orders.begin(), orders.end(), order) == orders.end())
      throw MalformedSystem("no curves of order " + std::to_string(order) + " on the " + grid_name(g) + " grid");
    for (auto& r : listing_for(g, order, cache))
      if (r.id == id) return {g, r.production};
    throw MalformedSystem("no curve " + body + " on the " + grid_name(g) + " grid");
  }
  SimpleLsys s{g, body};
  validate(s);
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane-filling curves on uniform grids"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_dir;
  app.add_option("--cache", cache_dir, "Directory caching search listings for curve references");
  auto cache = [&]() -> std::optional<fs::path> {
    if (cache_dir.empty()) return std::nullopt;
    return fs::path(cache_dir);
  };

  std::function<int()> action;
  std::string curve, grid, out_path, sign = "+", color = "flat", spec_name, a_spec, b_spec, parts;
  int order_v = 0, iter = 2, range = 1, depth = 6, max_order = 0, jobs = default_jobs(), pieces = 0;
  double e = 0;
  bool structured = false, verify_flag = false, rev_a = false, swap_a = false, rev_b = false, swap_b = false;
  bool list_specs = false;

  auto* search = app.add_subcommand("search", "List the curves of one order");
  search->add_option("--grid", grid, "tri, square or trihex")->required();
  search->add_option("--order", order_v, "Order R")->required()->check(CLI::PositiveNumber);
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", out_path, "Listing file (default: standard output)");
  search->add_flag("--structured", structured, "key=value records instead of the listing format");
  search->callback([&] {
    action = [&] {
      auto report = run_search(grid_or_throw(grid), order_v, jobs);
      std::string text = structured ? emit_structured(report) : emit_listing(report.records);
      if (out_path.empty())
        out << text;
      else
        write_file(out_path, text);
      err << report.curves << " curves, " << report.shapes << " shapes, " << report.candidates << " candidates, "
          << report.seconds << " s\n";
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run every validity check on a curve");
  verify->add_option("--curve", curve, "PRODUCTION@grid or R<order>-<id>@grid")->required();
  verify->callback([&] {
    action = [&] {
      Stage st = full_check(resolve_curve(curve, cache()));
      if (st == Stage::Pass) {
        out << "pass\n";
        return kExitOk;
      }
      out << "fail: " << stage_name(st) << "\n";
      return kExitFailure;
    };
  });

  auto* render = app.add_subcommand("render", "Draw an iterate");
  render->add_option("--curve", curve)->required();
  render->add_option("--iter", iter)->check(CLI::NonNegativeNumber);
  render->add_option("--e", e, "Corner cut in [0, 0.5]")->check(CLI::Range(0.0, 0.5));
  render->add_option("--color", color)->check(CLI::IsMember({"flat", "parts"}));
  render->add_option("--out", out_path)->required();
  render->callback([&] {
    action = [&] {
      write_file(out_path, render_curve(resolve_curve(curve, cache()), iter, render_options(e, color)));
      return kExitOk;
    };
  });

  auto* tile = app.add_subcommand("tile", "Draw a tile");
  tile->add_option("--curve", curve)->required();
  tile->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  tile->add_option("--iter", iter)->check(CLI::NonNegativeNumber);
  tile->add_option("--e", e)->check(CLI::Range(0.0, 0.5));
  tile->add_option("--out", out_path)->required();
  tile->callback([&] {
    action = [&] {
      write_file(out_path, render_tile(resolve_curve(curve, cache()), parse_sign(sign), iter, render_options(e, "flat")));
      return kExitOk;
    };
  });

  auto* tiling = app.add_subcommand("tiling", "Draw copies of a tile tiling the plane");
  tiling->add_option("--curve", curve)->required();
  tiling->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  tiling->add_option("--iter", iter)->check(CLI::NonNegativeNumber);
  tiling->add_option("--range", range, "Lattice coefficients in [-range, range]")->check(CLI::NonNegativeNumber);
  tiling->add_option("--e", e)->check(CLI::Range(0.0, 0.5));
  tiling->add_option("--out", out_path)->required();
  tiling->callback([&] {
    action = [&] {
      write_file(out_path, render_tiling(resolve_curve(curve, cache()), parse_sign(sign), iter, range,
                                         render_options(e, "parts")));
      return kExitOk;
    };
  });

  auto* car = app.add_subcommand("carousel", "Draw the curves meeting at a tiling corner");
  car->add_option("--curve", curve)->required();
  car->add_option("--iter", iter)->check(CLI::PositiveNumber);
  car->add_option("--e", e)->check(CLI::Range(0.0, 0.5));
  car->add_option("--out", out_path)->required();
  car->callback([&] {
    action = [&] {
      auto s = resolve_curve(curve, cache());
      out << carousel(s, iter).symmetry << "-fold\n";
      write_file(out_path, render_carousel(s, iter, render_options(e, "parts")));
      return kExitOk;
    };
  });

  auto* conv = app.add_subcommand("convert", "Carry a curve over to another grid");
  conv->add_option("--spec", spec_name, "Conversion name");
  conv->add_option("--curve", curve);
  conv->add_option("--iter", iter)->check(CLI::NonNegativeNumber);
  conv->add_option("--tile", sign, "Convert the tile with this sign instead of the curve")
      ->check(CLI::IsMember({"+", "-"}));
  conv->add_option("--e", e)->check(CLI::Range(0.0, 0.5));
  conv->add_option("--color", color)->check(CLI::IsMember({"flat", "origin"}));
  conv->add_option("--out", out_path);
  conv->add_flag("--verify", verify_flag, "Check point or edge coverage");
  conv->add_flag("--list", list_specs, "Print the conversion names");
  conv->callback([&] {
    action = [&] {
      if (list_specs) {
        for (auto& s : registry()) out << s.name << "\n";
        return kExitOk;
      }
      if (spec_name.empty() || curve.empty()) throw MalformedSystem("convert needs --spec and --curve");
      const auto& spec = find_spec(spec_name);
      auto s = resolve_curve(curve, cache());
      bool tile_mode = conv->count("--tile") > 0;
      auto c = tile_mode ? convert_tile(s, parse_sign(sign), iter, spec) : convert_curve(s, iter, spec);
      if (!out_path.empty()) write_file(out_path, render_converted(c, render_options(e, color)));
      out << c.size() << " edges on " << grid_name(spec.target) << "\n";
      if (verify_flag) {
        auto why = coverage_failure(c, spec.mode);
        out << (spec.mode == Coverage::PC ? "PC " : "EC ") << (why.empty() ? "pass" : "fail: " + why) << "\n";
        if (!why.empty()) return kExitFailure;
      }
      return kExitOk;
    };
  });

  auto* prod = app.add_subcommand("product", "Substitute one curve into another");
  prod->add_option("--a", a_spec)->required();
  prod->add_option("--b", b_spec)->required();
  prod->add_flag("--reverse-a", rev_a);
  prod->add_flag("--swap-a", swap_a);
  prod->add_flag("--reverse-b", rev_b);
  prod->add_flag("--swap-b", swap_b);
  prod->callback([&] {
    action = [&] {
      auto a = resolve_curve(a_spec, cache()), b = resolve_curve(b_spec, cache());
      if (rev_a) a = reverse(a);
      if (swap_a) a = swap_signs(a);
      if (rev_b) b = reverse(b);
      if (swap_b) b = swap_signs(b);
      auto p = product(a, b);
      Stage st = full_check(p);
      out << p.production << "@" << grid_tag(p.grid) << "\n"
          << "order " << order(p) << ", " << (st == Stage::Pass ? "pass" : "fail: " + stage_name(st)) << "\n";
      return kExitOk;
    };
  });

  auto* div = app.add_subcommand("divide", "Split a curve over fresh letters");
  div->add_option("--curve", curve)->required();
  div->add_option("--parts", parts, "Letters per piece, e.g. 3,11");
  div->add_option("--pieces", pieces, "Number of equal pieces")->check(CLI::PositiveNumber);
  div->callback([&] {
    action = [&] {
      auto s = resolve_curve(curve, cache());
      if (parts.empty() == (pieces == 0)) throw MalformedSystem("divide needs exactly one of --parts and --pieces");
      auto d = parts.empty() ? divide(s, pieces) : divide(s, parse_ints(parts));
      out << format_maps(d.system);
      return kExitOk;
    };
  });

  auto* dig = app.add_subcommand("digits", "Digit set of a tile and the bases it works with");
  dig->add_option("--curve", curve)->required();
  dig->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  dig->callback([&] {
    action = [&] {
      auto s = resolve_curve(curve, cache());
      auto digits = extract_digits(s, parse_sign(sign));
      out << "digits:";
      for (auto& d : digits) out << " " << format_lattice(s.grid, d);
      out << "\nbases:";
      bool any = false;
      for (auto& b : find_bases(s.grid, order(s)))
        if (is_complete_residue_system(b, digits)) {
          out << " " << format_lattice(s.grid, b);
          any = true;
        }
      out << "\n";
      return any ? kExitOk : kExitFailure;
    };
  });

  auto* cloud = app.add_subcommand("numsys-cloud", "Fraction points of a numeration system");
  cloud->add_option("--curve", curve)->required();
  cloud->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  cloud->add_option("--depth", depth)->check(CLI::Range(1, 10));
  cloud->add_option("--out", out_path)->required();
  cloud->callback([&] {
    action = [&] {
      auto ns = numeration_system(resolve_curve(curve, cache()), parse_sign(sign));
      if (!ns) {
        err << "no base makes the digits a complete residue system\n";
        return kExitFailure;
      }
      RenderOptions o = render_options(0, "parts");
      o.stroke = 0.01;
      o.margin = 0.05;
      write_file(out_path, render_cloud(fundamental_region_points(*ns, depth), ns->digits.size(), o));
      return kExitOk;
    };
  });

  auto* ord = app.add_subcommand("orders", "Admissible orders of a grid");
  ord->add_option("--grid", grid)->required();
  ord->add_option("--max", max_order)->required()->check(CLI::NonNegativeNumber);
  ord->callback([&] {
    action = [&] {
      auto v = allowed_orders(grid_or_throw(grid), max_order);
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
      out << "\n";
      return kExitOk;
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n";
    return kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const MalformedSystem& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const Failure& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace gridcurve
