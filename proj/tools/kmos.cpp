// Command-line surface: validate/trace/identify single mosaics, run the
// layout enumeration, and emit the comparison tables and catalog.
//
// Exit codes: 0 success, 2 parse error, 3 validation failure, 4 resource
// limit, 1 anything else.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kmos/catalog.hpp"
#include "kmos/report.hpp"

using namespace kmos;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResource = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string default_table(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("KMOS_KNOT_TABLE")) return env;
  return "data/knot_table.csv";
}

std::string default_masks_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  return "data/masks";
}

// "a..b" inclusive
std::pair<int, int> parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct MaskDefaults {
  const char* id;
  int lo;
  int hi;
};
constexpr MaskDefaults kMaskDefaults[] = {
    {"22a", 3, 10}, {"22b", 3, 10}, {"24", 3, 12}, {"27", 8, 13}, {"32", 9, 13}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"space-efficient 6x6 knot mosaic enumeration"};
  app.require_subcommand(1);

  std::string table_path, masks_dir;
  app.add_option("--table,-t", table_path, "knot table (default $KMOS_KNOT_TABLE or data/knot_table.csv)");

  // validate
  auto* validate = app.add_subcommand("validate", "check suitable connectivity of a mosaic file");
  std::string validate_path;
  validate->add_option("file", validate_path)->required();

  // trace
  auto* trace = app.add_subcommand("trace", "trace a mosaic and print its planar diagram code");
  std::string trace_path;
  trace->add_option("file", trace_path)->required();

  // identify
  auto* identify = app.add_subcommand("identify", "identify the knot in a mosaic file");
  std::vector<std::string> identify_paths;
  identify->add_option("files", identify_paths)->required();

  // render
  auto* render = app.add_subcommand("render", "render a mosaic file");
  std::string render_path, render_format = "text", render_out;
  render->add_option("file", render_path)->required();
  render->add_option("--format,-f", render_format, "text or svg");
  render->add_option("--out,-o", render_out, "output file (default stdout)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "run the layout search");
  std::vector<std::string> mask_ids = {"22a", "22b", "24", "27", "32"};
  std::string crossings_flag, outdir = "out";
  int threads = 1;
  bool no_prune = false;
  enumerate->add_option("--masks,-m", mask_ids, "layouts to search");
  enumerate->add_option("--crossings,-c", crossings_flag, "crossing range a..b (default per layout)");
  enumerate->add_option("--out,-o", outdir, "output directory");
  enumerate->add_option("--threads,-j", threads, "worker count");
  enumerate->add_flag("--no-prune", no_prune, "skip the observation-based pruning");
  enumerate->add_option("--masks-dir", masks_dir, "layout mask directory");

  // tables
  auto* tables = app.add_subcommand("tables", "compare an enumeration with the reference lists");
  std::string report_dir = "out", expected_path = "data/expected_tile_numbers.csv", diff_out;
  tables->add_option("--report,-r", report_dir, "enumeration output directory");
  tables->add_option("--expected,-e", expected_path, "reference list csv");
  tables->add_option("--out,-o", diff_out, "diff document path (default <report>/theorem_diff.txt)");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "render the witness catalog of an enumeration");
  std::string catalog_report = "out", catalog_out;
  catalog->add_option("--report,-r", catalog_report, "enumeration output directory");
  catalog->add_option("--out,-o", catalog_out, "catalog directory (default <report>/catalog)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      Mosaic m = parse_mosaic(read_file(validate_path));
      bool connected = is_suitably_connected(m);
      int comps = connected ? components(m) : 0;
      std::cout << (connected ? "connected" : "NOT suitably connected") << ", tiles="
                << tile_number(m);
      if (connected) std::cout << ", components=" << comps;
      std::cout << '\n';
      return connected ? 0 : kExitValidation;
    }

    if (*trace) {
      Mosaic m = parse_mosaic(read_file(trace_path));
      if (!is_suitably_connected(m)) {
        std::cerr << "mosaic is not suitably connected\n";
        return kExitValidation;
      }
      Diagram d = to_diagram(m);
      std::cout << pd_to_string(d) << '\n';
      std::cout << "crossings=" << d.crossing_count() << " writhe=" << writhe(d)
                << " reduced=" << (is_reduced(d) ? "yes" : "no")
                << " alternating=" << (is_alternating(d) ? "yes" : "no") << '\n';
      return 0;
    }

    if (*identify) {
      KnotIndex index = KnotIndex::load(default_table(table_path));
      bool any_unknown = false;
      for (const auto& path : identify_paths) {
        Mosaic m = parse_mosaic(read_file(path));
        Diagram d = to_diagram(m);
        Fingerprint fp = fingerprint(d);
        auto names = index.identify(fp);
        std::cout << path << ": ";
        if (names.empty()) {
          std::cout << "unidentified";
          any_unknown = true;
        } else {
          for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? " " : "") << names[i];
        }
        std::cout << "  tiles=" << tile_number(m) << " crossings=" << d.crossing_count()
                  << "\n  fingerprint: " << fp.key() << '\n';
      }
      (void)any_unknown;  // unknown fingerprints are reported, exit stays 0
      return 0;
    }

    if (*render) {
      Mosaic m = parse_mosaic(read_file(render_path));
      std::string content;
      if (render_format == "text")
        content = render_text(m);
      else if (render_format == "svg")
        content = render_svg(m);
      else
        throw parse_error("unknown render format: " + render_format);
      if (render_out.empty()) {
        std::cout << content;
      } else {
        std::ofstream out(render_out);
        out << content;
      }
      return 0;
    }

    if (*enumerate) {
      KnotIndex index = KnotIndex::load(default_table(table_path));
      std::vector<LayoutMask> masks;
      RunOptions opts;
      opts.threads = threads;
      opts.prune = !no_prune;
      for (const auto& id : mask_ids) {
        masks.push_back(
            load_layout_mask_file(default_masks_dir(masks_dir) + "/mask_" + id + ".txt"));
        std::pair<int, int> range{3, 13};
        for (const auto& d : kMaskDefaults)
          if (id == d.id) range = {d.lo, d.hi};
        if (!crossings_flag.empty()) range = parse_range(crossings_flag);
        if (range.first < 3 || range.second > 13 || range.first > range.second)
          throw validation_error("crossing range must lie within 3..13");
        opts.ranges[id] = range;
      }
      EnumerationReport report = run_enumeration(masks, opts, index);
      write_report_files(report, outdir);
      std::cout << "knots: " << report.knots.size() << ", report written to " << outdir << '\n';
      return 0;
    }

    if (*tables) {
      EnumerationReport report = [&] {
        std::ifstream in(std::filesystem::path(report_dir) / "summary.json");
        if (!in) throw parse_error("no summary.json in " + report_dir);
        nlohmann::json j;
        in >> j;
        return report_from_json(j);
      }();
      auto expected = load_expected_tiles(expected_path);
      TheoremComparison cmp =
          compare_with_expected(report, expected, knot_table_names(default_table(table_path)));
      std::string doc = theorem_diff_document(cmp);
      std::string out_path = diff_out.empty()
                                 ? (std::filesystem::path(report_dir) / "theorem_diff.txt").string()
                                 : diff_out;
      std::ofstream out(out_path);
      out << doc;
      std::cout << doc;
      return 0;
    }

    if (*catalog) {
      EnumerationReport report = [&] {
        std::ifstream in(std::filesystem::path(catalog_report) / "summary.json");
        if (!in) throw parse_error("no summary.json in " + catalog_report);
        nlohmann::json j;
        in >> j;
        return report_from_json(j);
      }();
      auto entries = build_catalog(report);
      std::string outdir2 = catalog_out.empty()
                                ? (std::filesystem::path(catalog_report) / "catalog").string()
                                : catalog_out;
      write_catalog_files(entries, outdir2);
      std::cout << "catalog: " << entries.size() << " knots, written to " << outdir2 << '\n';
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const diagram_error& e) {
    std::cerr << "diagram error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
