#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kmos/knotdb.hpp"

using namespace kmos;

namespace {

const KnotIndex& full_index() {
  static KnotIndex index =
      KnotIndex::load(std::string(KMOS_SOURCE_DIR) + "/data/knot_table.csv");
  return index;
}

}  // namespace

TEST_CASE("table loads and every record validates") {
  const KnotIndex& index = full_index();
  REQUIRE(index.records().size() >= 100);
  const KnotRecord* unknot = index.find("0_1");
  REQUIRE(unknot != nullptr);
  REQUIRE(unknot->fp.det == 1);
  REQUIRE(unknot->fp.jones_folded.is_one());
  REQUIRE(unknot->fp.alex.is_one());
  const KnotRecord* trefoil = index.find("3_1");
  REQUIRE(trefoil != nullptr);
  REQUIRE(trefoil->fp.det == 3);
}

TEST_CASE("fingerprints agree with the independent python implementation") {
  const KnotIndex& index = full_index();
  std::ifstream in(std::string(KMOS_SOURCE_DIR) + "/data/knot_fingerprints_py.csv");
  REQUIRE(in.good());
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, jones, alex, det;
    REQUIRE(std::getline(ls, name, ','));
    REQUIRE(std::getline(ls, jones, ','));
    REQUIRE(std::getline(ls, alex, ','));
    REQUIRE(std::getline(ls, det));
    const KnotRecord* rec = index.find(name);
    REQUIRE(rec != nullptr);
    INFO(name);
    REQUIRE(rec->fp.jones_folded.str() == jones);
    REQUIRE(rec->fp.alex.str() == alex);
    REQUIRE(rec->fp.det == std::stoll(det));
    ++checked;
  }
  REQUIRE(checked == static_cast<int>(index.records().size()));
}

TEST_CASE("every record identifies as itself") {
  const KnotIndex& index = full_index();
  for (const auto& rec : index.records()) {
    Diagram d = parse_pd(rec.pd_text);
    auto names = index.identify(d);
    INFO(rec.name);
    REQUIRE(std::find(names.begin(), names.end(), rec.name) != names.end());
    // mirrors identify identically (chirality folding)
    auto mirror_names = index.identify(d.mirrored());
    REQUIRE(mirror_names == names);
  }
}

TEST_CASE("fingerprint collisions are surfaced") {
  const KnotIndex& index = full_index();
  // The folded (Jones, Alexander, determinant) triple separates everything in
  // the table except the mutant-style pairs, which are kept as explicit ties.
  std::set<std::vector<std::string>> groups(index.collisions().begin(),
                                            index.collisions().end());
  std::set<std::vector<std::string>> expected = {
      {"11n71", "11n72"},           {"11n73", "11n74"},
      {"11a106", "11a139"},         {"11n76", "11n77"},
      {"13n2399", "13n2400", "13n2401"}, {"13n2402", "13n2403"}};
  for (const auto& g : expected) {
    INFO(g.front());
    REQUIRE(groups.count(g) == 1);
  }
  for (const auto& g : groups) {
    INFO(g.front());
    REQUIRE(expected.count(g) == 1);  // no unexpected collisions
  }
}

TEST_CASE("fingerprint cache round trip") {
  namespace fs = std::filesystem;
  std::string cache = (fs::temp_directory_path() / "kmos_fp_cache.csv").string();
  std::error_code ec;
  fs::remove(cache, ec);
  std::string table = std::string(KMOS_SOURCE_DIR) + "/data/knot_table.csv";
  KnotIndex first = KnotIndex::load(table, cache);
  REQUIRE(fs::exists(cache));
  KnotIndex second = KnotIndex::load(table, cache);
  REQUIRE(second.records().size() == first.records().size());
  for (std::size_t i = 0; i < first.records().size(); ++i) {
    REQUIRE(second.records()[i].fp.key() == first.records()[i].fp.key());
  }
}

TEST_CASE("malformed tables are rejected") {
  namespace fs = std::filesystem;
  auto write_and_load = [](const std::string& content) {
    std::string path = (fs::temp_directory_path() / "kmos_bad_table.csv").string();
    std::ofstream out(path);
    out << content;
    out.close();
    return KnotIndex::load(path);
  };
  REQUIRE_THROWS_AS(write_and_load("3_1,4,PD[X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)]\n"),
                    validation_error);  // crossings mismatch name
  REQUIRE_THROWS_AS(write_and_load("3_1,3,PD[X(1,4,2,5)]\n"), diagram_error);
  REQUIRE_THROWS_AS(write_and_load("3_1,3,PD[X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)]\n"
                                   "3_1,3,PD[X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)]\n"),
                    validation_error);  // duplicate name
}
