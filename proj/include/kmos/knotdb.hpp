// Reference table of prime knots: name -> PD code, with a fingerprint index
// for identification. Chirality is folded, matching the naming convention of
// the standard tables (a knot and its mirror share a name).
#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmos/diagram.hpp"
#include "kmos/invariants.hpp"
#include "kmos/mosaic.hpp"

namespace kmos {

struct KnotRecord {
  std::string name;
  int crossings = 0;
  std::string pd_text;
  Fingerprint fp;
};

inline int crossings_from_name(const std::string& name) {
  std::size_t i = 0;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
  if (i == 0) throw parse_error("knot name must start with its crossing number: " + name);
  return std::stoi(name.substr(0, i));
}

// Names column of a knot table file, without building the index.
inline std::vector<std::string> knot_table_names(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open knot table: " + path);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t c1 = line.find(',');
    if (c1 == std::string::npos) continue;
    names.push_back(line.substr(0, c1));
  }
  return names;
}

class KnotIndex {
 public:
  // Table rows: name,crossings,PD[X(a,b,c,d);...]  ('#' comments allowed).
  // If cache_path is given and matches the table, fingerprints are read from
  // it instead of recomputed; the cache is (re)written otherwise.
  static KnotIndex load(const std::string& table_path, const std::string& cache_path = "") {
    std::ifstream in(table_path);
    if (!in) throw parse_error("cannot open knot table: " + table_path);
    KnotIndex index;
    std::string line;
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      std::size_t c1 = line.find(',');
      std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : line.find(',', c1 + 1);
      if (c2 == std::string::npos) throw parse_error("bad knot table row: " + line);
      KnotRecord rec;
      rec.name = line.substr(0, c1);
      rec.crossings = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
      rec.pd_text = line.substr(c2 + 1);
      while (!rec.pd_text.empty() && (rec.pd_text.back() == '\r' || rec.pd_text.back() == ' '))
        rec.pd_text.pop_back();
      if (crossings_from_name(rec.name) != rec.crossings)
        throw validation_error("crossing count does not match name prefix: " + rec.name);
      index.records_.push_back(std::move(rec));
    }
    for (std::size_t i = 0; i < index.records_.size(); ++i) {
      if (!index.by_name_.emplace(index.records_[i].name, static_cast<int>(i)).second)
        throw validation_error("duplicate knot name: " + index.records_[i].name);
    }

    if (cache_path.empty() || !index.try_read_cache(cache_path)) {
      index.compute_fingerprints();
      if (!cache_path.empty()) index.write_cache(cache_path);
    }
    index.build_lookup();
    return index;
  }

  const std::vector<KnotRecord>& records() const { return records_; }

  const KnotRecord* find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &records_[static_cast<std::size_t>(it->second)];
  }

  // Groups of distinct names sharing a full fingerprint; surfaced, never
  // silently resolved.
  const std::vector<std::vector<std::string>>& collisions() const { return collisions_; }

  std::vector<std::string> identify(const Fingerprint& fp) const {
    std::vector<std::string> names;
    auto it = by_fp_.find(fp.key());
    if (it != by_fp_.end())
      for (int i : it->second) names.push_back(records_[static_cast<std::size_t>(i)].name);
    return names;
  }

  std::vector<std::string> identify(const Diagram& d, int max_crossings = 16) const {
    return identify(fingerprint(d, max_crossings));
  }

  // Staged lookup for the enumeration hot path: candidates sharing the folded
  // Jones text, to be confirmed by Alexander + determinant.
  const std::vector<int>* candidates_by_jones(const std::string& folded_jones) const {
    auto it = by_jones_.find(folded_jones);
    return it == by_jones_.end() ? nullptr : &it->second;
  }

  const KnotRecord& record(int i) const { return records_[static_cast<std::size_t>(i)]; }

 private:
  void compute_fingerprints() {
    for (auto& rec : records_) {
      Diagram d = parse_pd(rec.pd_text);
      if (d.crossing_count() > 0 && d.crossing_count() < rec.crossings)
        throw validation_error("PD for " + rec.name + " has fewer crossings than its name");
      compute_faces(d);  // planarity check
      rec.fp = fingerprint(d, 16);
      // alternating knots ('a' names) have Jones span equal to the crossing
      // number, nonalternating ('n') strictly less
      int span = rec.fp.jones_folded.span();
      if (rec.name.find('a') != std::string::npos && span != rec.crossings)
        throw validation_error("Jones span of " + rec.name + " is " + std::to_string(span) +
                               ", expected " + std::to_string(rec.crossings));
      if (rec.name.find('n') != std::string::npos && span >= rec.crossings)
        throw validation_error("Jones span of " + rec.name + " is not below its crossing number");
    }
  }

  bool try_read_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::unordered_map<std::string, Fingerprint> cached;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string name, jones, alex, det;
      if (!std::getline(ls, name, ',') || !std::getline(ls, jones, ',') ||
          !std::getline(ls, alex, ',') || !std::getline(ls, det))
        return false;
      Fingerprint fp;
      fp.jones_folded = LaurentPoly::parse(jones);
      fp.alex = LaurentPoly::parse(alex);
      fp.det = std::stoll(det);
      cached[name] = std::move(fp);
    }
    if (cached.size() != records_.size()) return false;
    for (auto& rec : records_) {
      auto it = cached.find(rec.name);
      if (it == cached.end()) return false;
      rec.fp = it->second;
    }
    return true;
  }

  void write_cache(const std::string& path) const {
    std::ofstream out(path);
    if (!out) return;  // cache is an optimization, not a requirement
    out << "# fingerprint cache: name,jones_folded,alexander,determinant\n";
    for (const auto& rec : records_)
      out << rec.name << ',' << rec.fp.jones_folded.str() << ',' << rec.fp.alex.str() << ','
          << rec.fp.det << '\n';
  }

  void build_lookup() {
    std::map<std::string, std::vector<int>> groups;
    for (std::size_t i = 0; i < records_.size(); ++i) {
      by_fp_[records_[i].fp.key()].push_back(static_cast<int>(i));
      by_jones_[records_[i].fp.jones_folded.str()].push_back(static_cast<int>(i));
      groups[records_[i].fp.key()].push_back(static_cast<int>(i));
    }
    for (const auto& [key, ids] : groups) {
      if (ids.size() > 1) {
        std::vector<std::string> names;
        for (int i : ids) names.push_back(records_[static_cast<std::size_t>(i)].name);
        std::sort(names.begin(), names.end());
        collisions_.push_back(std::move(names));
      }
    }
  }

  std::vector<KnotRecord> records_;
  std::unordered_map<std::string, int> by_name_;
  std::unordered_map<std::string, std::vector<int>> by_fp_;
  std::unordered_map<std::string, std::vector<int>> by_jones_;
  std::vector<std::vector<std::string>> collisions_;
};

}  // namespace kmos
