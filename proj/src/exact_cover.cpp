#include "hyperpath/exact_cover.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

void check_instance(const ExactCoverInstance& inst) {
  std::vector<bool> seen(inst.n);
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& s = inst.sets[i];
    if (s.empty()) throw std::invalid_argument("set " + std::to_string(i) + " is empty");
    std::fill(seen.begin(), seen.end(), false);
    for (Element x : s) {
      if (x >= inst.n) {
        throw std::invalid_argument("set " + std::to_string(i) + ": element " + std::to_string(x) +
                                    " out of range");
      }
      if (seen[x]) {
        throw std::invalid_argument("set " + std::to_string(i) + ": element " + std::to_string(x) +
                                    " repeated");
      }
      seen[x] = true;
    }
  }
}

namespace {

// Multiplicity of each element over the chosen sets, or nullopt on a bad index.
std::optional<std::vector<std::size_t>> coverage(const ExactCoverInstance& inst,
                                                 std::span<const SetIndex> chosen) {
  std::vector<std::size_t> hits(inst.n, 0);
  for (SetIndex i : chosen) {
    if (i >= inst.sets.size()) return std::nullopt;
    for (Element x : inst.sets[i]) {
      if (x >= inst.n) return std::nullopt;
      ++hits[x];
    }
  }
  return hits;
}

}  // namespace

bool is_exact_cover(const ExactCoverInstance& inst, std::span<const SetIndex> chosen) {
  std::vector<SetIndex> sorted(chosen.begin(), chosen.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto hits = coverage(inst, chosen);
  return hits && std::all_of(hits->begin(), hits->end(), [](std::size_t c) { return c == 1; });
}

bool is_set_cover(const ExactCoverInstance& inst, std::span<const SetIndex> chosen) {
  auto hits = coverage(inst, chosen);
  return hits && std::all_of(hits->begin(), hits->end(), [](std::size_t c) { return c >= 1; });
}

CoverFile parse_cover_file(std::istream& in) {
  CoverFile f;
  std::string line;
  std::size_t lineno = 0;
  std::size_t m = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!header) {
      long long n = -1, mm = -1, t = -1;
      std::string extra;
      if (!(ls >> n >> mm) || n < 0 || mm < 0) throw ParseError(lineno, "malformed header, expected 'n m [t]'");
      if (ls >> t) {
        if (t < 1) throw ParseError(lineno, "threshold t must be positive");
        f.threshold = static_cast<std::size_t>(t);
      } else {
        ls.clear();
      }
      if (ls >> extra) throw ParseError(lineno, "malformed header, trailing '" + extra + "'");
      f.instance.n = static_cast<std::size_t>(n);
      m = static_cast<std::size_t>(mm);
      header = true;
      continue;
    }
    if (f.instance.sets.size() == m) throw ParseError(lineno, "more set lines than m = " + std::to_string(m));
    std::vector<Element> set;
    std::string tok;
    std::vector<bool> seen(f.instance.n, false);
    while (ls >> tok) {
      std::size_t used = 0;
      long long x = -1;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(lineno, "not an element id: '" + tok + "'");
      if (x < 0 || static_cast<std::size_t>(x) >= f.instance.n) {
        throw ParseError(lineno, "element " + tok + " out of range [0, " + std::to_string(f.instance.n) + ")");
      }
      if (seen[x]) throw ParseError(lineno, "duplicate element " + tok + " in set");
      seen[x] = true;
      set.push_back(static_cast<Element>(x));
    }
    f.instance.sets.push_back(std::move(set));
  }
  if (!header) throw ParseError(lineno, "missing header");
  if (f.instance.sets.size() != m) {
    throw ParseError(lineno, "expected " + std::to_string(m) + " sets, found " +
                                 std::to_string(f.instance.sets.size()));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (f.instance.sets[i].empty()) throw ParseError(lineno, "set " + std::to_string(i) + " is empty");
  }
  if (f.threshold && *f.threshold > m) throw ParseError(1, "threshold t exceeds number of sets");
  return f;
}

CoverFile parse_cover_file(const std::string& text) {
  std::istringstream in(text);
  return parse_cover_file(in);
}

CoverFile load_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_cover_file(in);
}

void write_cover_file(std::ostream& out, const ExactCoverInstance& inst, std::optional<std::size_t> threshold) {
  out << inst.n << ' ' << inst.sets.size();
  if (threshold) out << ' ' << *threshold;
  out << '\n';
  for (const auto& s : inst.sets) {
    for (std::size_t j = 0; j < s.size(); ++j) out << (j ? " " : "") << s[j];
    out << '\n';
  }
}

}  // namespace hyperpath
