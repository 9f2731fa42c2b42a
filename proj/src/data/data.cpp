#include "data/data.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <unordered_map>

#include "core/errors.hpp"
#include "data/rng.hpp"

namespace intervalcast::data {

Frequency parse_frequency(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "hourly") return Frequency::Hourly;
  if (s == "daily") return Frequency::Daily;
  if (s == "weekly") return Frequency::Weekly;
  if (s == "monthly") return Frequency::Monthly;
  if (s == "quarterly") return Frequency::Quarterly;
  if (s == "yearly") return Frequency::Yearly;
  throw ConfigError("unknown frequency: " + name);
}

std::string frequency_name(Frequency f) {
  switch (f) {
    case Frequency::Hourly:    return "hourly";
    case Frequency::Daily:     return "daily";
    case Frequency::Weekly:    return "weekly";
    case Frequency::Monthly:   return "monthly";
    case Frequency::Quarterly: return "quarterly";
    case Frequency::Yearly:    return "yearly";
  }
  return "yearly";
}

namespace {

// Split one CSV line into fields; double quotes wrap a field, commas inside
// quotes are kept. CR from CRLF files is stripped by the caller.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end && *end == '\0' && end != s.c_str() && std::isfinite(out);
}

struct RawRow {
  std::string id;
  std::vector<double> values;
};

std::vector<RawRow> read_rows(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IngestError("cannot open file: " + path);
  std::vector<RawRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = split_csv(line);
    // drop trailing empty cells
    while (fields.size() > 1 && fields.back().empty()) fields.pop_back();
    if (fields.size() < 2) {
      double unused;
      if (lineno == 1 && !parse_double(fields[0], unused)) continue;  // header
      throw ParseError("row " + std::to_string(lineno) +
                       ": expected id plus at least one value in " + path);
    }
    // a first line whose second cell is not numeric is a header
    double probe;
    if (lineno == 1 && !parse_double(fields[1], probe)) continue;
    RawRow row;
    row.id = fields[0];
    for (std::size_t j = 1; j < fields.size(); ++j) {
      double v;
      if (!parse_double(fields[j], v))
        throw ParseError("row " + std::to_string(lineno) + ", column " +
                         std::to_string(j + 1) + ": non-numeric cell \"" +
                         fields[j] + "\" in " + path);
      row.values.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

M4Corpus load_m4_corpus(const std::string& train_path,
                        const std::string& test_path, Frequency frequency) {
  const std::vector<RawRow> train_rows = read_rows(train_path);
  const std::vector<RawRow> test_rows = read_rows(test_path);
  if (train_rows.empty()) throw IngestError("empty train corpus: " + train_path);
  if (train_rows.size() != test_rows.size())
    throw IngestError("train and test corpora differ in series count");
  std::unordered_map<std::string, const RawRow*> test_by_id;
  for (const auto& r : test_rows) test_by_id[r.id] = &r;

  const int horizon = frequency_info(frequency).horizon;
  M4Corpus corpus;
  corpus.frequency = frequency;
  corpus.items.reserve(train_rows.size());
  for (const auto& tr : train_rows) {
    auto it = test_by_id.find(tr.id);
    if (it == test_by_id.end())
      throw IngestError("series id \"" + tr.id + "\" missing from test corpus");
    if (static_cast<int>(it->second->values.size()) != horizon)
      throw IngestError("series \"" + tr.id + "\": test length " +
                        std::to_string(it->second->values.size()) +
                        " does not match the " + frequency_name(frequency) +
                        " horizon " + std::to_string(horizon));
    M4Item item;
    item.id = tr.id;
    item.train = tr.values;
    item.test = it->second->values;
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

namespace {

void write_rows(const std::string& path,
                const std::vector<const M4Item*>& items, bool test_part) {
  std::ofstream f(path);
  if (!f) throw IngestError("cannot write file: " + path);
  char buf[32];
  for (const M4Item* it : items) {
    f << '"' << it->id << '"';
    const std::vector<double>& vals = test_part ? it->test : it->train;
    for (double v : vals) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      f << ',' << buf;
    }
    f << '\n';
  }
  if (!f) throw IngestError("failed writing file: " + path);
}

}  // namespace

void save_m4_corpus(const M4Corpus& corpus, const std::string& train_path,
                    const std::string& test_path) {
  std::vector<const M4Item*> ptrs;
  ptrs.reserve(corpus.items.size());
  for (const auto& it : corpus.items) ptrs.push_back(&it);
  write_rows(train_path, ptrs, false);
  write_rows(test_path, ptrs, true);
}

std::vector<double> load_generic_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IngestError("cannot open file: " + path);
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string cell = line;
    if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"')
      cell = cell.substr(1, cell.size() - 2);
    double v;
    if (!parse_double(cell, v)) {
      if (lineno == 1) continue;  // optional header
      throw ParseError("row " + std::to_string(lineno) +
                       ": non-numeric value \"" + cell + "\" in " + path);
    }
    values.push_back(v);
  }
  if (values.empty())
    throw IngestError("no numeric values in " + path);
  return values;
}

M4Corpus sample_corpus(const M4Corpus& corpus, double fraction,
                       std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw ConfigError("sample fraction must lie in (0, 1]");
  const int n = static_cast<int>(corpus.items.size());
  // round half up
  const int count =
      std::min(n, static_cast<int>(std::floor(fraction * n + 0.5)));
  if (count == n) return corpus;

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int j = i + rng.integers(0, n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());

  M4Corpus out;
  out.frequency = corpus.frequency;
  out.items.reserve(count);
  for (int i : idx) out.items.push_back(corpus.items[i]);
  return out;
}

}  // namespace intervalcast::data
