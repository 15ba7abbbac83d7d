#include "garside/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

namespace garside {

std::vector<ClassRecord> enumerate_length_one_classes(const BraidStructure& structure,
                                                      long i, const Budget& budget) {
  const auto&                 g = structure;
  std::unordered_set<Element> covered;
  std::vector<ClassRecord>    records;
  for (const auto& s : g.simples()) {
    if (g.is_trivial(s) || g.is_delta(s)) continue;
    const Element x = Element::from_simple(g, s).delta_power_times(i);
    if (covered.count(x)) continue;
    ClassRecord r{x, 0, 0, false};
    try {
      const auto sss = compute_sss(x, budget);
      covered.insert(sss.begin(), sss.end());
      r.sss_size = sss.size();
      const auto graph = compute_scg(x, budget);
      r.sc_size        = graph.vertices.size();
      r.representative = *std::min_element(graph.vertices.begin(), graph.vertices.end());
    } catch (const BudgetExceeded&) {
      covered.insert(x);
      r.exhausted = true;
    }
    records.push_back(std::move(r));
  }
  return records;
}

ClassStatisticsRow summarize(const BraidStructure& structure, long i,
                             const std::vector<ClassRecord>& records) {
  ClassStatisticsRow row;
  row.structure = std::string(structure.name());
  row.n         = structure.strands();
  row.i         = i;
  double sum_sss = 0, sum_sc = 0, sum_ratio = 0;
  double w_sss = 0, w_sc = 0, w_ratio = 0;
  for (const auto& r : records) {
    if (r.exhausted) {
      ++row.skipped;
      continue;
    }
    const double sss   = static_cast<double>(r.sss_size);
    const double sc    = static_cast<double>(r.sc_size);
    const double ratio = sss / sc;
    ++row.classes;
    row.max_sss   = std::max(row.max_sss, r.sss_size);
    row.max_sc    = std::max(row.max_sc, r.sc_size);
    row.max_ratio = std::max(row.max_ratio, ratio);
    sum_sss += sss;
    sum_sc += sc;
    sum_ratio += ratio;
    w_sss += sss * sss;
    w_sc += sss * sc;
    w_ratio += sss * ratio;
  }
  if (row.classes > 0) {
    const double c  = static_cast<double>(row.classes);
    row.cmean_sss   = sum_sss / c;
    row.cmean_sc    = sum_sc / c;
    row.cmean_ratio = sum_ratio / c;
    row.emean_sss   = w_sss / sum_sss;
    row.emean_sc    = w_sc / sum_sss;
    row.emean_ratio = w_ratio / sum_sss;
  }
  return row;
}

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_header() {
  return "structure,n,i,classes,max_sss,max_sc,max_ratio,cmean_sss,cmean_sc,"
         "cmean_ratio,emean_sss,emean_sc,emean_ratio";
}

std::string csv_line(const ClassStatisticsRow& row) {
  std::string out = row.structure + "," + std::to_string(row.n) + "," +
                    std::to_string(row.i) + "," + std::to_string(row.classes) + "," +
                    std::to_string(row.max_sss) + "," + std::to_string(row.max_sc);
  for (double v : {row.max_ratio, row.cmean_sss, row.cmean_sc, row.cmean_ratio,
                   row.emean_sss, row.emean_sc, row.emean_ratio}) {
    out += "," + format_decimal(v);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ClassStatisticsRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << csv_line(r) << '\n';
}

nlohmann::json row_to_json(const ClassStatisticsRow& row) {
  return {{"structure", row.structure},
          {"n", row.n},
          {"i", row.i},
          {"classes", row.classes},
          {"max_sss", row.max_sss},
          {"max_sc", row.max_sc},
          {"max_ratio", row.max_ratio},
          {"cmean_sss", row.cmean_sss},
          {"cmean_sc", row.cmean_sc},
          {"cmean_ratio", row.cmean_ratio},
          {"emean_sss", row.emean_sss},
          {"emean_sc", row.emean_sc},
          {"emean_ratio", row.emean_ratio},
          {"skipped", row.skipped}};
}

}  // namespace garside
