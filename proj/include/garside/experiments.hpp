#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "garside/braid.hpp"
#include "garside/circuits.hpp"

namespace garside {

/// One conjugacy class of Delta^i s, s a proper simple element.
struct ClassRecord {
  Element     representative;  // smallest element of SC
  std::size_t sss_size  = 0;
  std::size_t sc_size   = 0;
  bool        exhausted = false;  // a budget ran out; sizes are incomplete
};

/// Every class with summit infimum i and summit canonical length 1, in order
/// of the first simple s (canonical order) whose Delta^i s lies in it.
std::vector<ClassRecord> enumerate_length_one_classes(const BraidStructure& structure,
                                                      long i, const Budget& budget = {});

struct ClassStatisticsRow {
  std::string structure;
  int         n = 0;
  long        i = 0;
  std::size_t classes = 0;
  std::size_t max_sss = 0;
  std::size_t max_sc  = 0;
  double      max_ratio   = 0;
  double      cmean_sss   = 0;
  double      cmean_sc    = 0;
  double      cmean_ratio = 0;
  /// Means over elements: each class weighted by |SSS|.
  double      emean_sss   = 0;
  double      emean_sc    = 0;
  double      emean_ratio = 0;
  /// Classes left out of the statistics because a budget ran out.
  std::size_t skipped = 0;
};

ClassStatisticsRow summarize(const BraidStructure& structure, long i,
                             const std::vector<ClassRecord>& records);

/// Six significant digits, as printf("%.6g").
std::string format_decimal(double v);

std::string csv_header();
std::string csv_line(const ClassStatisticsRow& row);
void        write_csv(std::ostream& out, const std::vector<ClassStatisticsRow>& rows);
nlohmann::json row_to_json(const ClassStatisticsRow& row);

}  // namespace garside
