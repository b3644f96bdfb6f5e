#pragma once

#include <string>

#include "descent/powersum.hpp"

namespace descent {

enum class TableFormat { csv, markdown, json };

// Grid of valuations of A(n, r) by the prime p: rows n, columns r.
struct TableSpec {
  int prime = 2;
  int n_first = 1;
  int n_last = 1;
  int r_first = 1;
  int r_last = 1;
  TableFormat format = TableFormat::csv;
};

TableFormat parse_table_format(const std::string& name);

// Renders the grid; byte-deterministic for a given spec and engine version.
// Empty or inverted ranges are a domain error, ranges beyond the enumeration
// limit a capacity error.
std::string render_table(const TableSpec& spec,
                         const PowerProvider& apow = direct_provider(),
                         int max_order = kDefaultMaxOrder);

}  // namespace descent
