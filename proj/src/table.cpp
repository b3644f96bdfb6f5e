#include "descent/table.hpp"

#include <sstream>

#include <json.hpp>

#include "descent/core.hpp"
#include "descent/padic.hpp"

namespace descent {

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "md" || name == "markdown") return TableFormat::markdown;
  if (name == "json") return TableFormat::json;
  throw std::domain_error("unknown table format: " + name);
}

namespace {

void validate_spec(const TableSpec& spec, int max_order) {
  require_prime(spec.prime);
  if (spec.n_first > spec.n_last || spec.r_first > spec.r_last) {
    throw std::domain_error("table: empty range");
  }
  if (spec.n_first < 1 || spec.r_first < 1) {
    throw std::domain_error("table: ranges start at 1");
  }
  detail::check_order_capacity(spec.n_last, max_order);
}

}  // namespace

std::string render_table(const TableSpec& spec, const PowerProvider& apow, int max_order) {
  validate_spec(spec, max_order);

  std::vector<std::vector<int>> cells;
  for (int n = spec.n_first; n <= spec.n_last; ++n) {
    std::vector<int> row;
    for (int r = spec.r_first; r <= spec.r_last; ++r) {
      row.push_back(valuation(apow(n, r), spec.prime));
    }
    cells.push_back(std::move(row));
  }

  std::ostringstream out;
  switch (spec.format) {
    case TableFormat::csv: {
      out << "n\\r";
      for (int r = spec.r_first; r <= spec.r_last; ++r) out << "," << r;
      out << "\n";
      for (int n = spec.n_first; n <= spec.n_last; ++n) {
        out << n;
        for (int v : cells[static_cast<std::size_t>(n - spec.n_first)]) out << "," << v;
        out << "\n";
      }
      break;
    }
    case TableFormat::markdown: {
      out << "| n\\r |";
      for (int r = spec.r_first; r <= spec.r_last; ++r) out << " " << r << " |";
      out << "\n|---|";
      for (int r = spec.r_first; r <= spec.r_last; ++r) out << "---|";
      out << "\n";
      for (int n = spec.n_first; n <= spec.n_last; ++n) {
        out << "| " << n << " |";
        for (int v : cells[static_cast<std::size_t>(n - spec.n_first)]) out << " " << v << " |";
        out << "\n";
      }
      break;
    }
    case TableFormat::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (int n = spec.n_first; n <= spec.n_last; ++n) {
        for (int r = spec.r_first; r <= spec.r_last; ++r) {
          nlohmann::ordered_json cell;
          cell["n"] = n;
          cell["r"] = r;
          cell["valuation"] =
              cells[static_cast<std::size_t>(n - spec.n_first)][static_cast<std::size_t>(r - spec.r_first)];
          doc.push_back(std::move(cell));
        }
      }
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace descent
