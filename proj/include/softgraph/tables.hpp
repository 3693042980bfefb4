#pragma once

#include <string>
#include <vector>

#include "softgraph/catalog.hpp"
#include "softgraph/eigen.hpp"

namespace softgraph {

enum class RowStatus {
  ExactPass,        // L v = lambda v holds exactly as printed
  PassUpToScaling,  // holds within printed precision after normalization
  Fail,
  Unparseable,  // prose in the eigenvector column
  UnknownId,    // classification id absent from the catalog
};

std::string row_status_name(RowStatus s);

struct TableRow {
  std::string source_table;  // data file stem, e.g. "s2_six"
  int row_number = 0;        // 1-based within the file
  int lambda = 0;            // 0 for the irrational table
  QuadForm quad_lambda;      // irrational table rows
  bool is_quad = false;
  int claimed_index = 0;  // paper's lambda subscript (irrational table)
  int nodes = 0;
  int links = 0;
  std::string catalog_id;   // resolved id, "5.x" or "6.x"
  std::string vector_text;  // verbatim
  std::vector<Rat> vec;     // parsed when integer entries
  std::vector<double> vec_num;  // parsed when decimal entries
  bool decimal = false;
  std::string note;  // verbatim connection column

  RowStatus status = RowStatus::Fail;
  std::string diagnosis;
};

// Loads every soft-node table data file (s1..s6 + irrational).
std::vector<TableRow> load_soft_tables(const std::string& data_dir);

// Runs the per-row checks against the catalog graphs and fills
// status/diagnosis in place.
void verify_table_rows(std::vector<TableRow>& rows, const Catalog& catalog);

struct TableSummary {
  int total = 0;
  int exact_pass = 0;
  int pass_scaled = 0;
  int fail = 0;
  int unparseable = 0;
  int unknown_id = 0;
};

TableSummary summarize(const std::vector<TableRow>& rows);

// Committed discrepancy ledger: one line per known non-exact row,
// `table:row|status|reason`. Returns mismatch descriptions (rows failing
// but absent from the ledger, or stale ledger lines), empty when the
// ledger exactly covers reality.
std::vector<std::string> compare_with_ledger(const std::vector<TableRow>& rows,
                                             const std::string& ledger_path);

std::string ledger_line(const TableRow& row);

}  // namespace softgraph
