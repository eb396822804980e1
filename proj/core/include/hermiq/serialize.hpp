#pragma once

#include <string>
#include <vector>

#include "hermiq/quantum.hpp"
#include "hermiq/tables.hpp"

namespace hermiq {

enum class VerificationLevel { Formula, RankVerified, ExhaustivelyVerified };

std::string to_string(VerificationLevel level);
VerificationLevel verification_level_from_string(const std::string& s);

/// A quantum record plus the evidence attached when it was produced.
struct CatalogEntry {
  QuantumCodeRecord record;
  std::string tool_version;
  int q = 0;
  std::string timestamp;  // empty unless explicitly stamped
  VerificationLevel level = VerificationLevel::Formula;
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Fixed CSV column order:
/// n,k,field_size,dz,dz_exact,dx,dx_exact,d_sym,construction,provenance,verification_level
std::string csv_header();
std::string to_csv_row(const CatalogEntry& e);

std::string to_json(const CatalogEntry& e);
std::string to_json(const std::vector<CatalogEntry>& entries);
CatalogEntry catalog_entry_from_json(const std::string& json_text);
std::vector<CatalogEntry> catalog_from_json(const std::string& json_text);

std::string to_json(const std::vector<Table1Row>& rows);
std::vector<Table1Row> table1_from_json(const std::string& json_text);
std::string table1_csv(const std::vector<Table1Row>& rows);
std::string table1_text(const std::vector<Table1Row>& rows);

std::string to_json(const std::vector<Table2Row>& rows);
std::vector<Table2Row> table2_from_json(const std::string& json_text);
std::string table2_csv(const std::vector<Table2Row>& rows);
std::string table2_text(const std::vector<Table2Row>& rows);

std::string record_line(const QuantumCodeRecord& rec);

}  // namespace hermiq
