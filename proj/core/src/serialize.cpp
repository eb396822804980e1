#include "hermiq/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace hermiq {

using ordered_json = nlohmann::ordered_json;

std::string to_string(VerificationLevel level) {
  switch (level) {
    case VerificationLevel::Formula:
      return "formula";
    case VerificationLevel::RankVerified:
      return "rank-verified";
    case VerificationLevel::ExhaustivelyVerified:
      return "exhaustively-verified";
  }
  return "formula";
}

VerificationLevel verification_level_from_string(const std::string& s) {
  if (s == "formula") return VerificationLevel::Formula;
  if (s == "rank-verified") return VerificationLevel::RankVerified;
  if (s == "exhaustively-verified") return VerificationLevel::ExhaustivelyVerified;
  throw PreconditionError("unknown verification level: " + s);
}

std::string record_line(const QuantumCodeRecord& rec) {
  std::ostringstream out;
  const bool exact = rec.dz.exact && rec.dx.exact;
  out << "[[" << rec.n << ", " << rec.k << ", ";
  if (!exact) out << ">=";
  out << rec.d_sym << "]]_" << rec.field_size;
  if (rec.dz.value != rec.dx.value) out << "  (dz" << (rec.dz.exact ? "=" : ">=") << rec.dz.value << ", dx"
                                        << (rec.dx.exact ? "=" : ">=") << rec.dx.value << ")";
  return out.str();
}

namespace {

ordered_json entry_to_json_obj(const CatalogEntry& e) {
  ordered_json j;
  j["n"] = e.record.n;
  j["k"] = e.record.k;
  j["field_size"] = e.record.field_size;
  j["dz"] = e.record.dz.value;
  j["dz_exact"] = e.record.dz.exact;
  j["dx"] = e.record.dx.value;
  j["dx_exact"] = e.record.dx.exact;
  j["d_sym"] = e.record.d_sym;
  j["construction"] = e.record.construction;
  j["provenance"] = e.record.provenance;
  j["verification_level"] = to_string(e.level);
  j["tool_version"] = e.tool_version;
  j["q"] = e.q;
  if (!e.timestamp.empty()) j["timestamp"] = e.timestamp;
  return j;
}

CatalogEntry entry_from_json_obj(const ordered_json& j) {
  CatalogEntry e;
  e.record.n = j.at("n").get<int>();
  e.record.k = j.at("k").get<int>();
  e.record.field_size = j.at("field_size").get<int>();
  e.record.dz = {j.at("dz").get<int>(), j.at("dz_exact").get<bool>()};
  e.record.dx = {j.at("dx").get<int>(), j.at("dx_exact").get<bool>()};
  e.record.d_sym = j.at("d_sym").get<int>();
  e.record.construction = j.at("construction").get<std::string>();
  e.record.provenance = j.at("provenance").get<std::string>();
  e.level = verification_level_from_string(j.at("verification_level").get<std::string>());
  e.tool_version = j.at("tool_version").get<std::string>();
  e.q = j.at("q").get<int>();
  if (j.contains("timestamp")) e.timestamp = j.at("timestamp").get<std::string>();
  return e;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string csv_header() {
  return "n,k,field_size,dz,dz_exact,dx,dx_exact,d_sym,construction,provenance,verification_level";
}

std::string to_csv_row(const CatalogEntry& e) {
  std::ostringstream out;
  out << e.record.n << ',' << e.record.k << ',' << e.record.field_size << ',' << e.record.dz.value << ','
      << (e.record.dz.exact ? "true" : "false") << ',' << e.record.dx.value << ','
      << (e.record.dx.exact ? "true" : "false") << ',' << e.record.d_sym << ','
      << csv_escape(e.record.construction) << ',' << csv_escape(e.record.provenance) << ','
      << to_string(e.level);
  return out.str();
}

std::string to_json(const CatalogEntry& e) { return entry_to_json_obj(e).dump(2); }

std::string to_json(const std::vector<CatalogEntry>& entries) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) arr.push_back(entry_to_json_obj(e));
  return arr.dump(2);
}

CatalogEntry catalog_entry_from_json(const std::string& json_text) {
  return entry_from_json_obj(ordered_json::parse(json_text));
}

std::vector<CatalogEntry> catalog_from_json(const std::string& json_text) {
  std::vector<CatalogEntry> out;
  for (const auto& j : ordered_json::parse(json_text)) out.push_back(entry_from_json_obj(j));
  return out;
}

std::string to_json(const std::vector<Table1Row>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["delta"] = r.delta;
    j["dim_increase"] = r.dim_increase;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::vector<Table1Row> table1_from_json(const std::string& json_text) {
  std::vector<Table1Row> out;
  for (const auto& j : ordered_json::parse(json_text))
    out.push_back({j.at("q").get<int>(), j.at("n").get<int>(), j.at("k").get<int>(), j.at("d").get<int>(),
                   j.at("delta").get<int>(), j.at("dim_increase").get<int>()});
  return out;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "q,n,k,d,delta,dim_increase\n";
  for (const auto& r : rows)
    out << r.q << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.delta << ',' << r.dim_increase << '\n';
  return out.str();
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "q=" << r.q << "  [[" << r.n << ", " << r.k << ", " << r.d << "]]_" << r.q * r.q
        << "  dim-increase " << r.dim_increase << "  (delta=" << r.delta << ")\n";
  }
  return out.str();
}

std::string to_json(const std::vector<Table2Row>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["k"] = r.k;
    ordered_json cols = ordered_json::array();
    for (int c = 0; c < 4; ++c) {
      ordered_json cell;
      cell["name"] = kTable2ColumnNames[c];
      cell["d"] = r.cells[c].d;
      cell["construction"] = r.cells[c].construction;
      cell["star"] = r.star[c];
      cell["reference"] = r.reference[c];
      cols.push_back(cell);
    }
    j["columns"] = cols;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::vector<Table2Row> table2_from_json(const std::string& json_text) {
  std::vector<Table2Row> out;
  for (const auto& j : ordered_json::parse(json_text)) {
    Table2Row r;
    r.k = j.at("k").get<int>();
    const auto& cols = j.at("columns");
    for (int c = 0; c < 4; ++c) {
      r.cells[c].d = cols.at(c).at("d").get<int>();
      r.cells[c].construction = cols.at(c).at("construction").get<std::string>();
      r.star[c] = cols.at(c).at("star").get<bool>();
      r.reference[c] = cols.at(c).at("reference").get<int>();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string table2_csv(const std::vector<Table2Row>& rows) {
  std::ostringstream out;
  out << "k";
  for (const char* name : kTable2ColumnNames)
    out << ',' << name << ",star_" << name << ",reference_" << name << ",construction_" << name;
  out << '\n';
  for (const auto& r : rows) {
    out << r.k;
    for (int c = 0; c < 4; ++c)
      out << ',' << r.cells[c].d << ',' << (r.star[c] ? "true" : "false") << ',' << r.reference[c] << ','
          << csv_escape(r.cells[c].construction);
    out << '\n';
  }
  return out.str();
}

std::string table2_text(const std::vector<Table2Row>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "k=" << r.k;
    for (int c = 0; c < 4; ++c) {
      out << "  " << kTable2ColumnNames[c] << " [[64," << r.k << ',' << r.cells[c].d << "]]"
          << (r.star[c] ? "*" : " ");
    }
    out << '\n';
  }
  const auto disc = table2_discrepancies(rows);
  if (!disc.empty()) {
    out << "discrepancies (computed vs catalog):\n";
    for (const auto& d : disc)
      out << "  k=" << d.k << " " << kTable2ColumnNames[d.column] << ": computed " << d.computed
          << ", catalog " << d.reference << '\n';
  }
  return out.str();
}

}  // namespace hermiq
