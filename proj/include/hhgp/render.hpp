#pragma once

#include <json.hpp>

#include "hhgp/hkr.hpp"

namespace hhgp {

using nlohmann::json;

inline bool operator==(const GrRow& a, const GrRow& b) {
  return a.weight == b.weight && a.sum_roots == b.sum_roots && a.level == b.level &&
         a.rank == b.rank && a.degree == b.degree && a.rep == b.rep && a.dim == b.dim;
}
inline bool operator==(const GrTable& a, const GrTable& b) {
  return a.type.series == b.type.series && a.type.rank == b.type.rank &&
         a.crossed == b.crossed && a.p == b.p && a.rows == b.rows;
}
inline bool operator==(const HigherPiece& a, const HigherPiece& b) {
  return a.p == b.p && a.q == b.q && a.rep == b.rep && a.mult == b.mult && a.status == b.status;
}
inline bool operator==(const CertainH0& a, const CertainH0& b) {
  return a.i == b.i && a.rep == b.rep && a.mult == b.mult && a.dim_each == b.dim_each;
}
inline bool operator==(const Classification& a, const Classification& b) {
  return a.minuscule == b.minuscule && a.cominuscule == b.cominuscule &&
         a.adjoint == b.adjoint && a.coadjoint == b.coadjoint &&
         a.exotic_automorphism == b.exotic_automorphism &&
         a.abelian_nilradical == b.abelian_nilradical &&
         a.heisenberg_nilradical == b.heisenberg_nilradical;
}
bool operator==(const HKRReport& a, const HKRReport& b);

std::string format_weight(const Vec& v);

// Associated-graded tables.
std::string render_gr_table_text(const GrTable& t);
std::string render_gr_table_csv(const GrTable& t);
json gr_table_json(const GrTable& t);
GrTable gr_table_from_json(const json& j);

// Classification report.
std::string render_classification_text(const ParabolicData& par, const Classification& cls,
                                        const NilradicalStructure& ns);
json classification_json(const ParabolicData& par, const Classification& cls,
                         const NilradicalStructure& ns);

// HKR reports.
std::string render_hkr_text(const HKRReport& rep);
json hkr_report_json(const HKRReport& rep);
HKRReport hkr_report_from_json(const json& j);

// Parabolic Bruhat graphs.
std::string render_bruhat_dot(const BruhatGraph& g, const std::string& name);
json bruhat_json(const BruhatGraph& g);

// Kostant listings.
std::string render_kostant_text(const ParabolicData& par,
                                const std::vector<KostantClass>& classes);
json kostant_json(const ParabolicData& par, const std::vector<KostantClass>& classes);
std::string render_kostant_sum_text(const std::vector<KostantPiece>& pieces);
json kostant_sum_json(const std::vector<KostantPiece>& pieces);

// Scan summaries.
std::string render_scan_text(const std::vector<ScanResult>& rows);
std::string render_scan_csv(const std::vector<ScanResult>& rows);
json scan_json(const std::vector<ScanResult>& rows);

}  // namespace hhgp
