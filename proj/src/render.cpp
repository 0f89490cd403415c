#include "hhgp/render.hpp"

#include <algorithm>
#include <sstream>

namespace hhgp {

std::string format_weight(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}
std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

json vec_json(const Vec& v) { return json(v); }
Vec vec_from_json(const json& j) { return j.get<Vec>(); }

json crossed_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

std::string type_name(const CartanType& t) { return t.name(); }

CartanType type_from_json(const json& j) {
  auto t = CartanType::parse(j.get<std::string>());
  if (!t) throw std::invalid_argument("bad type string in JSON");
  return *t;
}

}  // namespace

std::string render_gr_table_text(const GrTable& t) {
  const char* headers[6] = {"weight", "rank", "degree", "representation", "dimension",
                            "sum of roots"};
  std::vector<std::array<std::string, 6>> cells;
  for (const auto& row : t.rows) {
    cells.push_back({format_weight(row.weight), std::to_string(row.rank),
                     row.degree ? std::to_string(*row.degree) : "",
                     row.rep ? format_weight(*row.rep) : "",
                     row.dim ? row.dim->str() : "", format_weight(row.sum_roots)});
  }
  std::array<std::size_t, 6> width;
  for (int c = 0; c < 6; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (int c = 0; c < 6; ++c) os << (c ? "  " : "") << pad_right(headers[c], width[c]);
  os << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0 && t.rows[i].level != t.rows[i - 1].level) os << "\n";
    for (int c = 0; c < 6; ++c) {
      bool right = (c == 1 || c == 2 || c == 4);
      os << (c ? "  " : "")
         << (right ? pad_left(cells[i][c], width[c]) : pad_right(cells[i][c], width[c]));
    }
    os << "\n";
  }
  return os.str();
}

std::string render_gr_table_csv(const GrTable& t) {
  std::ostringstream os;
  os << "weight,rank,degree,representation,dimension,sum_of_roots,level\n";
  for (const auto& row : t.rows) {
    os << '"' << format_weight(row.weight) << "\"," << row.rank << ','
       << (row.degree ? std::to_string(*row.degree) : "") << ','
       << (row.rep ? "\"" + format_weight(*row.rep) + "\"" : "") << ','
       << (row.dim ? row.dim->str() : "") << ",\"" << format_weight(row.sum_roots) << "\","
       << row.level << "\n";
  }
  return os.str();
}

json gr_table_json(const GrTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    r["weight"] = vec_json(row.weight);
    r["rank"] = row.rank;
    r["level"] = row.level;
    r["degree"] = row.degree ? json(*row.degree) : json(nullptr);
    r["representation"] = row.rep ? vec_json(*row.rep) : json(nullptr);
    r["dimension"] = row.dim ? json(row.dim->str()) : json(nullptr);
    r["sum_of_roots"] = vec_json(row.sum_roots);
    rows.push_back(std::move(r));
  }
  return json{{"schema_version", 1},
              {"kind", "gr_table"},
              {"type", type_name(t.type)},
              {"crossed", crossed_json(t.crossed)},
              {"p", t.p},
              {"rows", std::move(rows)}};
}

GrTable gr_table_from_json(const json& j) {
  GrTable t;
  t.type = type_from_json(j.at("type"));
  for (int k : j.at("crossed")) t.crossed.insert(k);
  t.p = j.at("p").get<int>();
  for (const auto& r : j.at("rows")) {
    GrRow row;
    row.weight = vec_from_json(r.at("weight"));
    row.rank = r.at("rank").get<Int>();
    row.level = r.at("level").get<Int>();
    if (!r.at("degree").is_null()) row.degree = r.at("degree").get<int>();
    if (!r.at("representation").is_null()) row.rep = vec_from_json(r.at("representation"));
    if (!r.at("dimension").is_null())
      row.dim = BigNat::from_string(r.at("dimension").get<std::string>());
    row.sum_roots = vec_from_json(r.at("sum_of_roots"));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_classification_text(const ParabolicData& par, const Classification& cls,
                                        const NilradicalStructure& ns) {
  std::ostringstream os;
  os << "variety " << par.name() << "\n";
  os << "dimension      " << par.dimension << "\n";
  if (par.index) os << "index          " << *par.index << "\n";
  if (par.bidegree)
    os << "bidegree       (" << par.bidegree->first << ", " << par.bidegree->second << ")\n";
  os << "anticanonical  " << format_weight(par.sum_np_weight) << "\n";
  auto flag = [&](const char* name, bool v) { os << name << (v ? "yes" : "no") << "\n"; };
  flag("minuscule      ", cls.minuscule);
  flag("cominuscule    ", cls.cominuscule);
  flag("adjoint        ", cls.adjoint);
  flag("coadjoint      ", cls.coadjoint);
  os << "nilradical     ";
  switch (ns.kind) {
    case NilradicalStructure::Kind::Abelian: os << "abelian"; break;
    case NilradicalStructure::Kind::Heisenberg:
      os << "Heisenberg(r=" << ns.heisenberg_r << ")";
      break;
    case NilradicalStructure::Kind::General: os << "general(depth " << ns.depth << ")"; break;
  }
  os << "\n";
  if (cls.exotic_automorphism)
    os << "note           automorphism group is larger than G for this presentation\n";
  return os.str();
}

json classification_json(const ParabolicData& par, const Classification& cls,
                         const NilradicalStructure& ns) {
  json j{{"schema_version", 1},
         {"kind", "classification"},
         {"type", type_name(par.rs->type())},
         {"crossed", crossed_json(par.crossed)},
         {"dimension", par.dimension},
         {"anticanonical", vec_json(par.sum_np_weight)},
         {"minuscule", cls.minuscule},
         {"cominuscule", cls.cominuscule},
         {"adjoint", cls.adjoint},
         {"coadjoint", cls.coadjoint},
         {"exotic_automorphism", cls.exotic_automorphism},
         {"abelian_nilradical", cls.abelian_nilradical},
         {"heisenberg_nilradical", cls.heisenberg_nilradical}};
  j["index"] = par.index ? json(*par.index) : json(nullptr);
  if (par.bidegree) j["bidegree"] = json::array({par.bidegree->first, par.bidegree->second});
  switch (ns.kind) {
    case NilradicalStructure::Kind::Abelian: j["nilradical"] = "abelian"; break;
    case NilradicalStructure::Kind::Heisenberg:
      j["nilradical"] = "heisenberg";
      j["heisenberg_r"] = ns.heisenberg_r;
      break;
    case NilradicalStructure::Kind::General:
      j["nilradical"] = "general";
      j["depth"] = ns.depth;
      break;
  }
  return j;
}

bool operator==(const HKRReport& a, const HKRReport& b) {
  return a.type.series == b.type.series && a.type.rank == b.type.rank &&
         a.crossed == b.crossed && a.cls == b.cls && a.dim_gp == b.dim_gp &&
         a.p_computed == b.p_computed && a.truncated == b.truncated &&
         a.h0_dims == b.h0_dims && a.higher == b.higher && a.certain_h0 == b.certain_h0 &&
         a.computed_affine == b.computed_affine && a.theorem == b.theorem &&
         a.closed_form == b.closed_form &&
         a.closed_form_decomposition == b.closed_form_decomposition &&
         a.verdict == b.verdict && a.witness == b.witness;
}

std::string render_hkr_text(const HKRReport& rep) {
  std::ostringstream os;
  std::string name = rep.type.name() + "/";
  bool first = true;
  for (int k : rep.crossed) {
    if (!first) name += ",";
    name += std::to_string(k);
    first = false;
  }
  os << "variety " << name << "  (dim " << rep.dim_gp << ")\n";
  os << "verdict: " << verdict_name(rep.verdict);
  if (rep.witness)
    os << "  [definite higher cohomology at p=" << rep.witness->p << ", q=" << rep.witness->q
       << ", representation " << format_weight(rep.witness->rep) << "]";
  os << "\n";
  if (rep.theorem)
    os << "vanishing guaranteed by classification: " << *rep.theorem << "\n";
  if (rep.computed_affine)
    os << "computation: no higher cohomology anywhere on the first page\n";
  if (rep.truncated)
    os << "note: computation truncated at p = " << rep.p_computed << " of " << rep.dim_gp
       << "\n";
  if (rep.verdict == Verdict::HochschildAffine && !rep.truncated) {
    os << "\nHochschild cohomology dimensions (HH^i = H^0 of the i-th exterior power):\n";
    for (std::size_t p = 0; p < rep.h0_dims.size(); ++p)
      os << "  HH^" << p << " = " << rep.h0_dims[p].str() << "\n";
  }
  if (!rep.closed_form_decomposition.empty()) {
    os << "\nclosed-form decomposition (" << *rep.closed_form << " case):\n";
    for (const auto& [i, pieces] : rep.closed_form_decomposition) {
      os << "  HH^" << i << " =";
      if (pieces.empty()) os << " 0";
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k) os << " +";
        os << " V" << format_weight(pieces[k].first) << " (dim " << pieces[k].second.str()
           << ")";
      }
      os << "\n";
    }
  }
  if (!rep.higher.empty()) {
    os << "\nhigher-cohomology pieces on the first page:\n";
    for (const auto& piece : rep.higher) {
      os << "  p=" << piece.p << " q=" << piece.q << "  " << format_weight(piece.rep)
         << "  multiplicity " << piece.mult << "  "
         << (piece.status == PieceStatus::Definite ? "definite" : "potentially cancelled")
         << "\n";
    }
  }
  if (!rep.certain_h0.empty()) {
    os << "\nglobal sections certain to survive:\n";
    for (const auto& c : rep.certain_h0)
      os << "  HH^" << c.i << " contains V" << format_weight(c.rep) << " x" << c.mult
         << " (dim " << c.dim_each.str() << ")\n";
  }
  return os.str();
}

json hkr_report_json(const HKRReport& rep) {
  json j{{"schema_version", 1},
         {"kind", "hkr_report"},
         {"type", type_name(rep.type)},
         {"crossed", crossed_json(rep.crossed)},
         {"dimension", rep.dim_gp},
         {"p_computed", rep.p_computed},
         {"truncated", rep.truncated},
         {"computed_affine", rep.computed_affine},
         {"verdict", verdict_name(rep.verdict)}};
  j["classification"] = {{"minuscule", rep.cls.minuscule},
                         {"cominuscule", rep.cls.cominuscule},
                         {"adjoint", rep.cls.adjoint},
                         {"coadjoint", rep.cls.coadjoint},
                         {"exotic_automorphism", rep.cls.exotic_automorphism},
                         {"abelian_nilradical", rep.cls.abelian_nilradical},
                         {"heisenberg_nilradical", rep.cls.heisenberg_nilradical}};
  j["theorem"] = rep.theorem ? json(*rep.theorem) : json(nullptr);
  j["closed_form"] = rep.closed_form ? json(*rep.closed_form) : json(nullptr);
  json h0 = json::array();
  for (const auto& d : rep.h0_dims) h0.push_back(d.str());
  j["h0_dims"] = std::move(h0);
  json higher = json::array();
  for (const auto& piece : rep.higher) {
    higher.push_back(json{{"p", piece.p},
                          {"q", piece.q},
                          {"representation", vec_json(piece.rep)},
                          {"multiplicity", piece.mult},
                          {"status", piece.status == PieceStatus::Definite
                                         ? "definite"
                                         : "potentially_cancelled"}});
  }
  j["higher"] = std::move(higher);
  json certain = json::array();
  for (const auto& c : rep.certain_h0) {
    certain.push_back(json{{"i", c.i},
                           {"representation", vec_json(c.rep)},
                           {"multiplicity", c.mult},
                           {"dimension", c.dim_each.str()}});
  }
  j["certain_h0"] = std::move(certain);
  json closed = json::object();
  for (const auto& [i, pieces] : rep.closed_form_decomposition) {
    json arr = json::array();
    for (const auto& [w, d] : pieces)
      arr.push_back(json{{"weight", vec_json(w)}, {"dimension", d.str()}});
    closed[std::to_string(i)] = std::move(arr);
  }
  j["closed_form_decomposition"] = std::move(closed);
  j["witness"] = rep.witness ? json{{"p", rep.witness->p},
                                    {"q", rep.witness->q},
                                    {"representation", vec_json(rep.witness->rep)},
                                    {"multiplicity", rep.witness->mult},
                                    {"status", "definite"}}
                             : json(nullptr);
  return j;
}

HKRReport hkr_report_from_json(const json& j) {
  HKRReport rep;
  rep.type = type_from_json(j.at("type"));
  for (int k : j.at("crossed")) rep.crossed.insert(k);
  rep.dim_gp = j.at("dimension").get<int>();
  rep.p_computed = j.at("p_computed").get<int>();
  rep.truncated = j.at("truncated").get<bool>();
  rep.computed_affine = j.at("computed_affine").get<bool>();
  const json& c = j.at("classification");
  rep.cls.minuscule = c.at("minuscule").get<bool>();
  rep.cls.cominuscule = c.at("cominuscule").get<bool>();
  rep.cls.adjoint = c.at("adjoint").get<bool>();
  rep.cls.coadjoint = c.at("coadjoint").get<bool>();
  rep.cls.exotic_automorphism = c.at("exotic_automorphism").get<bool>();
  rep.cls.abelian_nilradical = c.at("abelian_nilradical").get<bool>();
  rep.cls.heisenberg_nilradical = c.at("heisenberg_nilradical").get<bool>();
  if (!j.at("theorem").is_null()) rep.theorem = j.at("theorem").get<std::string>();
  if (!j.at("closed_form").is_null()) rep.closed_form = j.at("closed_form").get<std::string>();
  std::string v = j.at("verdict").get<std::string>();
  rep.verdict = v == "HochschildAffine" ? Verdict::HochschildAffine
                : v == "NotAffine"      ? Verdict::NotAffine
                                        : Verdict::Inconclusive;
  for (const auto& d : j.at("h0_dims")) rep.h0_dims.push_back(BigNat::from_string(d));
  for (const auto& piece : j.at("higher")) {
    HigherPiece hp;
    hp.p = piece.at("p").get<int>();
    hp.q = piece.at("q").get<int>();
    hp.rep = vec_from_json(piece.at("representation"));
    hp.mult = piece.at("multiplicity").get<Int>();
    hp.status = piece.at("status").get<std::string>() == "definite"
                    ? PieceStatus::Definite
                    : PieceStatus::PotentiallyCancelled;
    rep.higher.push_back(std::move(hp));
  }
  for (const auto& c0 : j.at("certain_h0")) {
    CertainH0 e;
    e.i = c0.at("i").get<int>();
    e.rep = vec_from_json(c0.at("representation"));
    e.mult = c0.at("multiplicity").get<Int>();
    e.dim_each = BigNat::from_string(c0.at("dimension").get<std::string>());
    rep.certain_h0.push_back(std::move(e));
  }
  for (const auto& [key, arr] : j.at("closed_form_decomposition").items()) {
    std::vector<std::pair<Vec, BigNat>> pieces;
    for (const auto& piece : arr)
      pieces.emplace_back(vec_from_json(piece.at("weight")),
                          BigNat::from_string(piece.at("dimension").get<std::string>()));
    rep.closed_form_decomposition.emplace(std::stoi(key), std::move(pieces));
  }
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    HigherPiece hp;
    hp.p = w.at("p").get<int>();
    hp.q = w.at("q").get<int>();
    hp.rep = vec_from_json(w.at("representation"));
    hp.mult = w.at("multiplicity").get<Int>();
    hp.status = PieceStatus::Definite;
    rep.witness = std::move(hp);
  }
  return rep;
}

std::string render_bruhat_dot(const BruhatGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=circle, label=\"\"];\n";
  int max_len = 0;
  for (int l : g.lengths) max_len = std::max(max_len, l);
  for (int l = 0; l <= max_len; ++l) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < g.lengths.size(); ++i)
      if (g.lengths[i] == l) os << " n" << i << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < g.words.size(); ++i) {
    os << "  n" << i << " [tooltip=\"";
    if (g.words[i].empty()) os << "e";
    for (std::size_t k = 0; k < g.words[i].size(); ++k)
      os << (k ? " " : "") << "s" << g.words[i][k];
    os << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.source << " -> n" << e.target;
    if (e.label) os << " [label=\"" << e.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

json bruhat_json(const BruhatGraph& g) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.lengths.size(); ++i)
    nodes.push_back(json{{"id", i}, {"length", g.lengths[i]}, {"word", g.words[i]}});
  json edges = json::array();
  for (const auto& e : g.edges) {
    json je{{"source", e.source}, {"target", e.target}};
    je["label"] = e.label ? json(e.label) : json(nullptr);
    edges.push_back(std::move(je));
  }
  return json{{"schema_version", 1},
              {"kind", "bruhat_graph"},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

std::string render_kostant_text(const ParabolicData& par,
                                const std::vector<KostantClass>& classes) {
  std::ostringstream os;
  for (const auto& k : classes) {
    os << "l=" << k.length << "  w=";
    if (k.word.empty()) os << "e";
    for (std::size_t i = 0; i < k.word.size(); ++i) os << (i ? "." : "") << "s" << k.word[i];
    os << "  w.0=" << format_weight(k.weight) << "  rank " << k.levi_rank << "\n";
  }
  (void)par;
  return os.str();
}

json kostant_json(const ParabolicData& par, const std::vector<KostantClass>& classes) {
  json arr = json::array();
  for (const auto& k : classes)
    arr.push_back(json{{"length", k.length},
                       {"word", k.word},
                       {"weight", vec_json(k.weight)},
                       {"levi_rank", k.levi_rank}});
  return json{{"schema_version", 1},
              {"kind", "kostant_cohomology"},
              {"type", type_name(par.rs->type())},
              {"crossed", crossed_json(par.crossed)},
              {"classes", std::move(arr)}};
}

std::string render_kostant_sum_text(const std::vector<KostantPiece>& pieces) {
  std::ostringstream os;
  for (const auto& piece : pieces) {
    os << "l=" << piece.length << "  w=";
    if (piece.word.empty()) os << "e";
    for (std::size_t i = 0; i < piece.word.size(); ++i)
      os << (i ? "." : "") << "s" << piece.word[i];
    os << "  weight " << format_weight(piece.weight)
       << (piece.regular ? "  regular" : "  singular") << "\n";
  }
  return os.str();
}

json kostant_sum_json(const std::vector<KostantPiece>& pieces) {
  json arr = json::array();
  for (const auto& piece : pieces)
    arr.push_back(json{{"length", piece.length},
                       {"word", piece.word},
                       {"weight", vec_json(piece.weight)},
                       {"regular", piece.regular}});
  return json{{"schema_version", 1}, {"kind", "kostant_sum"}, {"pieces", std::move(arr)}};
}

namespace {

std::string scan_flags(const ScanResult& r) {
  std::string f;
  if (r.cls.minuscule) f += "m";
  if (r.cls.cominuscule) f += "c";
  if (r.cls.adjoint) f += "a";
  if (r.cls.coadjoint) f += "d";
  if (r.exotic) f += "!";
  return f.empty() ? "-" : f;
}

}  // namespace

std::string render_scan_text(const std::vector<ScanResult>& rows) {
  std::ostringstream os;
  os << "variety   dim  flags  verdict\n";
  for (const auto& r : rows) {
    std::string v = r.type.name() + "/" + std::to_string(r.node);
    os << pad_right(v, 9) << pad_left(std::to_string(r.dim), 4) << "  "
       << pad_right(scan_flags(r), 5) << "  " << verdict_name(r.report.verdict);
    if (r.report.witness)
      os << "  (witness p=" << r.report.witness->p << " q=" << r.report.witness->q << " "
         << format_weight(r.report.witness->rep) << ")";
    if (r.report.truncated) os << "  [truncated at p=" << r.report.p_computed << "]";
    os << "\n";
  }
  os << "flags: m minuscule, c cominuscule, a adjoint, d coadjoint, ! larger automorphisms\n";
  return os.str();
}

std::string render_scan_csv(const std::vector<ScanResult>& rows) {
  std::ostringstream os;
  os << "type,node,dim,minuscule,cominuscule,adjoint,coadjoint,exotic,verdict,truncated\n";
  for (const auto& r : rows) {
    os << r.type.name() << ',' << r.node << ',' << r.dim << ',' << r.cls.minuscule << ','
       << r.cls.cominuscule << ',' << r.cls.adjoint << ',' << r.cls.coadjoint << ','
       << r.exotic << ',' << verdict_name(r.report.verdict) << ',' << r.report.truncated
       << "\n";
  }
  return os.str();
}

json scan_json(const std::vector<ScanResult>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"type", r.type.name()},
                       {"node", r.node},
                       {"dim", r.dim},
                       {"verdict", verdict_name(r.report.verdict)},
                       {"truncated", r.report.truncated},
                       {"minuscule", r.cls.minuscule},
                       {"cominuscule", r.cls.cominuscule},
                       {"adjoint", r.cls.adjoint},
                       {"coadjoint", r.cls.coadjoint},
                       {"exotic_automorphism", r.exotic}});
  }
  return json{{"schema_version", 1}, {"kind", "scan"}, {"results", std::move(arr)}};
}

}  // namespace hhgp
