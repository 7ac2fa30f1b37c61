#include "confcoh/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace confcoh {

namespace {

using json = nlohmann::ordered_json;

json terms_to_json(const TermMap& terms) {
  json arr = json::array();
  for (const auto& [mon, coeff] : terms) {
    json term;
    term["coeff"] = coeff.str();
    term["exponents"] = mon.exponents();
    arr.push_back(std::move(term));
  }
  return arr;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string presentation_to_json(const Presentation& p) {
  json doc;
  doc["schema_version"] = 1;
  doc["id"] = p.id();
  doc["coefficients"] = p.mode() == CoefficientMode::integer ? "integer" : "mod2";
  doc["degree_bound"] = p.default_degree_bound();
  doc["generators"] = json::array();
  for (const auto& g : p.generators())
    doc["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  doc["relations"] = json::array();
  for (std::size_t i = 0; i < p.relation_count(); ++i) {
    RingElement rel = p.relation(i);
    json entry;
    entry["degree"] = rel.degree();
    entry["text"] = rel.to_string();
    entry["terms"] = terms_to_json(rel.terms());
    doc["relations"].push_back(std::move(entry));
  }
  if (p.has_sq1()) {
    doc["sq1"] = json::array();
    for (std::size_t i = 0; i < p.generators().size(); ++i) {
      RingElement v = p.sq1_of_generator(i);
      doc["sq1"].push_back(
          {{"generator", p.generators()[i].name}, {"value", v.to_string()}});
    }
  }
  return doc.dump(2) + "\n";
}

std::string piece_to_json(const GradedPiece& piece) {
  json doc;
  doc["schema_version"] = 1;
  doc["degree"] = piece.degree;
  doc["basis"] = json::array();
  for (const auto& mon : piece.basis) doc["basis"].push_back(mon.exponents());
  if (piece.mode == CoefficientMode::integer) {
    json torsion = json::array();
    for (const auto& d : piece.structure.torsion()) torsion.push_back(d.str());
    doc["structure"] = {{"free_rank", piece.structure.free_rank()},
                        {"torsion", std::move(torsion)}};
  } else {
    doc["structure"] = {{"f2_dimension", piece.f2_dimension}};
  }
  doc["text"] = structure_to_string(piece);
  return doc.dump(2) + "\n";
}

std::string structure_to_string(const GradedPiece& piece) {
  if (piece.mode == CoefficientMode::mod2) {
    if (piece.f2_dimension == 0) return "0";
    if (piece.f2_dimension == 1) return "F2";
    return "F2^" + std::to_string(piece.f2_dimension);
  }
  const auto& s = piece.structure;
  std::string out;
  if (s.free_rank() == 1)
    out = "Z";
  else if (s.free_rank() > 1)
    out = "Z^" + std::to_string(s.free_rank());
  for (const auto& d : s.torsion()) {
    if (!out.empty()) out += " (+) ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

std::string bilinear_map_to_json(const BilinearMap& mu, const std::string& construction,
                                 std::uint64_t seed) {
  json doc;
  doc["schema_version"] = 1;
  doc["construction"] = construction;
  doc["r"] = mu.input_dim();
  doc["n"] = mu.output_dim();
  doc["seed"] = seed;
  doc["symmetric"] = mu.tensor_is_symmetric();
  doc["coeffs"] = json::array();
  for (int k = 0; k < mu.output_dim(); ++k)
    for (int i = 0; i < mu.input_dim(); ++i)
      for (int j = i; j < mu.input_dim(); ++j)
        if (mu.coeff(k, i, j) != 0)
          doc["coeffs"].push_back(
              {{"k", k}, {"i", i}, {"j", j}, {"value", rational_str(mu.coeff(k, i, j))}});
  return doc.dump(2) + "\n";
}

std::string nonsingularity_to_json(const BilinearMap& mu, const std::string& construction,
                                   const NonsingularitySearch& search, bool symmetric,
                                   bool bilinear_ok, std::size_t trials) {
  json doc;
  doc["schema_version"] = 1;
  doc["construction"] = construction;
  doc["r"] = mu.input_dim();
  doc["n"] = mu.output_dim();
  doc["samples"] = search.samples_run;
  doc["seed"] = search.seed;
  doc["symmetry"] = symmetric ? "ok" : "violated";
  doc["bilinearity"] = {{"trials", trials}, {"result", bilinear_ok ? "ok" : "violated"}};
  doc["result"] = search.result == NonsingularitySearch::Result::no_zero_found
                      ? "no_zero_found"
                      : "witness_found";
  doc["witnesses"] = json::array();
  if (search.witness) {
    json w;
    w["x"] = json::array();
    for (const auto& c : search.witness->x) w["x"].push_back(rational_str(c));
    w["y"] = json::array();
    for (const auto& c : search.witness->y) w["y"].push_back(rational_str(c));
    doc["witnesses"].push_back(std::move(w));
  }
  doc["provenance"] = "sampled exact-rational search";
  return doc.dump(2) + "\n";
}

std::string embedding_report_to_json(const EmbeddingReport& report) {
  json doc;
  doc["schema_version"] = 1;
  doc["construction"] = report.construction;
  doc["r"] = report.r;
  doc["n"] = report.n;
  doc["image_dim"] = report.image_dim;
  doc["pole"] = {{"coordinate", report.pole_coordinate}, {"sign", report.pole_sign}};
  doc["samples"] = report.sample_count;
  doc["seed"] = report.seed;
  doc["result"] = report.all_pairs_defined ? "ok" : "embedding_failure";
  doc["max_representative_residual"] = report.max_representative_residual;
  doc["max_antisymmetry_residual"] = report.max_antisymmetry_residual;
  doc["min_image_separation"] = report.min_image_separation;
  doc["separation_stats"] = {{"min", report.separation_stats.min},
                             {"max", report.separation_stats.max},
                             {"mean", report.separation_stats.mean}};
  doc["witnesses"] = json::array();
  if (report.witnesses) {
    auto point = [](const ProjectivePoint& p) {
      json arr = json::array();
      for (const auto& c : p.representative()) arr.push_back(rational_str(c));
      return arr;
    };
    doc["witnesses"].push_back(
        {{"x", point(report.witnesses->first)}, {"y", point(report.witnesses->second)}});
  }
  doc["provenance"] = "sampled floating evaluation of exact constructions";
  return doc.dump(2) + "\n";
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace confcoh
