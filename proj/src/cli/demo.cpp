#include <fstream>
#include <json.hpp>

#include "kumlift/cli.hpp"

namespace kumlift::cli {

namespace {

using json = nlohmann::ordered_json;

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const RatMatrix kJ0{{0, -1}, {1, 0}};

json base_tori() {
  json tori;
  tori["E"] = {{"g", 1}, {"J", matrix_json(kJ0)}};
  tori["Ed"] = {{"dual_of", "E"}};
  tori["A"] = {{"product", {"E", "E"}}};
  tori["Ad"] = {{"dual_of", "A"}};
  return tori;
}

json hom(const std::string& s, const std::string& t, const RatMatrix& m) {
  return {{"source", s}, {"target", t}, {"matrix", matrix_json(m)}};
}

json block_map(const std::string& kind, const std::string& s, const std::string& t, const RatMatrix& m) {
  return {{"kind", kind}, {"source", s}, {"target", t}, {"matrix", matrix_json(m)}};
}

RatMatrix unipotent(const RatMatrix& top_right) {
  const std::size_t r = top_right.rows();
  return block2x2(RatMatrix::identity(r), top_right, RatMatrix::zero(r, r), RatMatrix::identity(r));
}

RatMatrix anti_diagonal(std::size_t r) {
  return block2x2(RatMatrix::zero(r, r), -RatMatrix::identity(r), RatMatrix::identity(r), RatMatrix::zero(r, r));
}

json identity_suite() {
  json doc;
  doc["tori"] = base_tori();
  doc["homs"]["two_E"] = hom("E", "E", Rational(2) * RatMatrix::identity(2));
  doc["homs"]["id_A"] = hom("A", "A", RatMatrix::identity(4));
  doc["block_maps"]["id_E"] = block_map("symplectic", "E", "E", RatMatrix::identity(4));
  doc["block_maps"]["id_A"] = block_map("symplectic", "A", "A", RatMatrix::identity(8));
  doc["block_maps"]["id_VE"] = block_map("mukai", "E", "E", RatMatrix::identity(4));
  doc["tasks"] = {
      {{"id", "sp_identity_E"}, {"op", "check-sp"}, {"map", "id_E"}},
      {{"id", "sp_identity_A"}, {"op", "check-sp"}, {"map", "id_A"}},
      {{"id", "hodge_identity_E"}, {"op", "check-hodge"}, {"map", "id_VE"}},
      {{"id", "lift_identity"}, {"op", "check-lift"}, {"map", "id_E"}, {"isogeny", "two_E"}},
      {{"id", "member_identity"}, {"op", "check-lift"}, {"map", "id_VE"}, {"isogeny", "two_E"}, {"on", "cover"}},
      {{"id", "restrict_identity"}, {"op", "restrict"}, {"map", "id_VE"}, {"isogeny", "two_E"}},
      {{"id", "pd_identity"}, {"op", "pd-square"}, {"isogeny", "id_A"}},
      {{"id", "kummer_identity"}, {"op", "kummer-split"}, {"map", "id_A"}, {"n", 2}},
  };
  return doc;
}

json poincare_example() {
  json doc;
  doc["tori"] = base_tori();
  doc["homs"]["two_E"] = hom("E", "E", Rational(2) * RatMatrix::identity(2));
  doc["homs"]["three_E"] = hom("E", "E", Rational(3) * RatMatrix::identity(2));
  doc["homs"]["two_Ed"] = hom("Ed", "Ed", Rational(2) * RatMatrix::identity(2));
  doc["homs"]["three_Ed"] = hom("Ed", "Ed", Rational(3) * RatMatrix::identity(2));
  doc["block_maps"]["phi_P"] = block_map("symplectic", "E", "Ed", anti_diagonal(2));
  doc["block_maps"]["phi_P_mukai"] = block_map("mukai", "E", "Ed", anti_diagonal(2));
  doc["tasks"] = {
      {{"id", "phi_symplectic"}, {"op", "check-sp"}, {"map", "phi_P"}},
      {{"id", "phi_hodge"}, {"op", "check-hodge"}, {"map", "phi_P_mukai"}},
      {{"id", "phi_lift_n2"}, {"op", "check-lift"}, {"map", "phi_P"}, {"isogeny", "two_E"}, {"isogeny_target", "two_Ed"}},
      {{"id", "phi_lift_n3"}, {"op", "check-lift"}, {"map", "phi_P"}, {"isogeny", "three_E"}, {"isogeny_target", "three_Ed"}},
      {{"id", "phi_member_n2"},
       {"op", "check-lift"},
       {"map", "phi_P_mukai"},
       {"isogeny", "two_E"},
       {"isogeny_target", "two_Ed"},
       {"on", "cover"}},
      {{"id", "phi_restrict_n2"}, {"op", "restrict"}, {"map", "phi_P_mukai"}, {"isogeny", "two_E"}, {"isogeny_target", "two_Ed"}},
  };
  return doc;
}

json unipotent_example() {
  const IsogenyContext ctx = make_context(scalar_hom(make_torus(1, kJ0, "E"), 2));
  const RatMatrix g = unipotent(Rational(4) * kJ0);
  const RatMatrix gamma = ctx.iota * g.inverse().transpose() * ctx.iota.inverse();
  json doc;
  doc["tori"] = base_tori();
  doc["homs"]["two_E"] = hom("E", "E", Rational(2) * RatMatrix::identity(2));
  doc["block_maps"]["u4"] = block_map("symplectic", "E", "E", g);
  doc["block_maps"]["u1"] = block_map("symplectic", "E", "E", unipotent(kJ0));
  doc["block_maps"]["u4_cover"] = block_map("mukai", "E", "E", gamma);
  doc["block_maps"]["swap"] = block_map("mukai", "E", "E", RatMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  doc["block_maps"]["doubling"] = block_map("mukai", "E", "E", Rational(2) * RatMatrix::identity(4));
  doc["tasks"] = {
      {{"id", "u4_symplectic"}, {"op", "check-sp"}, {"map", "u4"}},
      {{"id", "u4_hodge"}, {"op", "check-hodge"}, {"map", "u4"}},
      {{"id", "u4_lift"}, {"op", "check-lift"}, {"map", "u4"}, {"isogeny", "two_E"}},
      {{"id", "u1_lift"}, {"op", "check-lift"}, {"map", "u1"}, {"isogeny", "two_E"}},
      {{"id", "u4_member"}, {"op", "check-lift"}, {"map", "u4_cover"}, {"isogeny", "two_E"}, {"on", "cover"}},
      {{"id", "u4_restrict"}, {"op", "restrict"}, {"map", "u4_cover"}, {"isogeny", "two_E"}},
      {{"id", "swap_hodge"}, {"op", "check-hodge"}, {"map", "swap"}},
      {{"id", "doubling_isometry"}, {"op", "check-hodge"}, {"map", "doubling"}},
  };
  return doc;
}

json pd_example() {
  const ComplexTorus e = make_torus(1, kJ0, "E");
  const ComplexTorus a = product_torus({e, e});
  const Subtorus kernel = kernel_subtorus(summation_hom(a, 2));
  const TorusHom q = kummer_isogeny(kernel, a, 2);
  json doc;
  doc["tori"] = base_tori();
  doc["tori"]["N"] = {{"g", 2}, {"J", matrix_json(kernel.torus.J)}};
  doc["tori"]["NA"] = {{"product", {"N", "A"}}};
  doc["tori"]["A2"] = {{"product", {"A", "A"}}};
  doc["homs"]["two_E"] = hom("E", "E", Rational(2) * RatMatrix::identity(2));
  doc["homs"]["three_E"] = hom("E", "E", Rational(3) * RatMatrix::identity(2));
  doc["homs"]["one_plus_i"] = hom("E", "E", RatMatrix{{1, -1}, {1, 1}});
  doc["homs"]["two_A"] = hom("A", "A", Rational(2) * RatMatrix::identity(4));
  doc["homs"]["three_A"] = hom("A", "A", Rational(3) * RatMatrix::identity(4));
  doc["homs"]["kummer_q"] = hom("NA", "A2", q.M);
  doc["tasks"] = json::array();
  for (const auto* label : {"two_E", "three_E", "one_plus_i", "two_A", "three_A", "kummer_q"})
    doc["tasks"].push_back({{"id", std::string("pd_") + label}, {"op", "pd-square"}, {"isogeny", label}});
  return doc;
}

json kummer_example() {
  const RatMatrix ja = block_diag({kJ0, kJ0});
  const RatMatrix m12 = RatMatrix::identity(2) + kJ0;
  const RatMatrix mixed = block2x2(kJ0, m12, -m12.transpose(), RatMatrix::zero(2, 2));
  json doc;
  doc["tori"] = base_tori();
  doc["block_maps"]["u4"] = block_map("symplectic", "A", "A", unipotent(Rational(4) * ja));
  doc["block_maps"]["u4_mixed"] = block_map("symplectic", "A", "A", unipotent(Rational(4) * mixed));
  doc["block_maps"]["u2"] = block_map("symplectic", "A", "A", unipotent(Rational(2) * ja));
  doc["block_maps"]["u9"] = block_map("symplectic", "A", "A", unipotent(Rational(9) * ja));
  doc["block_maps"]["phi_P"] = block_map("symplectic", "A", "Ad", anti_diagonal(4));
  doc["tasks"] = {
      {{"id", "split_u4"}, {"op", "kummer-split"}, {"map", "u4"}, {"n", 2}},
      {{"id", "split_u4_mixed"}, {"op", "kummer-split"}, {"map", "u4_mixed"}, {"n", 2}},
      {{"id", "split_u9_n3"}, {"op", "kummer-split"}, {"map", "u9"}, {"n", 3}},
      {{"id", "split_u2"}, {"op", "kummer-split"}, {"map", "u2"}, {"n", 2}},
      {{"id", "split_phi"}, {"op", "kummer-split"}, {"map", "phi_P"}, {"n", 2}},
  };
  return doc;
}

}  // namespace

std::vector<CorpusFile> demo_corpus() {
  const std::vector<std::pair<std::string, json>> docs = {{"identity_suite", identity_suite()},
                                                          {"poincare", poincare_example()},
                                                          {"unipotent", unipotent_example()},
                                                          {"pd_squares", pd_example()},
                                                          {"kummer", kummer_example()}};
  std::vector<CorpusFile> out;
  RunOptions canonical;
  canonical.canonical = true;
  for (const auto& [name, doc] : docs) {
    const std::string text = doc.dump(2) + "\n";
    out.push_back({name + ".json", text});
    out.push_back({name + ".expected.json", run_text(text, canonical).output});
  }
  return out;
}

std::vector<std::filesystem::path> write_demo(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& file : demo_corpus()) {
    const auto path = dir / file.name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << file.content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace kumlift::cli
