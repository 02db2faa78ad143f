#include "hallforge/catalog.hpp"

#include "hallforge/errors.hpp"

namespace hallforge {

std::vector<std::string> catalog(const std::string& algebra) {
  if (algebra == "kronecker") return {"S1", "P2", "tau(-1,P1)", "S2", "I1", "tau(S2)", "R0", "Rinf", "R1", "J2"};
  if (algebra == "kronecker-dup")
    return {"S1",   "P2",  "S2",    "rad(P1')", "R0",   "Rinf",       "S1'",        "S2'",    "P1'",
            "P2'", "R0'", "Rinf'", "socq(P2')", "rad(P2')", "syz(-1,S1)", "ext(S1',S2)"};
  if (algebra == "d4tilde") return {"S1", "S2", "S3", "S4", "S5", "P2", "I1", "T23", "T45", "T24", "T35", "T25", "T34"};
  if (algebra == "d4tilde-dup") {
    std::vector<std::string> out = simple_blueprints(algebra);
    for (const auto& v : projective_injective_vertices(algebra)) out.push_back("P" + v);
    for (const char* t : {"T23", "T45", "T24", "T35", "T25", "T34"}) out.push_back(t);
    return out;
  }
  throw InvalidArgument("no catalog for algebra '" + algebra + "'");
}

std::vector<std::string> stable_catalog(const std::string& algebra) {
  // one rational point of each homogeneous family stays out, so that the
  // dimension-(1,1) family reads as two named classes plus a bundle
  std::vector<std::string> out;
  for (auto& b : catalog(algebra))
    if (b != "R1" && b != "R1'") out.push_back(b);
  return out;
}

std::vector<std::string> projective_injective_vertices(const std::string& algebra) {
  auto a = builtin_algebra(algebra, Field::of_order(2));
  std::vector<std::string> out;
  for (std::size_t x = 0; x < a->num_vertices(); ++x)
    if (is_injective(projective_module(a, x))) out.push_back(a->vertex_label(x));
  return out;
}

std::vector<std::string> simple_blueprints(const std::string& algebra) {
  auto a = builtin_algebra(algebra, Field::of_order(2));
  std::vector<std::string> out;
  for (const auto& v : a->vertex_labels()) out.push_back("S" + v);
  return out;
}

}  // namespace hallforge
