#ifndef PRECAT_TESTS_FIXTURES_HPP
#define PRECAT_TESTS_FIXTURES_HPP

#include <fstream>
#include <string>

#include "precat/json_io.hpp"
#include "precat/oracle.hpp"

namespace precat::testing {

inline Polygraph load_fixture(const std::string& name) {
  std::string path = std::string(PRECAT_FIXTURES_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  json j;
  in >> j;
  auto [P, rep] = polygraph_from_json(j);
  if (!rep.ok()) throw std::runtime_error("invalid fixture " + path);
  return P;
}

inline Polygraph fix_int() { return load_fixture("fix_int.json"); }
inline Polygraph fix_eh() { return load_fixture("fix_eh.json"); }
inline Polygraph fix_q() { return load_fixture("fix_q.json"); }

// Normal form of a text expression.
inline CellPtr nf(const Polygraph& P, const std::string& text) {
  return normalize_expr(P, parse_expr(text));
}

// The collapse of the two-square polygraph onto the one-loop one.
inline PolyMap collapse_int_to_q() {
  PolyMap F;
  F.src = fix_int();
  F.tgt = fix_q();
  for (const char* p : {"x", "y", "z"}) F.set(0, p, "p");
  for (const char* e : {"f", "f'", "g", "g'"}) F.set(1, e, "h");
  for (const char* s : {"phi", "psi"}) F.set(2, s, "beta");
  return F;
}

}  // namespace precat::testing

#endif
