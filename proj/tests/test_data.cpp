// The shipped data files must stay in lockstep with the in-code fixtures.

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tkt/diagram.hpp"

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(TKT_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tkt::LinkDiagram load(const std::string& name) {
  return tkt::LinkDiagram::parse_pd(read_file(name));
}

}  // namespace

TEST_CASE("data files match the test fixtures") {
  CHECK(load("unknot.pd").canonical_key() == fx::unknot().canonical_key());
  CHECK(load("trefoil.pd").canonical_key() ==
        fx::trefoil_pd().canonical_key());
  CHECK(load("hopf.pd").canonical_key() == fx::hopf().canonical_key());
  CHECK(load("fig8.pd").canonical_key() == fx::fig8().canonical_key());
  CHECK(load("fig8_meridian.pd").canonical_key() ==
        fx::fig8_meridian_link().canonical_key());
  CHECK(load("clasp_unknot.pd").canonical_key() ==
        fx::clasp_unknot_family().base().canonical_key());
  CHECK(load("clasp_trefoil.pd").canonical_key() ==
        fx::braid_closure(2, {1, 1, 1}).canonical_key());
  CHECK(load("torus2.pd").canonical_key() ==
        fx::braid_closure(2, {1}).canonical_key());
  CHECK(load("cable3.pd").canonical_key() ==
        fx::braid_closure(3, {1, 2, 1, 2}).canonical_key());
}
