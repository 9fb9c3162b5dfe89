#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "minkowski/acceptance.hpp"
#include "minkowski/groupfile.hpp"

using namespace minkowski;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_group_file(text);
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(GroupFile, ParsesQ8) {
  const GroupFile gf = parse_group_file(read_file(std::string(MINKOWSKI_GROUPS_DIR) + "/q8.grp"));
  EXPECT_EQ(gf.conductor, 4U);
  EXPECT_EQ(gf.dim, 2U);
  EXPECT_EQ(gf.generator_count(), 2U);
  const auto& gens = std::get<std::vector<CycloMatrix>>(gf.generators);
  EXPECT_EQ(gens, q8_generators());
}

TEST(GroupFile, RoundTrip) {
  for (const char* name : {"q8.grp", "c4_rotation.grp", "plus_minus_identity.grp", "dihedral8_conjugate.grp"}) {
    const GroupFile a = parse_group_file(read_file(std::string(MINKOWSKI_GROUPS_DIR) + "/" + name));
    const std::string text = serialize_group_file(a);
    const GroupFile b = parse_group_file(text);
    EXPECT_EQ(serialize_group_file(b), text) << name;
    EXPECT_EQ(a.generators, b.generators) << name;
  }
  const GroupFile w = rational_group_file(wreath_witness(4, 3));
  EXPECT_EQ(parse_group_file(serialize_group_file(w)).generators, w.generators);
}

TEST(GroupFile, CommentsBlankLinesAndSpacing) {
  const GroupFile gf = parse_group_file(
      "# leading comment\n\nmatgroup v1\nfield cyclotomic 3   # trailing\ndim 1\n\ngen\n  [ 0 , 1 ]  \n");
  const auto& gens = std::get<std::vector<CycloMatrix>>(gf.generators);
  EXPECT_EQ(gens[0](0, 0), CycloElem::zeta(cyclo_field(3)));
}

TEST(GroupFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_of("matgroup v2\n"), "line 1: unsupported header 'matgroup v2'");
  EXPECT_EQ(error_of("matgroup v1\nfield real\n"), "line 2: unknown field 'real'");
  EXPECT_EQ(error_of("matgroup v1\nfield rational\ndim 0\n"), "line 3: expected 'dim <n>' with n >= 1");
  EXPECT_EQ(error_of("matgroup v1\nfield rational\ndim 2\n"), "line 3: file declares no generators");
  EXPECT_EQ(error_of("matgroup v1\nfield rational\ndim 2\ngen\n1 0\n0\n"), "line 6: row has 1 entries, expected 2");
  EXPECT_EQ(error_of("matgroup v1\nfield rational\ndim 1\ngen\n1/0\n"), "line 5: zero denominator in '1/0'");
  EXPECT_EQ(error_of("matgroup v1\nfield rational\ndim 1\ngen\nx\n"), "line 5: malformed entry 'x'");
  EXPECT_EQ(error_of("matgroup v1\nfield rational\ndim 2\ngen\n1 1\n1 1\n"), "line 4: singular generator");
  EXPECT_EQ(error_of("matgroup v1\nfield rational\ndim 2\ngen\n1 0\n"),
            "line 5: unexpected end of file, expected matrix row");
  EXPECT_EQ(error_of("matgroup v1\nfield cyclotomic 4\ndim 1\ngen\n[1,2,3]\n"),
            "line 5: cyclotomic entry needs 2 coefficients, got 3");
  EXPECT_EQ(error_of("matgroup v1\nfield cyclotomic 0\n"), "line 2: cyclotomic conductor must be a positive integer");
  EXPECT_EQ(error_of(""), "line 1: unexpected end of file, expected header");
}
