#include <gtest/gtest.h>

#include "powergraph/group_spec.hpp"

using powergraph::GroupSpec;
using powergraph::GroupSpecError;
using powergraph::parse_group_spec;
using Kind = GroupSpec::Kind;

TEST(GroupSpecParse, SingleAtom) {
  EXPECT_EQ(parse_group_spec("Z(12)"), GroupSpec::atom(Kind::kCyclic, 12));
  EXPECT_EQ(parse_group_spec(" E( 3 , 2 ) "), GroupSpec::atom(Kind::kElementaryAbelian, 3, 2));
}

TEST(GroupSpecParse, ProductsAreLeftAssociative) {
  auto z2 = GroupSpec::atom(Kind::kCyclic, 2);
  auto z3 = GroupSpec::atom(Kind::kCyclic, 3);
  EXPECT_EQ(parse_group_spec("Z(2)xZ(2)xZ(3)"), GroupSpec::product(GroupSpec::product(z2, z2), z3));
  EXPECT_EQ(parse_group_spec("Z(2) x Z(2) x Z(3)").to_string(), "Z(2)xZ(2)xZ(3)");
}

TEST(GroupSpecParse, TablePathEndsAtWhitespace) {
  auto s = parse_group_spec("table:data/a.tbl x Z(2)");
  ASSERT_EQ(s.kind, Kind::kProduct);
  EXPECT_EQ(s.operands[0], GroupSpec::table("data/a.tbl"));
  EXPECT_EQ(s.operands[1], GroupSpec::atom(Kind::kCyclic, 2));
}

TEST(GroupSpecParse, RoundTripsThroughText) {
  for (const char* text : {"Z(1)", "D(7)", "Q(32)", "S(4)", "A(5)", "E(2,3)xZ(9)", "D(3)xQ(8)xZ(5)"})
    EXPECT_EQ(parse_group_spec(text).to_string(), text);
}

TEST(GroupSpecParse, QuaternionOrderMustBeTwoPower) {
  try {
    parse_group_spec("Q(7)");
    FAIL() << "expected an error";
  } catch (const GroupSpecError& e) {
    EXPECT_NE(std::string(e.what()).find("2^m with m >= 3"), std::string::npos);
  }
  EXPECT_THROW(parse_group_spec("Q(4)"), GroupSpecError);
  EXPECT_NO_THROW(parse_group_spec("Q(8)"));
}

TEST(GroupSpecParse, RejectsMalformedInput) {
  for (const char* text : {"", "Z", "Z()", "Z(0)", "Z(-3)", "Z(2", "Z(2)x", "Z(2)yZ(3)", "X(3)", "E(4,2)", "E(2)",
                           "E(2,0)", "Z(2,3)", "table:", "Z(99999999999999999999999)"})
    EXPECT_THROW(parse_group_spec(text), GroupSpecError) << text;
}

TEST(GroupSpecParse, ErrorCarriesOffset) {
  try {
    parse_group_spec("Z(2)xW(3)");
    FAIL();
  } catch (const GroupSpecError& e) {
    EXPECT_EQ(e.offset(), 5U);
  }
}
