#include "fixtures.hpp"

#include "liecas/document.hpp"

#include <gtest/gtest.h>

using namespace liecas;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_source(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError("", 0, 0);
}

}  // namespace

TEST(Document, MinimalAlgebra) {
  Document d = parse_source("algebra a\ndim 2\nbracket 1 2 : 1*e2\n");
  ASSERT_NE(d.algebra("a"), nullptr);
  EXPECT_EQ(d.algebra("a")->algebra, fixtures::alg("aff1"));
  EXPECT_TRUE(validate_document(d).empty());
}

TEST(Document, IndexOutOfRangeReportsLine) {
  auto e = parse_error("algebra a\ndim 8\n\nbracket 1 9 : 1*e2\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_NE(e.message().find("out of range"), std::string::npos);
}

TEST(Document, ParametricBracket) {
  Document d = parse_source("params p\nalgebra a\ndim 7\nbracket 1 7 : p*e7\n");
  const auto& g = d.algebra("a")->algebra;
  EXPECT_EQ(g.bracket(0, 6), fixtures::vec(7, "p*e7", {"p"}));
  EXPECT_EQ(specialize(g, {{"p", Rational(3)}}).bracket(0, 6), fixtures::vec(7, "3*e7"));
}

TEST(Document, CommentsAndBlankLines) {
  Document d = parse_source("# header\n\nalgebra a   # trailing\ndim 2\n# inside\nbracket 1 2 : e2\n");
  EXPECT_EQ(d.algebra("a")->algebra, fixtures::alg("aff1"));
}

TEST(Document, JacobiViolationIsAValidationIssue) {
  Document d = parse_source("algebra bad\ndim 3\nbracket 1 2 : e1\nbracket 1 3 : e2\n");
  auto issues = validate_document(d);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].object, "bad");
  EXPECT_EQ(issues[0].line, 1u);
  EXPECT_NE(issues[0].message.find("(e1, e2, e3)"), std::string::npos);
}

TEST(Document, Errors) {
  EXPECT_EQ(parse_error("algebra a\nbracket 1 2 : e1\n").line(), 2u);           // dim missing
  EXPECT_EQ(parse_error("algebra a\ndim 2\nbracket 1 2 : q*e1\n").line(), 3u);  // unknown symbol
  EXPECT_EQ(parse_error("form w on nowhere : e1^e2\n").line(), 1u);            // unknown algebra
  EXPECT_EQ(parse_error("algebra a\ndim 2\nalgebra a\ndim 2\n").line(), 3u);    // duplicate name
  EXPECT_EQ(parse_error("algebra a\ndim 2\nbracket 1 2 : e1 +\n").line(), 3u);  // dangling operator
  EXPECT_EQ(parse_error("widget a\n").line(), 1u);
}

TEST(Document, RoundTripOfEveryKind) {
  const char* text = R"(
params p
algebra aff1
dim 2
bracket 1 2 : e2

lsa h
dim 2
params p
over aff1
prod 1 1 : -e1
prod 2 1 : -e2

map m from aff1 to aff1
params s
image 1 : e1 + s*e2
image 2 : (1/(p+1))*e2

form w on aff1 params a : a*e1^e2

cochain phi on h
params c
image 1 : c*e3
image 2 : 1/2*e4

alpha al on h : 1 2 : e3 - p*e4
)";
  Document d = parse_source(text);
  EXPECT_EQ(d.lsa("h")->over, "aff1");
  EXPECT_EQ(d.map("m")->params, std::vector<std::string>{"s"});
  EXPECT_EQ(d.form("w")->params, std::vector<std::string>{"a"});
  EXPECT_EQ(d.cochain("phi")->matrix(1, 1), RatFunc(Rational(1, 2)));
  Document again = parse_source(print_document(d));
  EXPECT_EQ(again, d);
  EXPECT_EQ(print_document(again), print_document(d));
}

TEST(Document, RationalFunctionCoefficientsRoundTrip) {
  Document d = parse_source(
      "params a b\nalgebra t\ndim 2\nmap m from t to t\nimage 1 : (-b/(a*b+1))*e1 + (1/(a*b))*e2\nimage 2 : e2\n");
  EXPECT_EQ(parse_source(print_document(d)), d);
}
