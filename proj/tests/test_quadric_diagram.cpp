#include <gtest/gtest.h>

#include "srk/srk.hpp"

using namespace srk;

namespace {

QuadricDiagram make(int m, std::vector<Bracket> br, std::vector<Quadric> qu) {
  return QuadricDiagram{m, static_cast<int>(br.size() + qu.size()), std::move(br), std::move(qu)};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Conditions, ExampleDiagramAdmissible) {
  auto rep = check_conditions(make(6, {{2, false}}, {{5, 0}}));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.x, (std::vector<int>{0}));
}

TEST(Conditions, A1AndA2Failures) {
  auto r1 = check_conditions(make(6, {{2, false}}, {{4, 2}}));
  EXPECT_FALSE(r1.a1.pass);
  EXPECT_FALSE(r1.pass());
  auto r2 = check_conditions(make(6, {{2, false}}, {{5, 1}}));
  EXPECT_FALSE(r2.a2.pass);
  EXPECT_TRUE(r2.a1.pass);
  EXPECT_EQ(r2.a2.witness, "n_1 - r_1 = 1");
}

TEST(Conditions, A3Failure) {
  auto rep = check_conditions(make(7, {{1, false}, {3, false}}, {{5, 2}}));
  EXPECT_FALSE(rep.a3.pass);
  EXPECT_EQ(rep.x, (std::vector<int>{1}));
}

TEST(Conditions, StructuralRejections) {
  EXPECT_EQ(code_of([] { check_conditions(make(6, {{4, false}}, {{5, 0}})); }), ErrorCode::StructurallyInvalid);
  EXPECT_EQ(code_of([] { check_conditions(make(6, {}, {{4, 0}, {5, 0}})); }), ErrorCode::StructurallyInvalid);
  EXPECT_EQ(code_of([] { check_conditions(make(6, {{2, true}}, {{5, 0}})); }), ErrorCode::StructurallyInvalid);
}

TEST(Digits, Examples) {
  EXPECT_EQ(digits(make(6, {{1, false}}, {{5, 1}})), (std::vector<int>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(digits(make(6, {{2, false}}, {{5, 0}})), (std::vector<int>(6, 0)));
  auto d = digits(make(13, {}, {{6, 1}, {5, 2}}));
  std::vector<int> want(13, 0);
  want[0] = 1;
  want[1] = 2;
  EXPECT_EQ(d, want);
}

TEST(Digits, BlocksAreContiguous) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 2 * k; m <= 9; ++m)
      for (const auto& D : enumerate_diagrams(k, m)) {
        auto dig = digits(D);
        int prev = 0;
        for (int j = 1; j <= D.q(); ++j) {
          const int r = D.quadrics[j - 1].r;
          for (int l = 1; l <= m; ++l) {
            bool in_block = l > prev && l <= r;
            EXPECT_EQ(dig[l - 1] == j, in_block);
          }
          prev = std::max(prev, r);
        }
      }
}

TEST(Grammar, ParseCompactExamples) {
  EXPECT_EQ(parse_diagram("00]000}0"), make(6, {{2, false}}, {{5, 0}}));
  EXPECT_EQ(parse_diagram("1]00]00}00"), make(7, {{1, false}, {3, false}}, {{5, 1}}));
  EXPECT_EQ(parse_diagram("00]0]'000"), make(6, {{2, false}, {3, true}}, {}));
}

TEST(Grammar, ParseVerbose) {
  auto D = parse_diagram("m=13 k=2 a=4 q=6:2");
  EXPECT_EQ(D, make(13, {{4, false}}, {{6, 2}}));
  EXPECT_EQ(print_diagram(D, DiagramForm::Verbose), "m=13 k=2 a=4 q=6:2");
  EXPECT_EQ(parse_diagram("m=6 k=2 a=2,3' q=-"), make(6, {{2, false}, {3, true}}, {}));
}

TEST(Grammar, Errors) {
  EXPECT_EQ(code_of([] { parse_diagram("]00"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_diagram("00x"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_diagram("0]'00000"); }), ErrorCode::MarkerMisplaced);
  // a primed bracket needs n_s = m/2
  EXPECT_EQ(code_of([] { parse_diagram("00]0]'00"); }), ErrorCode::MarkerMisplaced);
  EXPECT_EQ(code_of([] { parse_diagram("0100}0"); }), ErrorCode::InconsistentDigits);
  EXPECT_EQ(code_of([] { parse_diagram("m=6 k=3 a=2 q=5:0"); }), ErrorCode::SyntaxError);
  try {
    parse_diagram("00]0x");
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Grammar, RoundTripEveryStructuralDiagram) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 2 * k; m <= 10; ++m)
      for (const auto& D : enumerate_diagrams(k, m)) {
        EXPECT_EQ(parse_diagram(print_diagram(D)), D) << print_diagram(D);
        EXPECT_EQ(parse_diagram(print_diagram(D, DiagramForm::Verbose)), D);
      }
}

TEST(Grammar, CanonicalTextIsFixedPoint) {
  for (const auto& t : {"00]000}0", "1]00]00}00", "00]0]'000", "2000}0}"})
    EXPECT_EQ(print_diagram(parse_diagram(t)), t);
}

TEST(Grammar, VerboseWhenDigitsExceedNine) {
  QuadricDiagram D{40, 10, {}, {}};
  for (int j = 0; j < 10; ++j) D.quadrics.push_back({30 - j, j + 1});
  validate_diagram(D);
  EXPECT_FALSE(compact_representable(D));
  auto t = print_diagram(D);
  EXPECT_EQ(t.substr(0, 2), "m=");
  EXPECT_EQ(parse_diagram(t), D);
}

TEST(Conditions, SchubertDiagramsMatchIndexValidity) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 2 * k; m <= 9; ++m)
      for (const auto& D : enumerate_diagrams(k, m)) {
        if (!is_schubert_diagram(D)) continue;
        bool converts = true;
        try {
          diagram_to_og(D);
        } catch (const Error&) {
          converts = false;
        }
        EXPECT_EQ(check_conditions(D).pass(), converts) << print_diagram(D, DiagramForm::Verbose);
      }
}
