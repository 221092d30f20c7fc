#include "support.hpp"

#include "posetpi/asphericity.hpp"
#include "posetpi/coloring.hpp"
#include "posetpi/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace posetpi;
using namespace posetpi::test;

namespace {

GroupPresentation worked_presentation() { return parse_presentation("a,b,c,d,e | bbcABdba, Cdebe"); }

std::size_t count_height(const Poset& p, int h) { return p.elements_of_height(h).size(); }

struct ExpectedEdge {
  const char* source;
  const char* target;
  const char* color;
};

void check_witnesses(const AsphericityCertificate& c) {
  for (const auto& comp : c.per_component) {
    if (!comp.witness) continue;
    const auto cert = has_infinite_order_in_abelianization(c.group, comp.witness->weight);
    CHECK(cert.infinite);
    CHECK(cert.image == comp.witness->image);
    CHECK(comp.free_rank > 0);
  }
}

}  // namespace

TEST_CASE("subposet_Y") {
  const Poset t2 = subposet_Y(fixture("t2_7vertex"));
  CHECK(count_height(t2, 0) == 21);
  CHECK(count_height(t2, 1) == 14);
  CHECK(components(t2).size() == 1);

  const Poset tri = subposet_Y(face_poset({{{"a", "b", "c"}}}));
  CHECK(tri.size() == 1);
  CHECK(tri.id(0) == "a,b,c");

  const Poset s2 = subposet_Y(fixture("s2"));
  CHECK(count_height(s2, 0) == 6);
  CHECK(count_height(s2, 1) == 4);
}

TEST_CASE("main5_check on surfaces") {
  const AsphericityCertificate t2 = main5_check(fixture("t2_7vertex"));
  CHECK(t2.verdict == Verdict::Aspherical);
  REQUIRE(t2.per_component.size() == 1);
  REQUIRE(t2.per_component[0].witness.has_value());
  CHECK(AbelianInvariants(t2.group).group() == HomologyGroup{2, {}});
  check_witnesses(t2);

  const AsphericityCertificate g2 = main5_check(fixture("genus2"));
  CHECK(g2.verdict == Verdict::Aspherical);
  CHECK(AbelianInvariants(g2.group).free_rank() == 4);
  check_witnesses(g2);

  const AsphericityCertificate s2 = main5_check(fixture("s2"));
  CHECK(s2.verdict == Verdict::Inconclusive);
  CHECK(s2.group_order == 1);
  for (const auto& c : s2.per_component) CHECK_FALSE(c.witness.has_value());

  CHECK(main5_check(fixture("rp2_6vertex")).verdict == Verdict::Inconclusive);
  CHECK(main5_check(fixture("rp2_worked")).verdict == Verdict::Inconclusive);
}

TEST_CASE("main5_check preconditions") {
  const AsphericityCertificate solid = main5_check(face_poset({{{"a", "b", "c", "d"}}}));
  CHECK(solid.verdict == Verdict::Inconclusive);
  CHECK(solid.failed_precondition.has_value());

  const Poset two = build_poset({"a", "b"}, {});
  CHECK(main5_check(two).failed_precondition.has_value());
}

TEST_CASE("presentation digraph of the worked example") {
  const GroupPresentation p = worked_presentation();
  const PresentationDigraph d = build_presentation_digraph(p);
  CHECK(d.vertices == std::vector<std::size_t>{0, 2, 3, 4});
  CHECK(degrees_ok(d));

  const ExpectedEdge expected[] = {
      {"c", "a", "1"},         {"a", "d", "a^-1 b^-1 d"}, {"d", "a", "b a"}, {"a", "c", "b^2 c"},
      {"c", "d", "c^-1 d"},    {"d", "e", "e"},           {"e", "e", "b e"}, {"e", "c", "1"},
  };
  REQUIRE(d.edges.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CAPTURE(i);
    CHECK(p.generators[d.edges[i].source] == expected[i].source);
    CHECK(p.generators[d.edges[i].target] == expected[i].target);
    CHECK(format_word(d.edges[i].color, p.generators) == expected[i].color);
  }
}

TEST_CASE("main6_check on the worked example") {
  const GroupPresentation p = worked_presentation();
  const AsphericityCertificate automatic = main6_check(p);
  CHECK(automatic.verdict == Verdict::Aspherical);
  CHECK_FALSE(automatic.failed_precondition.has_value());
  REQUIRE(automatic.per_component.size() == 1);
  CHECK(automatic.per_component[0].members == std::vector<std::string>{"a", "c", "d", "e"});
  check_witnesses(automatic);

  AsphericityOptions opt;
  opt.candidates.push_back(parse_digraph_cycle("E4 E1^-1 E3"));
  const AsphericityCertificate c = main6_check(p, opt);
  CHECK(c.verdict == Verdict::Aspherical);
  const auto& w = c.per_component[0].witness;
  REQUIRE(w.has_value());
  CHECK(w->steps == std::vector<std::string>{"E4 E1^-1 E3"});
  CHECK(format_word(w->weight, p.generators) == "c^-1 b a b^2 c");
  CHECK(w->image.exponents == std::vector<std::int64_t>{1, 3, 0, 0, 0});
  check_witnesses(c);

  // the relator written as "CdebE" has the same digraph shape
  const GroupPresentation q = parse_presentation("a,b,c,d,e | bbcABdba, CdebE");
  const AsphericityCertificate cq = main6_check(q, opt);
  CHECK(cq.verdict == Verdict::Aspherical);
  CHECK(format_word(cq.per_component[0].witness->weight, q.generators) == "c^-1 b a b^2 c");
}

TEST_CASE("main6_check on small presentations") {
  const AsphericityCertificate z2 = main6_check(parse_presentation("a | aa"));
  CHECK(build_presentation_digraph(parse_presentation("a | aa")).vertices == std::vector<std::size_t>{0});
  CHECK(z2.verdict == Verdict::Inconclusive);
  CHECK(z2.group_order == 2);

  const GroupPresentation klein = parse_presentation("a,b | abaB");
  CHECK(build_presentation_digraph(klein).vertices == std::vector<std::size_t>{0, 1});
  const AsphericityCertificate k = main6_check(klein);
  CHECK(k.verdict == Verdict::Aspherical);
  check_witnesses(k);

  // a relator without vertex letters
  const AsphericityCertificate pre = main6_check(parse_presentation("a,b | aaa, abAB"));
  CHECK(pre.failed_precondition.has_value());
  CHECK(pre.verdict == Verdict::Inconclusive);

  // free group: nothing to check
  CHECK(main6_check(parse_presentation("a,b")).verdict == Verdict::Aspherical);
}

TEST_CASE("digraph cycles") {
  const auto steps = parse_digraph_cycle("E4 E1^-1 E3");
  REQUIRE(steps.size() == 3);
  CHECK(steps[1] == GraphStep{1, false});
  CHECK(format_digraph_cycle(steps) == "E4 E1^-1 E3");
  CHECK_THROWS_AS(parse_digraph_cycle("E4 X1"), Error);

  const PresentationDigraph d = build_presentation_digraph(worked_presentation());
  CHECK(cycle_weight(d, steps) == parse_word("Cbabbc", worked_presentation().generators));
  // reversal inverts, rotation conjugates
  const auto rev = parse_digraph_cycle("E3^-1 E1 E4^-1");
  CHECK(cycle_weight(d, rev) == invert(cycle_weight(d, steps)));

  AsphericityOptions opt;
  opt.candidates.push_back(parse_digraph_cycle("E4 E3"));
  try {
    main6_check(worked_presentation(), opt);
    FAIL("expected InvalidCycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCycle);
  }
  opt.candidates = {parse_digraph_cycle("E9")};
  CHECK_THROWS_AS(main6_check(worked_presentation(), opt), Error);
}

TEST_CASE("presentation_complex_report") {
  const auto circle = presentation_complex_report(parse_presentation("a | "));
  CHECK(circle.kp[0] == 1);
  CHECK(circle.kp[1] == 1);
  CHECK(circle.kp[2] == 0);
  CHECK(circle.euler_characteristic == 0);
  CHECK(presentation_complex_report(parse_presentation("a | aa")).euler_characteristic == 1);
  const auto p = presentation_complex_report(worked_presentation());
  CHECK(p.euler_characteristic == -2);
  CHECK(p.kp[1] == 5);
  CHECK(p.kp[2] == 2);
  CHECK(static_cast<std::int64_t>(p.k[0]) - static_cast<std::int64_t>(p.k[1]) + static_cast<std::int64_t>(p.k[2]) ==
        -2);
}

TEST_CASE("presentation complex poset realizes the presentation") {
  for (const char* text : {"a | aa", "a,b | abaB", "a,b | aa, bb, abab", "a,b,c,d,e | bbcABdba, Cdebe"}) {
    CAPTURE(text);
    const GroupPresentation g = parse_presentation(text);
    const Poset k = presentation_complex_poset(g);
    CHECK(validate_cw_face_poset(k).ok());
    const auto report = presentation_complex_report(g);
    CHECK(k.euler_characteristic() == report.euler_characteristic);
    CHECK(k.elements_of_height(2).size() == report.k[2]);
    // same abelianization as the presentation
    const FundamentalGroup pi1 = fundamental_group(k, spanning_tree(k));
    CHECK(AbelianInvariants(pi1.presentation()).group() == AbelianInvariants(g).group());
  }
  CHECK_THROWS_AS(presentation_complex_poset(GroupPresentation{{"a"}, {Word{}}}), Error);
}

TEST_CASE("an aspherical presentation gives an aspherical subdivided complex") {
  for (const char* text : {"a,b | abaB", "a,b,c,d,e | bbcABdba, Cdebe", "a,b | abAB"}) {
    CAPTURE(text);
    const GroupPresentation g = parse_presentation(text);
    REQUIRE(main6_check(g).verdict == Verdict::Aspherical);
    CHECK(main5_check(presentation_complex_poset(g)).verdict == Verdict::Aspherical);
  }
}
