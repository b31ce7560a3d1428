#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "latinpipe/edit_tree.hpp"
#include "latinpipe/error.hpp"

using namespace latinpipe;
using lemma::EditTree;

TEST_SUITE_BEGIN("edit_tree");

// Encodings below were computed with an independent reference implementation
// of the longest-common-substring recursion and are pinned here byte-for-byte.
TEST_CASE("canonical encodings of known pairs") {
  struct Row {
    const char* form;
    const char* lemma;
    const char* encoding;
  };
  const Row rows[] = {
      {"amavit", "amo", "I0,4[-L4:avit1:o]"},
      {"dixit", "dico", "I0,3[-L3:xit2:co]"},
      {"que", "que", "I0,0[--]"},
      {"rosas", "rosa", "I0,1[-L1:s0:]"},
      {"cecidit", "cado", "I0,6[-I3,2[L3:eci1:aL2:it1:o]]"},
      {"itur", "eo", "L4:itur2:eo"},
      {"tulit", "fero", "L5:tulit4:fero"},
      {"uirum", "uir", "I0,2[-L2:um0:]"},
      {"pulchra", "pulcher", "I0,2[-I0,1[L0:1:eL1:a0:]]"},
      {"esse", "sum", "I1,2[L1:e0:L2:se2:um]"},
      {"fuit", "sum", "I1,2[L1:f1:sL2:it1:m]"},
      {"locutus", "loquor", "I0,5[-I1,3[L1:c1:qL3:tus2:or]]"},
      {"amaverunt", "amo", "I0,7[-L7:averunt1:o]"},
      // repeated substring: the leftmost occurrence anchors the tree
      {"abab", "ab", "I0,2[-L2:ab0:]"},
  };
  for (const auto& row : rows) {
    auto tree = EditTree::build(row.form, row.lemma);
    CHECK_MESSAGE(tree.encode() == row.encoding, row.form);
    auto applied = tree.apply(row.form);
    REQUIRE_MESSAGE(applied.has_value(), row.form);
    CHECK(*applied == row.lemma);
  }
}

TEST_CASE("trees generalize across forms sharing the pattern") {
  auto first_decl = EditTree::build("rosas", "rosa");
  CHECK(first_decl.apply("dominas") == std::string("domina"));
  CHECK(first_decl.apply("res") == std::string("re"));

  auto perfect = EditTree::build("amavit", "amo");
  CHECK(perfect.apply("laudavit") == std::string("laudo"));
  // the whole form may be consumed by the replaced suffix
  CHECK(perfect.apply("avit") == std::string("o"));
  // too short for the fixed suffix segment
  CHECK_FALSE(perfect.apply("vit").has_value());

  auto suppletive = EditTree::build("itur", "eo");
  CHECK(suppletive.apply("itur") == std::string("eo"));
  CHECK_FALSE(suppletive.apply("sequitur").has_value());
}

TEST_CASE("identity tree maps any form to itself") {
  auto tree = EditTree::build("que", "que");
  CHECK(tree.apply("que") == std::string("que"));
  CHECK(tree.apply("atque") == std::string("atque"));
  CHECK(tree.apply("") == std::string(""));
}

TEST_CASE("encode/decode round trip preserves structure and equality") {
  const char* pairs[][2] = {{"amavit", "amo"},       {"cecidit", "cado"},
                            {"itur", "eo"},          {"pulchra", "pulcher"},
                            {"locutus", "loquor"},   {"esse", "sum"}};
  for (const auto& pair : pairs) {
    auto tree = EditTree::build(pair[0], pair[1]);
    auto back = EditTree::decode(tree.encode());
    CHECK(back == tree);
    CHECK(back.encode() == tree.encode());
    CHECK(std::hash<EditTree>{}(back) == std::hash<EditTree>{}(tree));
    CHECK(back.apply(pair[0]) == std::string(pair[1]));
  }
  CHECK(EditTree::build("itur", "eo").is_leaf());
  CHECK_FALSE(EditTree::build("rosas", "rosa").is_leaf());
}

TEST_CASE("build and decode reject bad input") {
  CHECK_THROWS_AS(EditTree::build("", "rosa"), Error);
  CHECK_THROWS_AS(EditTree::build("rosas", ""), Error);
  CHECK_THROWS_AS(EditTree::decode(""), Error);
  CHECK_THROWS_AS(EditTree::decode("X1:a1:b"), Error);
  CHECK_THROWS_AS(EditTree::decode("I0,1[--"), Error);
  CHECK_THROWS_AS(EditTree::decode("L9:a1:b"), Error);
  CHECK_THROWS_AS(EditTree::decode("I0,0[--]junk"), Error);
}

TEST_CASE("exhaustive sweep over a generated paradigm grid") {
  // Latin-like: stems x (form ending -> lemma ending). Every constructed
  // pair must satisfy apply(build(f, l), f) == l, exactly.
  const std::vector<std::string> stems = {"am",   "laud", "mon",  "aud",     "reg",
                                          "duc",  "capi", "port", "uoc",     "quaesīv"};
  const std::vector<std::pair<std::string, std::string>> endings = {
      {"o", "o"},       {"as", "o"},      {"at", "o"},      {"amus", "o"},
      {"ant", "o"},     {"abat", "o"},    {"avit", "o"},    {"averunt", "o"},
      {"a", "a"},       {"ae", "a"},      {"am", "a"},      {"arum", "a"},
      {"us", "us"},     {"i", "us"},      {"um", "us"},     {"orum", "us"},
      {"is", "is"},     {"e", "is"},      {"ibus", "is"},   {"es", "es"}};
  size_t checked = 0;
  for (const auto& stem : stems)
    for (const auto& [fe, le] : endings) {
      std::string form = stem + fe;
      std::string lemma = stem + le;
      auto tree = EditTree::build(form, lemma);
      auto applied = tree.apply(form);
      REQUIRE_MESSAGE(applied.has_value(), form);
      REQUIRE_MESSAGE(*applied == lemma, form);
      // decode(encode) stays equivalent on the same input
      CHECK(EditTree::decode(tree.encode()).apply(form) == lemma);
      ++checked;
    }
  CHECK(checked == stems.size() * endings.size());
}

TEST_CASE("depth reflects recursive structure") {
  CHECK(EditTree::build("itur", "eo").depth() == 1);
  CHECK(EditTree::build("rosas", "rosa").depth() == 2);
  CHECK(EditTree::build("cecidit", "cado").depth() == 3);
}

TEST_SUITE_END();
