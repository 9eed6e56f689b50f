// Copyright 2026 The HLP Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>
#include <string>

#include "doctest.h"
#include "hlp/error.hpp"
#include "hlp/io.hpp"

namespace hlp {
namespace {

VertexIndex Abc() { return VertexIndex({"a", "b", "c"}); }

TEST_CASE("parse two hyperlinks") {
  std::istringstream in("# comment\na\tb\n\nb\tc\n");
  const auto parsed = ParseIncidence(in, Abc(), "h.tsv");
  CHECK(parsed.matrix == IncidenceMatrix(3, {{0, 1}, {1, 2}}));
  CHECK(parsed.warnings.empty());
}

TEST_CASE("repeated vertices are dropped with a warning") {
  std::istringstream in("a\ta\tb\n");
  const auto parsed = ParseIncidence(in, Abc(), "h.tsv");
  CHECK(parsed.matrix == IncidenceMatrix(3, {{0, 1}}));
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0].find("h.tsv:1") != std::string::npos);
}

TEST_CASE("unknown vertex names the vertex and the line") {
  std::istringstream in("a\tb\na\tz\n");
  try {
    ParseIncidence(in, Abc(), "h.tsv");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("'z'") != std::string::npos);
    CHECK(what.find("h.tsv:2") != std::string::npos);
  }
}

TEST_CASE("a line with only separators is rejected") {
  std::istringstream in("a\tb\n\t \t\n");
  CHECK_THROWS_AS(ParseIncidence(in, Abc(), "h.tsv"), ParseError);
}

TEST_CASE("vertex file") {
  std::istringstream in("# names\nx\n\n y \nz\r\n");
  const auto v = ReadVertices(in, "v.txt");
  CHECK(v.names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(v.Find("y") == Index{1});
  CHECK_FALSE(v.Find("w").has_value());
  std::istringstream dup("x\nx\n");
  CHECK_THROWS_AS(ReadVertices(dup, "v.txt"), ParseError);
}

TEST_CASE("incidence round trip") {
  const VertexIndex v({"p", "q", "r", "s", "t"});
  const IncidenceMatrix m(5, {{4, 0}, {1, 2, 3}, {0, 1}, {2}});
  std::ostringstream out;
  WriteIncidence(out, m, v);
  std::istringstream in(out.str());
  CHECK(ParseIncidence(in, v, "rt").matrix == m);

  std::ostringstream names;
  WriteVertices(names, v);
  std::istringstream names_in(names.str());
  CHECK(ReadVertices(names_in, "rt").names() == v.names());
}

TEST_CASE("comment header prefixes every line") {
  std::ostringstream out;
  WriteCommentHeader(out, "seed=1\nreg=0.1\n");
  CHECK(out.str() == "# seed=1\n# reg=0.1\n");
}

TEST_CASE("ranking output") {
  const VertexIndex v({"a", "b", "c"});
  const IncidenceMatrix pool(3, {{0, 1}, {1, 2}});
  std::ostringstream out;
  WriteRanking(out, pool, std::vector<double>{0.25, 0.5}, v);
  CHECK(out.str() ==
        "rank\tindex\tscore\thyperlink\n1\t1\t0.5\tb c\n2\t0\t0.25\ta b\n");
}

}  // namespace
}  // namespace hlp
