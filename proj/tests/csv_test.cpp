#include <gtest/gtest.h>

#include <random>
#include <string>

#include "outrank/csv.hpp"

namespace outrank::csv {
namespace {

const std::string kHeader =
    "player_id,position,games,Min,Pts,P2,P2A,P3,P3A,FT,FTA,FG,FGA,ORB,DRB,AST,STL,BLK,BLKR,"
    "TOV,PF,PFR,PM\n";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_boxscore_csv(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::InternalInvariant;
}

TEST(ParseBoxScore, HeaderOnly) {
  EXPECT_TRUE(parse_boxscore_csv(kHeader).empty());
}

TEST(ParseBoxScore, ColumnOrderIsFree) {
  const std::string text =
      "PM,player_id,games,position,Min,Pts,P2,P2A,P3,P3A,FT,FTA,FG,FGA,ORB,DRB,AST,STL,BLK,"
      "BLKR,TOV,PF,PFR,extra\n"
      "-4,x,12,SG,240,90,30,60,8,20,6,8,38,80,5,20,15,7,1,2,9,20,11,ignored\n";
  const auto lines = parse_boxscore_csv(text);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].player_id, "x");
  EXPECT_EQ(lines[0].position, basketball::Position::ShootingGuard);
  EXPECT_EQ(lines[0].games, 12);
  EXPECT_EQ(lines[0].PM, -4);
  EXPECT_EQ(lines[0].PFR, 11);
}

TEST(ParseBoxScore, InvariantViolationNamesConstraint) {
  const std::string text = kHeader + "x,PG,12,240,90,30,20,8,20,6,8,38,40,5,20,15,7,1,2,9,20,11,3\n";
  try {
    parse_boxscore_csv(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
    EXPECT_NE(std::string(e.what()).find("P2 <= P2A"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(ParseBoxScore, MissingColumnIsSchemaError) {
  std::string header = kHeader;
  header.replace(header.find(",BLKR"), 5, "");
  try {
    parse_boxscore_csv(header);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Schema);
    EXPECT_NE(std::string(e.what()).find("'BLKR'"), std::string::npos);
  }
}

TEST(ParseBoxScore, NonNumericCellReportsRowAndColumn) {
  const std::string text = kHeader + "x,PG,12,240,ninety,30,60,8,20,6,8,38,80,5,20,15,7,1,2,9,20,11,3\n";
  try {
    parse_boxscore_csv(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("line 2, column 'Pts'"), std::string::npos) << e.what();
  }
}

TEST(ParseBoxScore, OtherErrors) {
  const std::string row = "x,PG,12,240,90,30,60,8,20,6,8,38,80,5,20,15,7,1,2,9,20,11,3\n";
  EXPECT_EQ(kind_of(kHeader + row + row), ErrorKind::Duplicate);
  EXPECT_EQ(kind_of(kHeader + "x,QB,12,240,90,30,60,8,20,6,8,38,80,5,20,15,7,1,2,9,20,11,3\n"),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of(kHeader + "x,PG,12.5,240,90,30,60,8,20,6,8,38,80,5,20,15,7,1,2,9,20,11,3\n"),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of(kHeader + "x,PG,12\n"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(""), ErrorKind::Schema);
}

TEST(ParseBoxScore, QuotedNamesAndCrlf) {
  const std::string text =
      kHeader + "\"Rodriguez, S.\",PG,12,240,90,30,60,8,20,6,8,38,80,5,20,15,7,1,2,9,20,11,3\r\n";
  const auto lines = parse_boxscore_csv(text);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].player_id, "Rodriguez, S.");
}

TEST(RoundTrip, ThreeRowFixtureIsByteIdentical) {
  const std::string text =
      kHeader +
      "a,PG,30,750.5,340,80,150,40,110,60,75,120,260,15,60,150,35,3,8,55,60,70,45\n"
      "\"b, jr\",C,28,560,255,70,140,25,80,40,55,95,220,12,45,90,20,2,10,40,50,45,-10.25\n"
      "c,F,11,121.1,33,9,20,2,7,9,12,11,27,4,17,6,3,2,1,5,14,8,0\n";
  const auto lines = parse_boxscore_csv(text);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(write_boxscore_csv(lines), text);
}

TEST(RoundTrip, ParseWriteParseIsFixedPoint) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0, 50);
  std::uniform_int_distribution<int> games(0, 40);
  for (int t = 0; t < 50; ++t) {
    std::vector<basketball::BoxScoreLine> lines;
    for (int i = 0; i < 1 + t % 7; ++i) {
      basketball::BoxScoreLine l;
      l.player_id = "p" + std::to_string(i) + (i % 3 == 0 ? ", x" : "");
      l.position = basketball::kPositions[i % 5];
      l.games = games(rng);
      l.Min = u(rng) * 20;
      l.P2 = u(rng); l.P2A = l.P2 + u(rng);
      l.P3 = u(rng); l.P3A = l.P3 + u(rng);
      l.FT = u(rng); l.FTA = l.FT + u(rng);
      l.FG = l.P2 + l.P3; l.FGA = l.P2A + l.P3A;
      l.Pts = 2 * l.P2 + 3 * l.P3 + l.FT;
      l.ORB = u(rng); l.DRB = u(rng); l.AST = u(rng); l.STL = u(rng); l.BLK = u(rng);
      l.BLKR = u(rng); l.TOV = u(rng); l.PF = u(rng); l.PFR = u(rng); l.PM = u(rng) - 25;
      lines.push_back(l);
    }
    const std::string once = write_boxscore_csv(lines);
    const auto parsed = parse_boxscore_csv(once);
    EXPECT_EQ(parsed, lines);
    EXPECT_EQ(write_boxscore_csv(parsed), once);
  }
}

TEST(LoadFixture, SyntheticDataset) {
  const auto lines = load_boxscore_csv(std::string(OUTRANK_FIXTURES) + "/five_players.csv");
  EXPECT_EQ(lines.size(), 8u);
  EXPECT_EQ(lines[2].player_id, "Costa, J.");
}

}  // namespace
}  // namespace outrank::csv
