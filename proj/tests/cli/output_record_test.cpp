#include <gtest/gtest.h>

#include "output_record.hpp"
#include "skolemgen/engine.hpp"
#include "skolemgen/sts.hpp"
#include "skolemgen/text.hpp"

using namespace skolemgen;
using namespace skolemgen::cli;

namespace {

// Re-parsing a payload and rendering it again gives the same record.
template <class T>
void expect_round_trip(const T& value) {
  const OutputRecord record = make_record(value);
  const Payload parsed = parse_payload(record);
  ASSERT_TRUE(std::holds_alternative<T>(parsed)) << record.payload;
  EXPECT_EQ(std::get<T>(parsed), value);
  const OutputRecord again = make_record(std::get<T>(parsed));
  EXPECT_EQ(again.payload, record.payload);
  EXPECT_EQ(again.order, record.order);
  EXPECT_EQ(again.kind, record.kind);
}

}  // namespace

TEST(OutputRecord, RoundTripsEveryKind) {
  for (int n : {1, 4, 5})
    for (const auto& w : enumerate_skolem(n)) expect_round_trip(w);
  expect_round_trip(state_from_text("*7,4,1,1,*3,4,*1"));
  expect_round_trip(OpenState{});
  expect_round_trip(LevelCount{14, 619672});
  expect_round_trip(sts::develop(sts::base_blocks(SkolemSequence({3, 4, 2, 3, 2, 4, 1, 1})), 4));
}

TEST(OutputRecord, KindsAndOrders) {
  EXPECT_EQ(to_string(make_record(SkolemSequence({1, 1})).kind), "skolem");
  EXPECT_EQ(to_string(make_record(OpenState{}).kind), "open-state");
  EXPECT_EQ(make_record(LevelCount{5, 20}).payload, "n=5 count=20");
  EXPECT_EQ(make_record(sts::develop(std::vector<sts::Triple>{{0, 1, 3}}, 1)).order, 1);
}

TEST(OutputRecord, MalformedPayloads) {
  EXPECT_THROW(parse_payload({OutputRecord::Kind::count, "n=5 cnt=20", 5}), std::invalid_argument);
  EXPECT_THROW(parse_payload({OutputRecord::Kind::count, "n=x count=20", 5}), std::invalid_argument);
  EXPECT_THROW(parse_payload({OutputRecord::Kind::skolem, "1,1,2,2", 2}), std::invalid_argument);
}

TEST(Ndjson, Format) {
  const SkolemSequence w({3, 4, 2, 3, 2, 4, 1, 1});
  EXPECT_EQ(to_ndjson(w), R"({"order":4,"values":[3,4,2,3,2,4,1,1]})");
  EXPECT_EQ(skolem_from_ndjson(to_ndjson(w)), w);
  EXPECT_THROW(skolem_from_ndjson(R"({"order":3,"values":[3,4,2,3,2,4,1,1]})"), std::invalid_argument);
  EXPECT_THROW(skolem_from_ndjson(R"({"values":[1,1]})"), std::invalid_argument);
  EXPECT_THROW(skolem_from_ndjson("not json"), std::invalid_argument);
}
