#include "latmw/io.hpp"
#include "latmw/macwilliams.hpp"

#include <gtest/gtest.h>

using namespace latmw;
using io::parse;

TEST(Io, GroupAndCode) {
    const auto G = io::group_from_json(parse(R"({"orders":[2,4]})"));
    EXPECT_EQ(G.order(), 8u);
    EXPECT_EQ(io::group_from_json(io::to_json(G)).orders(), G.orders());
    const auto C = io::code_from_json(parse(R"({"group":{"orders":[4]},"generators":[[2]]})"));
    EXPECT_EQ(C.elements(), (std::vector<std::uint64_t>{0, 2}));
    EXPECT_THROW(io::code_from_json(parse(R"({"group":{"orders":[4]},"generators":[[4]]})")), InvalidArgument);
    EXPECT_THROW(io::group_from_json(parse(R"({"orders":[2],"name":"x"})")), InvalidArgument);
    EXPECT_THROW(io::group_from_json(parse(R"({"orders":"2"})")), InvalidArgument);
}

TEST(Io, UnknownKeysRejected) {
    EXPECT_THROW(io::support_from_json(parse(R"({"kind":"rank","params":{"q":2,"k":1,"m":1,"n":3}})")), InvalidArgument);
    EXPECT_THROW(io::support_from_json(parse(R"({"kind":"lee4","params":{"x":1}})")), InvalidArgument);
    EXPECT_THROW(io::lattice_from_json(parse(R"({"elements":1,"leq":[],"top":0})")), InvalidArgument);
    EXPECT_THROW(io::constraint_from_json(parse(R"({"kind":"none","block":[1,1]})")), InvalidArgument);
    EXPECT_THROW(io::distribution_from_json(parse(R"({"counts":[1],"total":1})")), InvalidArgument);
    EXPECT_THROW(io::support_from_json(parse(R"({"kind":"torus"})")), InvalidArgument);
    EXPECT_THROW(parse("{not json"), InvalidArgument);
}

TEST(Io, BuiltinDescriptors) {
    const auto h = io::support_from_json(parse(R"({"kind":"hamming","params":{"group":{"orders":[3]},"n":2}})"));
    EXPECT_EQ(h.group().order(), 9u);
    EXPECT_EQ(krawtchouk_table(h), krawtchouk_table(hamming_support(FiniteAbelianGroup({3}), 2)));
    const auto c = io::support_from_json(parse(R"({"kind":"chain","params":{"group":{"orders":[8]}}})"));
    EXPECT_EQ(c.rank(), 3);
    const auto v = io::support_from_json(
        parse(R"({"kind":"chain","params":{"group":{"orders":[2,2]},"chain":[[[1,0]],[[1,0],[0,1]]]}})"));
    EXPECT_EQ(v.rank(), 2);
    EXPECT_EQ(io::support_from_json(parse(R"({"kind":"homogeneous","params":{"p":3,"n":1}})")).gamma(),
              (std::vector<Integer>{1, 3, 9}));
}

TEST(Io, CustomSupportMatchesBuiltin) {
    // Hamming weight on Z_2^2 written out by hand: the boolean lattice of [2].
    const auto s = io::support_from_json(parse(
        R"({"kind":"custom","params":{"group":{"orders":[2,2]},)"
        R"("lattice":{"elements":4,"leq":[[0,1],[0,2],[1,3],[2,3]]}},"sigma":[0,2,1,3]})"));
    const auto h = hamming_support(FiniteAbelianGroup({2}), 2);
    EXPECT_EQ(krawtchouk_table(s), krawtchouk_table(h));
    EXPECT_THROW(io::support_from_json(parse(
                     R"({"kind":"custom","params":{"group":{"orders":[2]},"lattice":{"elements":2,"leq":[[0,1]]}},"sigma":[1,1]})")),
                 AxiomViolation);
}

TEST(Io, Distributions) {
    const auto W = io::distribution_from_json(parse(R"({"counts":[1,"123456789012345678901234567890",0]})"));
    EXPECT_EQ(W.counts[1], Integer("123456789012345678901234567890"));
    EXPECT_EQ(io::to_json(W).dump(), R"({"counts":["1","123456789012345678901234567890","0"]})");
    EXPECT_THROW(io::distribution_from_json(parse(R"({"counts":[1.5]})")), InvalidArgument);
    EXPECT_THROW(io::distribution_from_json(parse(R"({"counts":["12x"]})")), InvalidArgument);
}

TEST(Io, CountRequests) {
    auto r = io::count_request_from_json(
        parse(R"({"q":3,"k":2,"m":3,"rank":1,"constraint":{"kind":"sum_zero","indices":[[1,1],[2,3]]}})"));
    EXPECT_EQ(r.constraint.indices, (std::vector<std::pair<int, int>>{{0, 0}, {1, 2}}));
    r = io::count_request_from_json(parse(R"({"q":2,"k":2,"m":2,"rank":2,"constraint":{"kind":"zero_diagonal","diagonal":[1,2]}})"));
    EXPECT_EQ(r.constraint.diagonal, (std::vector<int>{0, 1}));
    EXPECT_EQ(closed_form_count(r.params, r.constraint, r.rank), 1);
    r = io::count_request_from_json(parse(R"({"q":2,"k":1,"m":2,"rank":1})"));
    EXPECT_EQ(r.constraint.kind, ConstraintSpec::Kind::none);
    EXPECT_THROW(io::count_request_from_json(parse(R"({"q":2,"k":2,"m":2,"rank":1,"constraint":{"kind":"zero_diagonal","diagonal":[0]}})")),
                 InvalidArgument);
    EXPECT_THROW(io::count_request_from_json(parse(R"({"q":2,"k":2,"m":2,"rank":1,"constraint":{"kind":"kernel","matrix":[[1,2],[0,0]]}})")),
                 InvalidArgument);
    EXPECT_EQ(io::count_json(Integer(42)).dump(), R"({"count":"42"})");
}
