#include "doctest.h"

#include <map>
#include <set>

#include "egl/registry.hpp"
#include "egl/star_lifts.hpp"
#include "egl/verify.hpp"

using namespace egl;

namespace {

std::shared_ptr<const GameSpec> star_spec(int n) {
    return std::make_shared<const GameSpec>(GameKind::Star,
                                            HostGraph::complete(n));
}

int degree_of(const HostGraph& host, const EdgeSet& edges, int v) {
    return (edges & host.incident(v)).count();
}

}  // namespace

TEST_CASE("star lift +1 from n=3 never loses Star(4)") {
    auto spec = star_spec(4);
    StrategyContext ctx;
    ctx.spec = spec;
    ctx.base_n = 3;
    auto lift = make_strategy("star-lift+1", ctx);

    auto result = adversary_exhaust(
        *spec, *lift, PlayerId::P2,
        [](const Position& pos, const std::vector<Move>& line,
           const Strategy& s) {
            if (winner(pos) != PlayerId::P2) return false;
            const HostGraph& host = pos.spec().host;

            // Our first move shares no endpoint with the opponent's first.
            auto [a, b] = host.endpoints(line[0].edge);
            auto [c, d] = host.endpoints(line[1].edge);
            if (a == c || a == d || b == c || b == d) return false;

            // The claimed degree at v comes out exactly 1 + ceil((n-1)/2).
            auto& lifted = dynamic_cast<const StarLiftPlus1&>(s);
            return degree_of(host, pos.claimed1(), lifted.center()) ==
                   1 + (3 - 1 + 1) / 2;
        });
    CHECK(result.certified());
    CHECK(result.lines == 48);  // 6 * 4 * 2 red lines on K4
}

TEST_CASE("star lift +2 from n=3 never loses Star(5)") {
    auto spec = star_spec(5);
    StrategyContext ctx;
    ctx.spec = spec;
    ctx.base_n = 3;
    auto lift = make_strategy("star-lift+2", ctx);

    auto result = adversary_exhaust(
        *spec, *lift, PlayerId::P2,
        [](const Position& pos, const std::vector<Move>&, const Strategy& s) {
            if (winner(pos) != PlayerId::P2) return false;
            // The pairing forces the terminal degree identity
            // deg_red(v1) = deg_blue(v2).
            auto& lifted = dynamic_cast<const StarLiftPlus2&>(s);
            const HostGraph& host = pos.spec().host;
            return degree_of(host, pos.claimed1(), lifted.v1()) ==
                   degree_of(host, pos.claimed2(), lifted.v2());
        });
    CHECK(result.certified());
    CHECK(result.lines == 3840);  // 10 * 8 * 6 * 4 * 2 red lines on K5
}

TEST_CASE("star lift +2 maps the five states onto S3 and S4") {
    auto spec = star_spec(5);
    const HostGraph& host = spec->host;
    std::map<char, StarLiftPlus2::Kind> expected{
        {'A', StarLiftPlus2::Kind::S4}, {'B', StarLiftPlus2::Kind::S4},
        {'C', StarLiftPlus2::Kind::S3}, {'D', StarLiftPlus2::Kind::S4},
        {'E', StarLiftPlus2::Kind::S3}};
    std::set<char> seen;

    for (int r1 = 0; r1 < host.edge_count(); ++r1) {
        StarLiftPlus2 proto(spec, 3, std::make_unique<LowestEdgeStrategy>());
        Position pos = Position::initial(*spec);
        proto.notify(pos, Move{r1});
        pos = pos.apply(Move{r1});
        Move blue1 = proto.choose(pos);
        proto.notify(pos, blue1);
        pos = pos.apply(blue1);
        for (Move r2 : legal_moves(pos)) {
            auto branch = proto.clone();
            branch->notify(pos, r2);
            Position p2 = pos.apply(r2);
            Move completing = branch->choose(p2);
            branch->notify(p2, completing);

            auto& lifted = dynamic_cast<const StarLiftPlus2&>(*branch);
            REQUIRE(expected.count(lifted.state_tag()) == 1);
            CHECK(lifted.state_kind() == expected.at(lifted.state_tag()));
            seen.insert(lifted.state_tag());

            // The two red edges meet {v1, v2} as the S3/S4 shapes demand.
            Position p3 = p2.apply(completing);
            if (lifted.state_kind() == StarLiftPlus2::Kind::S4) {
                CHECK((p3.claimed1() & host.incident(lifted.v1())).count() ==
                      2);
            } else {
                CHECK((p3.claimed1() & host.incident(lifted.v1())).count() ==
                      1);
                CHECK((p3.claimed1() & host.incident(lifted.v2())).count() ==
                      1);
            }
        }
    }
    CHECK(seen == std::set<char>{'A', 'B', 'C', 'D', 'E'});
}

TEST_CASE("star lifts reject hosts of the wrong shape") {
    CHECK_THROWS_AS(
        StarLiftPlus1(star_spec(5), 3, std::make_unique<LowestEdgeStrategy>()),
        std::domain_error);
    CHECK_THROWS_AS(
        StarLiftPlus2(star_spec(4), 3, std::make_unique<LowestEdgeStrategy>()),
        std::domain_error);
    CHECK_THROWS_AS(
        StarLiftPlus1(star_spec(3), 2, std::make_unique<LowestEdgeStrategy>()),
        std::domain_error);
}

TEST_CASE("star lift registry rejects a missing premise") {
    // Star(4) is a second-player win, so no base policy exists for it.
    auto spec = star_spec(5);
    StrategyContext ctx;
    ctx.spec = spec;
    ctx.base_n = 4;
    CHECK_THROWS_AS(make_strategy("star-lift+1", ctx), UsageError);
}
