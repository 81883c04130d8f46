#include <useq/sweep.hpp>

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace useq;

namespace {

std::vector<rational> rats(std::initializer_list<const char*> vals) {
    std::vector<rational> out;
    for (const char* v : vals) out.push_back(rational::parse(v));
    return out;
}

std::string key_of(const identity_report& rep) {
    const auto& inst = *rep.instance;
    std::ostringstream os;
    os << inst.params.a << "|" << inst.params.b << "|" << inst.params.r << "|" << inst.c << "|"
       << inst.m << "|" << rep.lhs << "|" << rep.pass;
    return os.str();
}

}  // namespace

TEST(Sweep, LexicographicGridOrder) {
    sweep_config cfg;
    cfg.id = identity_id::master;
    cfg.a = rats({"1", "2"});
    cfg.b = rats({"1"});
    cfg.r = rats({"1"});
    cfg.c = rats({"2", "1/2"});
    cfg.m = {0, 1};
    std::vector<std::string> seen;
    const auto summary = sweep(cfg, [&](const identity_report& rep) {
        const auto& inst = *rep.instance;
        seen.push_back(inst.params.a.str() + "," + inst.c.str() + "," + std::to_string(inst.m));
    });
    EXPECT_EQ(summary.total, 8u);
    EXPECT_EQ(summary.passed, 8u);
    EXPECT_EQ(summary.failed, 0u);
    const std::vector<std::string> expected = {"1,2,0",   "1,2,1",   "1,1/2,0", "1,1/2,1",
                                               "2,2,0",   "2,2,1",   "2,1/2,0", "2,1/2,1"};
    EXPECT_EQ(seen, expected);
}

TEST(Sweep, SingleBaseCase) {
    sweep_config cfg;
    cfg.id = identity_id::sury;
    cfg.m = {0};
    std::vector<identity_report> reports;
    const auto summary = sweep(cfg, [&](const identity_report& rep) { reports.push_back(rep); });
    EXPECT_EQ(summary.total, 1u);
    EXPECT_EQ(summary.failed, 0u);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_TRUE(reports[0].pass);
    EXPECT_EQ(reports[0].lhs, rational(2));
}

TEST(Sweep, MarquesHundredAndOne) {
    sweep_config cfg;
    cfg.id = identity_id::marques;
    for (std::int64_t m = 0; m <= 100; ++m) cfg.m.push_back(m);
    std::size_t n = 0;
    const auto summary = sweep(cfg, [&](const identity_report& rep) {
        ++n;
        ASSERT_TRUE(rep.pass);
    });
    EXPECT_EQ(n, 101u);
    EXPECT_EQ(summary.total, 101u);
    EXPECT_EQ(summary.passed, 101u);
}

TEST(Sweep, MasterExampleGridAllPass) {
    sweep_config cfg;
    cfg.id = identity_id::master;
    for (int v = -2; v <= 2; ++v) cfg.a.emplace_back(v);
    for (int v = -2; v <= 2; ++v) cfg.b.emplace_back(v);
    for (int v = -1; v <= 3; ++v) cfg.r.emplace_back(v);
    cfg.c = rats({"2", "1/2", "-3"});
    for (std::int64_t m = 0; m <= 16; ++m) cfg.m.push_back(m);
    const auto summary = sweep(cfg, nullptr);
    EXPECT_EQ(summary.total, 5u * 5u * 5u * 3u * 17u);
    EXPECT_EQ(summary.failed, 0u);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
    sweep_config cfg;
    cfg.id = identity_id::gen_fib;
    cfg.a = rats({"1", "-2", "3/2"});
    cfg.b = rats({"1", "5"});
    cfg.c = rats({"2", "-1/3"});
    for (std::int64_t m = 0; m <= 9; ++m) cfg.m.push_back(m);
    auto run = [&](unsigned threads) {
        std::vector<std::string> keys;
        sweep(cfg, [&](const identity_report& rep) { keys.push_back(key_of(rep)); }, threads);
        return keys;
    };
    const auto seq = run(1);
    EXPECT_EQ(seq.size(), 3u * 2u * 2u * 10u);
    EXPECT_EQ(run(2), seq);
    EXPECT_EQ(run(4), seq);
    EXPECT_EQ(run(8), seq);
}

TEST(Sweep, EmptyGridRejected) {
    sweep_config cfg;
    cfg.id = identity_id::master;
    cfg.a = rats({"1"});
    cfg.b = rats({"1"});
    cfg.r = rats({"1"});
    cfg.c = rats({"2"});
    // no m values
    EXPECT_THROW(sweep_grid(cfg), std::invalid_argument);
    cfg.m = {0};
    cfg.c.clear();
    EXPECT_THROW(sweep_grid(cfg), std::invalid_argument);
}

TEST(Sweep, ConstraintViolationsRejectedBeforeEvaluation) {
    sweep_config cfg;
    cfg.id = identity_id::sury;
    cfg.a = rats({"2"});  // sury pins a = 1
    cfg.m = {0, 1};
    bool sunk = false;
    EXPECT_THROW(sweep(cfg, [&](const identity_report&) { sunk = true; }),
                 std::invalid_argument);
    EXPECT_FALSE(sunk);

    sweep_config zero_c;
    zero_c.id = identity_id::master;
    zero_c.a = rats({"1"});
    zero_c.b = rats({"1"});
    zero_c.r = rats({"1"});
    zero_c.c = rats({"2", "0"});
    zero_c.m = {0};
    EXPECT_THROW(sweep_grid(zero_c), std::invalid_argument);

    sweep_config neg_m;
    neg_m.id = identity_id::sury;
    neg_m.m = {0, -1};
    EXPECT_THROW(sweep_grid(neg_m), std::invalid_argument);
}

TEST(Sweep, PinnedAxisMayRepeatThePin) {
    sweep_config cfg;
    cfg.id = identity_id::sury;
    cfg.c = rats({"2"});
    cfg.m = {0, 1, 2};
    const auto summary = sweep(cfg, nullptr);
    EXPECT_EQ(summary.total, 3u);
    EXPECT_EQ(summary.failed, 0u);
}
