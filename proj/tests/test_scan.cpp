#include "oracles.hpp"

#include <reversor/errors.hpp>
#include <reversor/scan.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace reversor;

namespace {

std::filesystem::path temp_file(const std::string &name) {
    const auto p = std::filesystem::temp_directory_path() / ("reversor_test_" + name);
    std::filesystem::remove(p);
    return p;
}

ScanConfig config(unsigned z_max, unsigned n_max) {
    ScanConfig c;
    c.z_max = z_max;
    c.n_max = n_max;
    return c;
}

std::set<oracle::Triple> at_exponent(const ScanReport &r, unsigned n) {
    std::set<oracle::Triple> out;
    for (const auto &e : r.equalities) {
        if (e.n == n) {
            out.emplace(e.y, e.x, e.z);
        }
    }
    return out;
}

} // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(config(2, 4).validate(), std::invalid_argument);
    CHECK_THROWS_AS(config(10, 1).validate(), std::invalid_argument);
    ScanConfig c = config(10, 3);
    c.chunk_size = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK(config(3, 2).effective_checks().size() == std::size(kAllChecks));
    for (Check ch : kAllChecks) {
        CHECK(parse_check(check_name(ch)) == ch);
    }
}

TEST_CASE("equalities up to 20") {
    const auto r = scan_equalities(config(20, 6));
    CHECK(r.complete);
    CHECK(r.triplets_checked == triple_count(20));
    const std::set<oracle::Triple> expected{{3, 4, 5}, {6, 8, 10}, {5, 12, 13}, {9, 12, 15}, {8, 15, 17}, {12, 16, 20}};
    CHECK(at_exponent(r, 2) == expected);
    CHECK(at_exponent(r, 2) == oracle::pythagorean(20));
    CHECK(at_exponent(r, 3).empty());
    CHECK(r.violations.empty());
    // every degenerate sum at n = 1
    std::size_t sums = 0;
    for (unsigned z = 2; z <= 20; ++z) {
        sums += z / 2;
    }
    CHECK(at_exponent(r, 1).size() == sums);
}

TEST_CASE("small scans") {
    const auto five = scan_equalities(config(5, 3));
    CHECK(at_exponent(five, 1).count({2, 3, 5}) == 1);
    CHECK(at_exponent(five, 2) == std::set<oracle::Triple>{{3, 4, 5}});
    CHECK(at_exponent(five, 3).empty());

    const auto three = scan_equalities(config(3, 3));
    CHECK(at_exponent(three, 1) == std::set<oracle::Triple>{{1, 1, 2}, {1, 2, 3}});
    CHECK(three.equalities.size() == 2);
}

TEST_CASE("reports do not depend on workers or chunk size") {
    ScanConfig c = config(30, 8);
    const std::string reference = report_json(scan_equalities(c));
    for (unsigned workers : {2u, 3u, 8u}) {
        for (unsigned chunk : {1u, 7u, 30u, 100u}) {
            c.chunk_size = chunk;
            RunOptions o;
            o.workers = workers;
            CHECK(report_json(scan_equalities(c, o)) == reference);
        }
    }

    ScanConfig s = config(25, 2);
    const std::string sweep_ref = report_json(sweep_properties(s));
    s.chunk_size = 3;
    RunOptions o;
    o.workers = 4;
    CHECK(report_json(sweep_properties(s, o)) == sweep_ref);
}

TEST_CASE("sweep with the full battery finds nothing") {
    ScanConfig c = config(30, 2);
    const auto r = sweep_properties(c);
    CHECK(r.violations.empty());
    CHECK(r.triplets_checked == triple_count(30));
    std::uint64_t tallied = 0;
    for (const auto &[k, v] : r.outcomes) {
        tallied += v;
    }
    CHECK(tallied == r.triplets_checked);
    CHECK(r.outcomes.at("no_reversion") == 30 * 31 / 2);
}

TEST_CASE("equilateral filter tallies no reversion") {
    ScanConfig c = config(10, 2);
    c.class_filter = std::vector{TripletTag::equilateral};
    const auto r = sweep_properties(c);
    CHECK(r.triplets_checked == 10);
    CHECK(r.outcomes.size() == 1);
    CHECK(r.outcomes.at("no_reversion") == 10);
}

TEST_CASE("acute gap histogram sits above one half") {
    ScanConfig c = config(60, 2);
    c.class_filter = std::vector{TripletTag::acute_scalene};
    c.checks = {Check::gap_bounds};
    const auto r = sweep_properties(c);
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < kGapBins; ++b) {
        if (b < kGapBins / 2) {
            CHECK(r.gap_histogram[b] == 0);
        }
        total += r.gap_histogram[b];
    }
    CHECK(total == r.triplets_checked);
    CHECK(r.violations.empty());
}

TEST_CASE("interrupt and resume give the same report") {
    ScanConfig c = config(40, 6);
    c.chunk_size = 4;
    const std::string reference = report_json(scan_equalities(c));

    const auto state = temp_file("resume.state");
    RunOptions first;
    first.state_path = state;
    first.stop_after_chunks = 5;
    const auto partial = scan_equalities(c, first);
    CHECK_FALSE(partial.complete);
    CHECK(partial.chunks_computed == 5);

    RunOptions second;
    second.workers = 3;
    const auto resumed = resume(state, second, c, ScanMode::equalities);
    CHECK(resumed.complete);
    CHECK(resumed.chunks_restored == 5);
    CHECK(resumed.chunks_computed == 5);
    CHECK(report_json(resumed) == reference);

    // a finished state replays without recomputation
    const auto replay = resume(state);
    CHECK(replay.chunks_computed == 0);
    CHECK(report_json(replay) == reference);

    // a torn trailing line is ignored and its chunk recomputed
    {
        std::ofstream out(state, std::ios::app);
        out << "chunk {\"id\": 3, \"trip";
    }
    CHECK(report_json(resume(state)) == reference);
    std::filesystem::remove(state);
}

TEST_CASE("resume rejects a different configuration") {
    ScanConfig c = config(20, 4);
    const auto state = temp_file("mismatch.state");
    RunOptions o;
    o.state_path = state;
    o.stop_after_chunks = 1;
    scan_equalities(c, o);

    ScanConfig other = c;
    other.z_max = 21;
    try {
        resume(state, {}, other, ScanMode::equalities);
        FAIL("expected ConfigMismatch");
    } catch (const DomainError &e) {
        CHECK(e.kind() == ErrorKind::config_mismatch);
    }
    CHECK_THROWS_AS(resume(state, {}, c, ScanMode::properties), DomainError);
    CHECK(config_hash(c, ScanMode::equalities) != config_hash(other, ScanMode::equalities));
    CHECK(config_hash(c, ScanMode::equalities) != config_hash(c, ScanMode::properties));
    std::filesystem::remove(state);
    CHECK_THROWS(resume(state));
}

TEST_CASE("csv rows") {
    ScanConfig c = config(6, 2);
    c.emit_rows = true;
    const auto r = sweep_properties(c);
    CHECK(r.rows.size() == triple_count(6));
    std::ostringstream os;
    write_csv(os, r);
    std::istringstream in(os.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "y,x,z,class,n,strict_flag,phi_num,phi_den,k_num,k_den,lambda_max_num,lambda_max_den,a,b,gap,s,checks");
    bool saw_456 = false;
    std::string line;
    while (std::getline(in, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 16);
        if (line.rfind("4,5,6,", 0) == 0) {
            saw_456 = true;
            CHECK(line.find(",AcuteScalene,3,1,41,36,189,41,82,63,") != std::string::npos);
        }
    }
    CHECK(saw_456);
}
