#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "coble/enumeration.hpp"
#include "coble/error.hpp"
#include "coble/picard.hpp"

using coble::blowup_surface;
using coble::divisor_class;
using coble::Int;

namespace {

// Plain-integer exhaustive search, written without any of the library's
// pruning so the two implementations can disagree only if one is wrong.
struct box_oracle {
    int n;
    int64_t self, k_pair, bound;
    std::vector<std::vector<int64_t>> found;

    void recurse(std::vector<int64_t>& m, int idx, int64_t sq_left, int64_t sum_left) {
        if (idx == n) {
            if (sq_left == 0 && sum_left == 0) found.push_back(m);
            return;
        }
        int slots = n - idx - 1;
        for (int64_t v = -12; v <= 12; ++v) {
            int64_t sq = sq_left - v * v;
            if (sq < 0) continue;
            int64_t sum = sum_left - v;
            // the remaining slots cannot reach |sum| above slots * 12
            if (sum > 12LL * slots || sum < -12LL * slots) continue;
            m[static_cast<size_t>(idx)] = v;
            recurse(m, idx + 1, sq, sum);
        }
        m[static_cast<size_t>(idx)] = 0;
    }

    size_t count() {
        found.clear();
        for (int64_t d = -bound; d <= bound; ++d) {
            int64_t sq = d * d - self;
            int64_t sum = 3 * d + k_pair;
            if (sq < 0) continue;
            std::vector<int64_t> m(static_cast<size_t>(n), 0);
            recurse(m, 0, sq, sum);
        }
        return found.size();
    }
};

divisor_class make_class(int d, std::vector<int> m) {
    divisor_class c;
    c.d = Int(d);
    for (int v : m) c.m.push_back(Int(v));
    return c;
}

std::vector<divisor_class> points(const blowup_surface& s, int upto) {
    std::vector<divisor_class> out;
    for (int i = 1; i <= upto; ++i) out.push_back(coble::point_class(s, i));
    return out;
}

const blowup_surface ten{10};

} // namespace

TEST_CASE("minus-one class counts match the independent box search") {
    const size_t expected[] = {1, 3, 6, 10, 16, 27, 56, 240};
    for (int n = 1; n <= 8; ++n) {
        box_oracle oracle{n, -1, -1, 6, {}};
        size_t direct = oracle.count();
        CHECK(direct == expected[n - 1]);

        auto classes = coble::enumerate_classes(coble::preset_query("minus-one", n));
        CHECK(classes.size() == expected[n - 1]);
        CHECK(classes.size() == direct);
    }
}

TEST_CASE("every enumerated class satisfies the defining equations") {
    for (const char* preset : {"minus-one", "root"}) {
        auto q = coble::preset_query(preset, 8);
        blowup_surface s{8};
        divisor_class k = coble::canonical_class(s);
        auto classes = coble::enumerate_classes(q);
        for (const auto& c : classes) {
            CHECK(coble::intersect(s, c, c) == q.self_intersection);
            CHECK(coble::intersect(s, c, k) == q.k_pairing);
        }
        CHECK(std::is_sorted(classes.begin(), classes.end(),
                             [](const divisor_class& a, const divisor_class& b) {
                                 if (a.d != b.d) return a.d < b.d;
                                 return a.m < b.m;
                             }));
    }
}

TEST_CASE("multiplicities stay at most three among the 240 classes") {
    auto classes = coble::enumerate_classes(coble::preset_query("minus-one", 8));
    REQUIRE(classes.size() == 240);
    Int top(0);
    for (const auto& c : classes)
        for (const auto& m : c.m) top = std::max(top, m);
    CHECK(top == 3);
}

TEST_CASE("root counts match the box search at small and full rank") {
    box_oracle small{3, -2, 0, 6, {}};
    CHECK(small.count() == 8);
    CHECK(coble::enumerate_classes(coble::preset_query("root", 3)).size() == 8);

    box_oracle full{8, -2, 0, 6, {}};
    CHECK(full.count() == 240);
    CHECK(coble::enumerate_classes(coble::preset_query("root", 8)).size() == 240);
}

TEST_CASE("the eight rank-three roots are the expected ones") {
    auto classes = coble::enumerate_classes(coble::preset_query("root", 3));
    std::vector<divisor_class> expected = {
        make_class(-1, {-1, -1, -1}), make_class(0, {-1, 0, 1}),
        make_class(0, {-1, 1, 0}),    make_class(0, {0, -1, 1}),
        make_class(0, {0, 1, -1}),    make_class(0, {1, -1, 0}),
        make_class(0, {1, 0, -1}),    make_class(1, {1, 1, 1})};
    CHECK(classes == expected);
}

TEST_CASE("bound verification raises exactly when the box clips solutions") {
    auto q = coble::preset_query("minus-one", 8);
    CHECK_NOTHROW(coble::enumerate_classes(q, true));
    q.degree_bound = 5;
    CHECK_THROWS_WITH_AS(coble::enumerate_classes(q, true),
                         doctest::Contains("BoundTooSmall"), coble::error);
}

TEST_CASE("preset names are checked") {
    CHECK_THROWS_AS(coble::preset_query("exceptional", 5), coble::error);
    CHECK_THROWS_AS(coble::preset_query("minus-one", 11), coble::error);
    CHECK_NOTHROW(coble::preset_query("isotropic", 10));
}

TEST_CASE("the empty input extends to the standard frame") {
    auto completions = coble::extend_exceptional({});
    REQUIRE(completions.size() == 1);
    REQUIRE(completions[0].size() == 10);
    for (int i = 0; i < 10; ++i)
        CHECK(completions[0][static_cast<size_t>(i)] == coble::point_class(ten, i + 1));
}

TEST_CASE("seven points complete to a frame; both minimal completions appear") {
    auto first = coble::extend_exceptional(points(ten, 7));
    REQUIRE(first.size() == 1);
    const auto& frame = first[0];
    REQUIRE(frame.size() == 10);
    divisor_class k = coble::canonical_class(ten);
    for (size_t i = 0; i < 10; ++i) {
        CHECK(coble::intersect(ten, frame[i], frame[i]) == -1);
        CHECK(coble::intersect(ten, frame[i], k) == -1);
        for (size_t j = i + 1; j < 10; ++j)
            CHECK(coble::intersect(ten, frame[i], frame[j]) == 0);
    }
    for (size_t i = 7; i < 10; ++i)
        CHECK(frame[i] == coble::point_class(ten, static_cast<int>(i) + 1));

    coble::extension_options opts;
    opts.all_solutions = true;
    opts.degree_cap = 1;
    auto all = coble::extend_exceptional(points(ten, 7), opts);
    REQUIRE(all.size() == 2);

    std::vector<divisor_class> lines = {
        make_class(1, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1}),
        make_class(1, {0, 0, 0, 0, 0, 0, 0, 1, 0, 1}),
        make_class(1, {0, 0, 0, 0, 0, 0, 0, 1, 1, 0})};
    std::vector<divisor_class> last_points = {coble::point_class(ten, 8),
                                              coble::point_class(ten, 9),
                                              coble::point_class(ten, 10)};
    bool saw_points = false, saw_lines = false;
    for (const auto& completion : all) {
        std::vector<divisor_class> tail(completion.begin() + 7, completion.end());
        std::sort(tail.begin(), tail.end(), [](const divisor_class& a, const divisor_class& b) {
            if (a.d != b.d) return a.d < b.d;
            return a.m < b.m;
        });
        if (tail == last_points) saw_points = true;
        if (tail == lines) saw_lines = true;
    }
    CHECK(saw_points);
    CHECK(saw_lines);
}

TEST_CASE("the nine-class quadric configuration is certified non-extendable") {
    std::vector<divisor_class> given = points(ten, 8);
    given.push_back(make_class(1, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1}));
    try {
        coble::extend_exceptional(given);
        FAIL("expected NonExtendable");
    } catch (const coble::error& e) {
        CHECK(e.code() == "NonExtendable");
        CHECK(e.payload().find("\"kind\"") != std::string::npos);
        CHECK(e.payload().find("integrality") != std::string::npos);
        CHECK(e.payload().find("\"gcd\"") != std::string::npos);
    }
}

TEST_CASE("extension rejects malformed inputs") {
    std::vector<divisor_class> bad = {coble::line_class(ten)};
    CHECK_THROWS_WITH_AS(coble::extend_exceptional(bad),
                         doctest::Contains("PreconditionFailed"), coble::error);

    std::vector<divisor_class> eleven = points(ten, 10);
    eleven.push_back(coble::point_class(ten, 1));
    CHECK_THROWS_AS(coble::extend_exceptional(eleven), coble::error);
}

TEST_CASE("elliptic classes shift pairings by one") {
    divisor_class e1 = coble::point_class(ten, 1);
    divisor_class cal = coble::elliptic_from_exceptional(ten, e1);
    CHECK(cal == make_class(3, {0, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(coble::intersect(ten, cal, cal) == 0);
    CHECK(coble::intersect(ten, cal, coble::canonical_class(ten)) == 0);

    divisor_class cal2 = coble::elliptic_from_exceptional(ten, coble::point_class(ten, 2));
    CHECK(coble::intersect(ten, cal, cal2) == 1);

    CHECK_THROWS_AS(coble::elliptic_from_exceptional(ten, coble::line_class(ten)),
                    coble::error);
}

TEST_CASE("isotropic sequences extend through the exceptional search") {
    std::vector<divisor_class> seq;
    for (int i = 1; i <= 7; ++i)
        seq.push_back(coble::elliptic_from_exceptional(ten, coble::point_class(ten, i)));
    auto full = coble::extend_isotropic(ten, seq);
    REQUIRE(full.size() == 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) {
            Int expected = i == j ? Int(0) : Int(1);
            CHECK(coble::intersect(ten, full[i], full[j]) == expected);
        }

    CHECK_THROWS_AS(coble::extend_isotropic(ten, full), coble::error);
    CHECK_NOTHROW(coble::validate_isotropic_sequence(ten, full));

    auto standard = coble::extend_isotropic(ten, {});
    REQUIRE(standard.size() == 10);
    for (int i = 0; i < 10; ++i)
        CHECK(standard[static_cast<size_t>(i)] ==
              coble::elliptic_from_exceptional(ten, coble::point_class(ten, i + 1)));
}

TEST_CASE("the standard sequence polarizes to the degree-ten class") {
    auto seq = coble::extend_isotropic(ten, {});
    divisor_class h = coble::fano_polarization(ten, seq);
    CHECK(h == make_class(10, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}));
    CHECK(coble::intersect(ten, h, h) == 10);
    for (const auto& f : seq) CHECK(coble::intersect(ten, h, f) == 3);

    seq.pop_back();
    CHECK_THROWS_AS(coble::fano_polarization(ten, seq), coble::error);
}

TEST_CASE("the phi invariant of the polarization is three and box-stable") {
    auto seq = coble::extend_isotropic(ten, {});
    divisor_class h = coble::fano_polarization(ten, seq);
    CHECK(coble::phi_invariant(ten, h) == 3);
    CHECK(coble::phi_invariant(ten, h, Int(8)) == 3);

    divisor_class pair_sum = seq[0] + seq[1];
    CHECK(coble::phi_invariant(ten, pair_sum) == 1);

    CHECK_THROWS_AS(coble::phi_invariant(ten, seq[0]), coble::error);
}

TEST_CASE("phi of polarizations respects the square-root bound") {
    auto seq = coble::extend_isotropic(ten, {});
    // (sample, expected phi): the Fano class, a sum of two isotropics, the
    // quintic model class and the Bordiga class
    std::vector<std::pair<divisor_class, Int>> samples = {
        {coble::fano_polarization(ten, seq), 3},
        {seq[0] + seq[1], 1},
        {make_class(6, {2, 2, 2, 2, 2, 2, 2, 1, 1, 1}), 2},
        {make_class(4, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 3}};
    for (const auto& [h, expected] : samples) {
        Int h2 = coble::intersect(ten, h, h);
        Int phi = coble::phi_invariant(ten, h);
        CHECK(phi == expected);
        Int root = coble::isqrt_floor(h2);
        Int ceil_root = root * root == h2 ? root : root + 1;
        CHECK(phi <= ceil_root);
    }
}
