#include "coble/enumeration.hpp"

#include <algorithm>
#include <functional>

#include "coble/error.hpp"
#include "coble/linalg.hpp"
#include "coble/parallel.hpp"

namespace coble {

namespace {

bool class_less(const divisor_class& a, const divisor_class& b) {
    if (a.d != b.d) return a.d < b.d;
    return std::lexicographical_compare(a.m.begin(), a.m.end(), b.m.begin(),
                                        b.m.end());
}

std::string json_str_array(const std::vector<Int>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += "\"" + int_str(v[i]) + "\"";
    }
    return out + "]";
}

// All multiplicity tails with sum of squares qr and sum sr, appended in
// lexicographic order.  The three cuts (sign of budget, Cauchy-Schwarz,
// parity of m^2 - m) keep the tree small.
void fill_multiplicities(std::vector<Int>& m, size_t idx, Int qr, Int sr,
                         const Int& d, std::vector<divisor_class>& out) {
    size_t r = m.size() - idx;
    if (sr * sr > Int(static_cast<long>(r)) * qr) return;
    if ((qr - sr) % 2 != 0) return;
    if (r == 0) {
        if (qr == 0) out.push_back(divisor_class{d, m});
        return;
    }
    if (r == 1) {
        if (sr * sr == qr) {
            m[idx] = sr;
            out.push_back(divisor_class{d, m});
        }
        return;
    }
    Int lim = isqrt_floor(qr);
    for (Int mv = -lim; mv <= lim; ++mv) {
        m[idx] = mv;
        fill_multiplicities(m, idx + 1, qr - mv * mv, sr - mv, d, out);
    }
    m[idx] = 0;
}

std::vector<divisor_class> enumerate_box(const class_query& q) {
    std::vector<Int> degrees;
    for (Int d = -q.degree_bound; d <= q.degree_bound; ++d) degrees.push_back(d);
    auto chunk = [&](size_t begin, size_t end) {
        std::vector<divisor_class> local;
        std::vector<Int> m(static_cast<size_t>(q.n_points), Int(0));
        for (size_t i = begin; i < end; ++i) {
            const Int& d = degrees[i];
            fill_multiplicities(m, 0, d * d - q.self_intersection,
                                q.k_pairing + 3 * d, d, local);
        }
        return local;
    };
    return parallel_map_ranges<divisor_class>(degrees.size(), chunk);
}

} // namespace

class_query preset_query(const std::string& preset, int n_points) {
    require(n_points >= 1 && n_points <= kMaxRank, "BadInput",
            "number of points out of range");
    class_query q;
    q.n_points = n_points;
    q.degree_bound = 6;
    if (preset == "minus-one") {
        require(n_points <= 10, "PreconditionFailed",
                "the minus-one preset is limited to at most ten points");
        q.self_intersection = -1;
        q.k_pairing = -1;
    } else if (preset == "root") {
        require(n_points <= 10, "PreconditionFailed",
                "the root preset is limited to at most ten points");
        q.self_intersection = -2;
        q.k_pairing = 0;
    } else if (preset == "isotropic") {
        q.self_intersection = 0;
        q.k_pairing = 0;
    } else {
        fail("BadInput", "unknown preset '" + preset + "'");
    }
    return q;
}

std::vector<divisor_class> enumerate_classes(const class_query& q,
                                             bool verify_bound) {
    require(q.n_points >= 1 && q.n_points <= kMaxRank, "BadInput",
            "number of points out of range");
    require(q.degree_bound >= 1, "BadInput", "degree bound must be positive");
    std::vector<divisor_class> found = enumerate_box(q);
    if (verify_bound) {
        class_query wider = q;
        wider.degree_bound = q.degree_bound + 1;
        std::vector<divisor_class> check = enumerate_box(wider);
        require(check.size() == found.size(), "BoundTooSmall",
                "raising the degree bound from " + int_str(q.degree_bound) +
                    " to " + int_str(wider.degree_bound) + " grows the solution set from " +
                    std::to_string(found.size()) + " to " + std::to_string(check.size()));
    }
    return found;
}

namespace {

void validate_exceptional_set(const blowup_surface& s,
                              const std::vector<divisor_class>& given,
                              size_t max_len) {
    require(given.size() <= max_len, "PreconditionFailed",
            "too many classes given");
    divisor_class k = canonical_class(s);
    for (size_t i = 0; i < given.size(); ++i) {
        require(given[i].n_points() == s.n_points, "RankMismatch",
                "class " + std::to_string(i + 1) + " lives on the wrong surface");
        require(intersect(s, given[i], given[i]) == -1, "PreconditionFailed",
                "class " + std::to_string(i + 1) + " does not square to -1");
        require(intersect(s, given[i], k) == -1, "PreconditionFailed",
                "class " + std::to_string(i + 1) + " does not pair -1 with K");
        for (size_t j = 0; j < i; ++j)
            require(intersect(s, given[i], given[j]) == 0, "PreconditionFailed",
                    "classes " + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        " are not orthogonal");
    }
}

// Constraints every completing class x (in lattice coordinates) satisfies:
// x . C_i = 0 for the given classes and x . k = -1.
integer_solve_result completion_system(const std::vector<divisor_class>& given) {
    size_t rows = given.size() + 1;
    imat a(rows, 11);
    std::vector<Int> b(rows, Int(0));
    auto fill_row = [&a](size_t r, const lattice_vector& g) {
        a(r, 0) = g[0];
        for (size_t j = 1; j < 11; ++j) a(r, j) = -g[j];
    };
    for (size_t i = 0; i < given.size(); ++i)
        fill_row(i, class_to_lattice(given[i]));
    fill_row(given.size(), k_vector(10));
    b[given.size()] = -1;
    return solve_integer(a, b);
}

[[noreturn]] void fail_integrality(const integer_solve_result& sol) {
    Int g = 0;
    for (const Int& c : sol.witness_lhs) g = gcd(g, c);
    std::string payload = "{\"kind\":\"integrality\",\"combination\":" +
                          json_str_array(sol.witness_lhs) + ",\"rhs\":\"" +
                          int_str(sol.witness_rhs) + "\",\"gcd\":\"" + int_str(g) +
                          "\"}";
    fail_with_payload(
        "NonExtendable",
        "every completing class x would satisfy a relation c.x = " +
            int_str(sol.witness_rhs) + " whose coefficient gcd " + int_str(g) +
            " does not divide the right-hand side",
        payload);
}

// With nine classes given the solution set of the linear system is a line
// x0 + t h; completions are the integer roots of (x0 + t h)^2 = -1.
std::vector<std::vector<divisor_class>> complete_nine(
    const std::vector<divisor_class>& given, const integer_solve_result& sol) {
    require(sol.homogeneous.size() == 1, "InternalError",
            "nine independent classes must leave a one-parameter family");
    lattice_vector x0{sol.particular};
    lattice_vector h{sol.homogeneous[0]};
    Int c2 = pair(h, h);
    Int c1 = 2 * pair(x0, h);
    Int c0 = pair(x0, x0) + 1;

    std::vector<Int> roots;
    if (c2 == 0) {
        require(c1 != 0 || c0 != 0, "BoundExceeded",
                "the completion family is degenerate");
        if (c1 != 0 && c0 % c1 == 0) roots.push_back(-c0 / c1);
    } else {
        Int disc = c1 * c1 - 4 * c2 * c0;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            Int root = isqrt_floor(disc);
            for (const Int& num : {Int(-c1 + root), Int(-c1 - root)}) {
                if (num % (2 * c2) == 0) roots.push_back(num / (2 * c2));
            }
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        }
    }
    if (roots.empty()) {
        std::string payload =
            "{\"kind\":\"quadratic\",\"poly\":" +
            json_str_array({c0, c1, c2}) + "}";
        fail_with_payload("NonExtendable",
                          "completions are integer roots of (" + int_str(c2) +
                              ")t^2 + (" + int_str(c1) + ")t + (" + int_str(c0) +
                              ") = 0, which has none",
                          payload);
    }
    std::vector<std::vector<divisor_class>> out;
    for (const Int& t : roots) {
        std::vector<divisor_class> completion = given;
        completion.push_back(lattice_to_class(x0 + h * t));
        out.push_back(std::move(completion));
    }
    return out;
}

Int max_degree(const std::vector<divisor_class>& v) {
    Int m = 0;
    for (const auto& c : v) m = std::max(m, Int(abs(c.d)));
    return m;
}

struct frame_search {
    const std::vector<divisor_class>& pool;
    const blowup_surface& surface;
    size_t need;
    size_t node_budget;
    size_t nodes = 0;
    std::vector<size_t> chosen;
    std::vector<std::vector<divisor_class>> solutions;
    size_t max_solutions;
    bool stop_at_first;

    // pool is lex-sorted and indices are chosen increasingly, so solutions
    // come out in lexicographic order.
    bool run(size_t from) {
        if (chosen.size() == need) {
            std::vector<divisor_class> found;
            for (size_t i : chosen) found.push_back(pool[i]);
            solutions.push_back(std::move(found));
            return stop_at_first || solutions.size() > max_solutions;
        }
        for (size_t i = from; i + (need - chosen.size()) <= pool.size(); ++i) {
            if (++nodes > node_budget)
                fail("BoundExceeded", "frame search exceeded its node budget");
            bool ok = true;
            for (size_t j : chosen)
                if (intersect(surface, pool[i], pool[j]) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (run(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::vector<std::vector<divisor_class>> extend_exceptional(
    const std::vector<divisor_class>& given, const extension_options& opts) {
    blowup_surface s{10};
    validate_exceptional_set(s, given, 9);
    require(opts.degree_cap >= 0, "BadInput", "degree cap must be non-negative");

    integer_solve_result sol = completion_system(given);
    if (!sol.feasible) fail_integrality(sol);

    if (given.size() == 9) {
        auto out = complete_nine(given, sol);
        if (!opts.all_solutions) out.resize(1);
        return out;
    }

    class_query q = preset_query("minus-one", 10);
    q.degree_bound = std::max<Int>(opts.degree_cap, 1);
    std::vector<divisor_class> pool;
    for (auto& c : enumerate_classes(q)) {
        bool ortho = true;
        for (const auto& g : given)
            if (intersect(s, c, g) != 0) {
                ortho = false;
                break;
            }
        if (ortho) pool.push_back(std::move(c));
    }
    size_t need = 10 - given.size();

    if (opts.all_solutions) {
        frame_search search{pool,          s,     need, opts.node_budget, 0, {}, {},
                            opts.max_solutions, false};
        search.run(0);
        require(search.solutions.size() <= opts.max_solutions, "BoundExceeded",
                "more than " + std::to_string(opts.max_solutions) +
                    " completions exist within the degree cap");
        require(!search.solutions.empty(), "BoundExceeded",
                "no completion within the degree cap and no obstruction found");
        std::stable_sort(search.solutions.begin(), search.solutions.end(),
                         [](const auto& a, const auto& b) {
                             Int da = max_degree(a), db = max_degree(b);
                             if (da != db) return da < db;
                             return std::lexicographical_compare(
                                 a.begin(), a.end(), b.begin(), b.end(), class_less);
                         });
        std::vector<std::vector<divisor_class>> out;
        for (auto& found : search.solutions) {
            std::vector<divisor_class> completion = given;
            for (auto& c : found) completion.push_back(std::move(c));
            out.push_back(std::move(completion));
        }
        return out;
    }

    for (Int cap = 0; cap <= opts.degree_cap; ++cap) {
        std::vector<divisor_class> sub;
        for (const auto& c : pool)
            if (abs(c.d) <= cap) sub.push_back(c);
        if (sub.size() < need) continue;
        frame_search search{sub, s, need, opts.node_budget, 0, {}, {}, 1, true};
        search.run(0);
        if (!search.solutions.empty()) {
            std::vector<divisor_class> completion = given;
            for (auto& c : search.solutions.front())
                completion.push_back(std::move(c));
            return {std::move(completion)};
        }
    }
    fail("BoundExceeded",
         "no completion within the degree cap and no obstruction found");
}

divisor_class elliptic_from_exceptional(const blowup_surface& s,
                                        const divisor_class& e) {
    require(s.n_points == 10, "PreconditionFailed",
            "elliptic shifts are specific to ten-point blow-ups");
    divisor_class k = canonical_class(s);
    require(e.n_points() == s.n_points, "RankMismatch",
            "class lives on the wrong surface");
    require(intersect(s, e, e) == -1 && intersect(s, e, k) == -1,
            "NotExceptionalClass",
            "input must square to -1 and pair -1 with K");
    return e - k;
}

void validate_isotropic_sequence(const blowup_surface& s,
                                 const std::vector<divisor_class>& seq) {
    divisor_class k = canonical_class(s);
    for (size_t i = 0; i < seq.size(); ++i) {
        require(seq[i].n_points() == s.n_points, "RankMismatch",
                "class " + std::to_string(i + 1) + " lives on the wrong surface");
        require(intersect(s, seq[i], seq[i]) == 0, "BadInput",
                "class " + std::to_string(i + 1) + " is not isotropic");
        require(intersect(s, seq[i], k) == 0, "BadInput",
                "class " + std::to_string(i + 1) + " is not orthogonal to K");
        for (size_t j = 0; j < i; ++j)
            require(intersect(s, seq[i], seq[j]) == 1, "BadInput",
                    "classes " + std::to_string(j + 1) + "," +
                        std::to_string(i + 1) + " must pair to 1");
    }
}

std::vector<divisor_class> extend_isotropic(const blowup_surface& s,
                                            const std::vector<divisor_class>& seq,
                                            const extension_options& opts) {
    require(s.n_points == 10, "PreconditionFailed",
            "isotropic sequences are specific to ten-point blow-ups");
    require(seq.size() <= 8, "PreconditionFailed",
            "only sequences of length at most eight are extendable");
    validate_isotropic_sequence(s, seq);
    divisor_class k = canonical_class(s);
    std::vector<divisor_class> exceptional;
    for (const auto& f : seq) exceptional.push_back(f + k);
    extension_options first = opts;
    first.all_solutions = false;
    std::vector<divisor_class> completion =
        extend_exceptional(exceptional, first).front();
    std::vector<divisor_class> out;
    for (const auto& e : completion) out.push_back(e - k);
    validate_isotropic_sequence(s, out);
    return out;
}

divisor_class fano_polarization(const blowup_surface& s,
                                const std::vector<divisor_class>& seq) {
    require(s.n_points == 10, "PreconditionFailed",
            "Fano polarizations are specific to ten-point blow-ups");
    require(seq.size() == 10, "PreconditionFailed",
            "a full length-ten isotropic sequence is needed");
    validate_isotropic_sequence(s, seq);
    divisor_class sum{0, std::vector<Int>(10, Int(0))};
    for (const auto& f : seq) sum = sum + f;
    require(sum.d % 3 == 0, "NonIntegralFano",
            "the sequence sum is not divisible by three");
    divisor_class h{sum.d / 3, std::vector<Int>(10)};
    for (size_t i = 0; i < 10; ++i) {
        require(sum.m[i] % 3 == 0, "NonIntegralFano",
                "the sequence sum is not divisible by three");
        h.m[i] = sum.m[i] / 3;
    }
    require(intersect(s, h, h) == 10, "InternalError",
            "a Fano polarization must have square ten");
    return h;
}

namespace {

Int phi_over_box(const blowup_surface& s, const divisor_class& h, const Int& box,
                 bool& found) {
    class_query q;
    q.n_points = s.n_points;
    q.self_intersection = 0;
    q.k_pairing = 0;
    q.degree_bound = box;
    Int best = 0;
    found = false;
    for (const auto& f : enumerate_classes(q)) {
        Int g = abs(f.d);
        for (const Int& mi : f.m) g = gcd(g, mi);
        if (g != 1) continue;
        Int v = intersect(s, h, f);
        if (v <= 0) continue;
        if (!found || v < best) {
            best = v;
            found = true;
        }
    }
    return best;
}

} // namespace

Int phi_invariant(const blowup_surface& s, const divisor_class& h,
                  const Int& box) {
    require(s.n_points == 10, "PreconditionFailed",
            "the phi invariant is specific to ten-point blow-ups");
    require(h.n_points() == s.n_points, "RankMismatch",
            "class lives on the wrong surface");
    require(box >= 1, "BadInput", "box size must be positive");
    require(intersect(s, h, h) > 0, "PreconditionFailed",
            "the class must have positive square");
    require(intersect(s, h, line_class(s)) > 0, "PreconditionFailed",
            "the class must lie in the positive cone");
    bool found_a = false, found_b = false;
    Int a = phi_over_box(s, h, box, found_a);
    Int b = phi_over_box(s, h, box * 2, found_b);
    require(found_a && found_b && a == b, "UnstableBound",
            "doubling the search box changes the minimum");
    return a;
}

} // namespace coble
