#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <rsopt/moo.hpp>
#include <rsopt/rng.hpp>

using namespace rsopt;

namespace {

Eigen::VectorXd v2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

// Independent O(n^2) dominance scan used as the oracle for pareto_filter.
std::vector<int> brute_force_front(const std::vector<Eigen::VectorXd>& objs) {
    std::vector<int> out;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < objs.size() && !dominated; ++j) {
            if (i == j) continue;
            bool all_le = true, any_lt = false;
            for (Eigen::Index k = 0; k < objs[i].size(); ++k) {
                if (objs[j][k] > objs[i][k]) all_le = false;
                if (objs[j][k] < objs[i][k]) any_lt = true;
            }
            dominated = all_le && any_lt;
        }
        if (!dominated) out.push_back(static_cast<int>(i));
    }
    return out;
}

Box unit_box(int d) {
    return Box(Eigen::VectorXd::Zero(d), Eigen::VectorXd::Ones(d));
}

} // namespace

TEST_CASE("dominance is a strict partial order") {
    CHECK(dominates(v2(1, 2), v2(2, 2)));
    CHECK_FALSE(dominates(v2(1, 2), v2(1, 2))); // irreflexive
    CHECK_FALSE(dominates(v2(1, 2), v2(2, 1))); // incomparable
    Rng rng(4);
    for (int rep = 0; rep < 300; ++rep) {
        const auto a = v2(rng.uniform(), rng.uniform());
        const auto b = v2(rng.uniform(), rng.uniform());
        const auto c = v2(rng.uniform(), rng.uniform());
        CHECK_FALSE(dominates(a, a));
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
    }
}

TEST_CASE("non_dominated_sort on the three tabulated examples") {
    const auto fronts = non_dominated_sort({v2(1, 2), v2(2, 1), v2(2, 2)});
    REQUIRE(fronts.size() == 2);
    CHECK(fronts[0] == std::vector<int>{0, 1});
    CHECK(fronts[1] == std::vector<int>{2});

    const auto equal = non_dominated_sort({v2(3, 3), v2(3, 3), v2(3, 3)});
    REQUIRE(equal.size() == 1);
    CHECK(equal[0].size() == 3);

    const auto chain = non_dominated_sort({v2(1, 1), v2(2, 2), v2(3, 3)});
    REQUIRE(chain.size() == 3);
    for (std::size_t f = 0; f < 3; ++f) CHECK(chain[f] == std::vector<int>{static_cast<int>(f)});

    CHECK(non_dominated_sort({}).empty());
}

TEST_CASE("every point appears exactly once across fronts") {
    Rng rng(9);
    std::vector<Eigen::VectorXd> objs;
    for (int i = 0; i < 120; ++i) objs.push_back(v2(rng.uniform(), rng.uniform()));
    const auto fronts = non_dominated_sort(objs);
    std::vector<int> seen(objs.size(), 0);
    for (const auto& f : fronts) {
        for (int i : f) seen[static_cast<std::size_t>(i)]++;
    }
    for (int c : seen) CHECK(c == 1);
    CHECK(fronts[0] == brute_force_front(objs));
}

TEST_CASE("crowding distance: boundaries infinite, even middle point = 2") {
    const auto two = crowding_distance({v2(0, 1), v2(1, 0)});
    CHECK(std::isinf(two[0]));
    CHECK(std::isinf(two[1]));

    // Evenly spaced collinear points: the middle point's cuboid is half of
    // each normalized range per objective -> 0.5 + 0.5 ... wait, the full
    // span per side is (next - prev)/range = 1 in each objective => sum 2.
    const auto three = crowding_distance({v2(0, 2), v2(1, 1), v2(2, 0)});
    CHECK(std::isinf(three[0]));
    CHECK(std::isinf(three[2]));
    CHECK(three[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("zero-range objective contributes nothing to crowding") {
    const auto cd = crowding_distance({v2(0, 5), v2(1, 5), v2(2, 5)});
    CHECK(std::isinf(cd[0]));
    CHECK(std::isinf(cd[2]));
    CHECK(cd[1] == doctest::Approx(1.0).epsilon(1e-12)); // only the first objective counts
}

TEST_CASE("pareto_filter equals the brute-force oracle and is idempotent") {
    Rng rng(23);
    std::vector<Eigen::VectorXd> objs;
    for (int i = 0; i < 200; ++i) objs.push_back(v2(rng.uniform(), rng.uniform()));
    const auto filtered = pareto_filter(objs);
    CHECK(filtered == brute_force_front(objs));
    std::vector<Eigen::VectorXd> front_only;
    for (int i : filtered) front_only.push_back(objs[static_cast<std::size_t>(i)]);
    const auto again = pareto_filter(front_only);
    CHECK(again.size() == front_only.size());

    const auto single = pareto_filter({v2(0, 0), v2(0, 1), v2(1, 0), v2(2, 2)});
    CHECK(single == std::vector<int>{0});
}

TEST_CASE("archive keeps only mutually non-dominated members") {
    ParetoArchive a;
    a.insert(v2(0, 0), v2(1, 2));
    a.insert(v2(0, 0), v2(2, 1));
    a.insert(v2(0, 0), v2(3, 3)); // dominated, dropped
    CHECK(a.members.size() == 2);
    a.insert(v2(0, 0), v2(0.5, 0.5)); // dominates everything
    CHECK(a.members.size() == 1);
    a.insert(v2(0, 0), v2(0.5, 0.5)); // exact duplicate dropped
    CHECK(a.members.size() == 1);
}

TEST_CASE("nsga2 input validation and evaluation budget") {
    Nsga2Options opts;
    opts.population = 3;
    const VectorFn f = [](const Eigen::VectorXd& x) { return x; };
    CHECK_THROWS(nsga2(f, unit_box(1), opts));

    std::atomic<long> evals{0};
    Nsga2Options counted;
    counted.population = 12;
    counted.generations = 7;
    counted.seed = 5;
    const VectorFn g = [&evals](const Eigen::VectorXd& x) {
        ++evals;
        return v2(x[0], 1.0 - x[0]);
    };
    nsga2(g, unit_box(2), counted);
    CHECK(evals.load() == 12 * (7 + 1));
}

TEST_CASE("nsga2 is deterministic per seed") {
    const VectorFn f = [](const Eigen::VectorXd& x) {
        return v2(x[0], (1.0 - x[0]) * (1.0 + x[1]));
    };
    Nsga2Options opts;
    opts.population = 16;
    opts.generations = 12;
    opts.seed = 42;
    const auto a = nsga2(f, unit_box(2), opts);
    const auto b = nsga2(f, unit_box(2), opts);
    REQUIRE(a.members.size() == b.members.size());
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        CHECK(a.members[i].x == b.members[i].x);
        CHECK(a.members[i].objectives == b.members[i].objectives);
    }
}

TEST_CASE("perfectly correlated objectives collapse the archive") {
    const VectorFn f = [](const Eigen::VectorXd& x) { return v2(x[0], x[0]); };
    Nsga2Options opts;
    opts.population = 20;
    opts.generations = 30;
    opts.seed = 3;
    const auto archive = nsga2(f, unit_box(1), opts);
    REQUIRE(!archive.members.empty());
    // A dominates B whenever A.x < B.x, so only the best point survives.
    CHECK(archive.members.size() == 1);
    CHECK(archive.members[0].objectives[0] < 0.01);
}

TEST_CASE("single-objective nsga2 degenerates to the best point") {
    const VectorFn f = [](const Eigen::VectorXd& x) {
        Eigen::VectorXd v(1);
        v << (x[0] - 0.4) * (x[0] - 0.4);
        return v;
    };
    Nsga2Options opts;
    opts.population = 20;
    opts.generations = 40;
    opts.seed = 8;
    const auto archive = nsga2(f, unit_box(1), opts);
    REQUIRE(archive.members.size() == 1);
    CHECK(archive.members[0].x[0] == doctest::Approx(0.4).epsilon(0.02));
}

TEST_CASE("pso finds a 1-D quadratic minimum and keeps a monotone trace") {
    PsoOptions opts;
    opts.particles = 30;
    opts.iterations = 100;
    opts.seed = 4;
    const auto res = pso([](const Eigen::VectorXd& x) { return (x[0] - 0.3) * (x[0] - 0.3); },
                         unit_box(1), opts);
    CHECK(std::abs(res.x_best[0] - 0.3) < 1e-4);
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        CHECK(res.trace[i] <= res.trace[i - 1] + 1e-15);
    }
}

TEST_CASE("pso on a constant objective returns the constant") {
    PsoOptions opts;
    opts.particles = 5;
    opts.iterations = 10;
    const auto res = pso([](const Eigen::VectorXd&) { return 2.75; }, unit_box(3), opts);
    CHECK(res.f_best == 2.75);
    CHECK_THROWS(pso([](const Eigen::VectorXd&) { return 0.0; }, unit_box(1),
                     PsoOptions{1, 10}));
}

TEST_CASE("pso is deterministic per seed and respects bounds") {
    PsoOptions opts;
    opts.particles = 12;
    opts.iterations = 25;
    opts.seed = 77;
    const ScalarFn f = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
    const auto a = pso(f, unit_box(3), opts);
    const auto b = pso(f, unit_box(3), opts);
    CHECK(a.x_best == b.x_best);
    CHECK(a.trace == b.trace);
    CHECK(unit_box(3).contains(a.x_best));
}

TEST_CASE("hypervolume_2d matches hand computation") {
    // Points (0.2,0.6) and (0.6,0.2), reference (1,1):
    // slabs: [0.2,0.6) x height 0.4 + [0.6,1) x height 0.8 = 0.16 + 0.32.
    const double hv = hypervolume_2d({v2(0.2, 0.6), v2(0.6, 0.2)}, Eigen::Vector2d(1.0, 1.0));
    CHECK(hv == doctest::Approx(0.48).epsilon(1e-12));
    // Dominated and out-of-reference points contribute nothing.
    const double hv2 = hypervolume_2d({v2(0.2, 0.6), v2(0.6, 0.2), v2(0.7, 0.7), v2(1.5, 0.1)},
                                      Eigen::Vector2d(1.0, 1.0));
    CHECK(hv2 == doctest::Approx(0.48).epsilon(1e-12));
    CHECK(hypervolume_2d({}, Eigen::Vector2d(1.0, 1.0)) == 0.0);
}

TEST_CASE("archive hypervolume is non-decreasing across generations") {
    const VectorFn f = [](const Eigen::VectorXd& x) {
        const double g = 1.0 + 2.0 * x[1];
        return v2(x[0], g * (1.0 - std::sqrt(x[0] / g)));
    };
    std::vector<double> hv_trace;
    Nsga2Options opts;
    opts.population = 16;
    opts.generations = 25;
    opts.seed = 12;
    opts.observer = [&hv_trace](int, const ParetoArchive& archive) {
        std::vector<Eigen::VectorXd> objs;
        for (const auto& m : archive.members) objs.push_back(m.objectives);
        hv_trace.push_back(hypervolume_2d(objs, Eigen::Vector2d(1.1, 1.1)));
    };
    nsga2(f, unit_box(2), opts);
    REQUIRE(hv_trace.size() == 25);
    for (std::size_t i = 1; i < hv_trace.size(); ++i) {
        CHECK(hv_trace[i] >= hv_trace[i - 1] - 1e-12);
    }
}

TEST_CASE("nsga2 propagates evaluation failures") {
    const VectorFn f = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        if (x[0] > 0.0) throw std::runtime_error("boom");
        return v2(x[0], -x[0]);
    };
    Nsga2Options opts;
    opts.population = 8;
    opts.generations = 2;
    CHECK_THROWS_WITH_AS(nsga2(f, unit_box(1), opts), "boom", std::runtime_error);
}
