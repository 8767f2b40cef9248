#include <benchmark/benchmark.h>

#include <rsopt/moo.hpp>
#include <rsopt/problems.hpp>
#include <rsopt/rng.hpp>
#include <rsopt/sampling.hpp>
#include <rsopt/surrogate.hpp>

using namespace rsopt;

static void BM_MaximinLhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximin_lhs(n, 12, seed++));
    }
}
BENCHMARK(BM_MaximinLhs)->Arg(64)->Arg(234);

static void BM_KernelValue(benchmark::State& state) {
    KernelSpec spec;
    spec.kind = state.range(0) ? KernelKind::matern52 : KernelKind::abs_exponential;
    spec.length_scales = Eigen::VectorXd::Constant(12, 0.7);
    Rng rng(3);
    Eigen::VectorXd a(12), b(12);
    for (int j = 0; j < 12; ++j) {
        a[j] = rng.uniform();
        b[j] = rng.uniform();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_value(spec, a, b));
    }
}
BENCHMARK(BM_KernelValue)->Arg(0)->Arg(1);

static KrigingModel make_reference_model() {
    const auto doe = maximin_lhs(175, 12, 1);
    Eigen::VectorXd y(doe.rows());
    for (Eigen::Index i = 0; i < doe.rows(); ++i) {
        y[i] = std::sin(doe.points.row(i).sum()) + 0.1 * doe.points(i, 0);
    }
    return KrigingModel::fit(doe.points, y, KernelKind::matern52);
}

static void BM_PredictMean(benchmark::State& state) {
    static const KrigingModel model = make_reference_model();
    Rng rng(5);
    Eigen::VectorXd x(12);
    for (auto _ : state) {
        for (int j = 0; j < 12; ++j) x[j] = rng.uniform();
        benchmark::DoNotOptimize(model.predict_mean(x));
    }
}
BENCHMARK(BM_PredictMean);

static void BM_Nsga2Generation(benchmark::State& state) {
    const Box box(Eigen::VectorXd::Zero(8), Eigen::VectorXd::Ones(8));
    Nsga2Options opts;
    opts.population = 100;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        opts.generations = static_cast<int>(state.range(0));
        opts.seed = seed++;
        benchmark::DoNotOptimize(
            nsga2([](const Eigen::VectorXd& x) { return zdt1(x); }, box, opts));
    }
}
BENCHMARK(BM_Nsga2Generation)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
