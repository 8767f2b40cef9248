#include "rsopt/moo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rsopt/rng.hpp"

namespace rsopt {

bool dominates(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    bool strictly = false;
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strictly = true;
    }
    return strictly;
}

void ParetoArchive::insert(const Eigen::VectorXd& x, const Eigen::VectorXd& objectives) {
    for (const auto& m : members) {
        if (dominates(m.objectives, objectives)) return;
        if (m.objectives == objectives && m.x == x) return;
    }
    members.erase(std::remove_if(members.begin(), members.end(),
                                 [&](const Individual& m) {
                                     return dominates(objectives, m.objectives);
                                 }),
                  members.end());
    Individual ind;
    ind.x = x;
    ind.objectives = objectives;
    members.push_back(std::move(ind));
}

std::vector<std::vector<int>> non_dominated_sort(const std::vector<Eigen::VectorXd>& objectives) {
    const int n = static_cast<int>(objectives.size());
    std::vector<std::vector<int>> fronts;
    if (n == 0) return fronts;

    std::vector<std::vector<int>> dominated(static_cast<std::size_t>(n));
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dominates(objectives[static_cast<std::size_t>(i)],
                          objectives[static_cast<std::size_t>(j)])) {
                dominated[static_cast<std::size_t>(i)].push_back(j);
                ++count[static_cast<std::size_t>(j)];
            } else if (dominates(objectives[static_cast<std::size_t>(j)],
                                 objectives[static_cast<std::size_t>(i)])) {
                dominated[static_cast<std::size_t>(j)].push_back(i);
                ++count[static_cast<std::size_t>(i)];
            }
        }
    }
    std::vector<int> current;
    for (int i = 0; i < n; ++i) {
        if (count[static_cast<std::size_t>(i)] == 0) current.push_back(i);
    }
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<int> next;
        for (int i : current) {
            for (int j : dominated[static_cast<std::size_t>(i)]) {
                if (--count[static_cast<std::size_t>(j)] == 0) next.push_back(j);
            }
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<Eigen::VectorXd>& front) {
    const int n = static_cast<int>(front.size());
    std::vector<double> dist(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return dist;
    const Eigen::Index m = front[0].size();
    const double inf = std::numeric_limits<double>::infinity();
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return front[static_cast<std::size_t>(a)][k] < front[static_cast<std::size_t>(b)][k];
        });
        const double lo = front[static_cast<std::size_t>(order.front())][k];
        const double hi = front[static_cast<std::size_t>(order.back())][k];
        dist[static_cast<std::size_t>(order.front())] = inf;
        dist[static_cast<std::size_t>(order.back())] = inf;
        if (hi - lo <= 0.0) continue; // degenerate objective contributes nothing
        for (int i = 1; i + 1 < n; ++i) {
            const double below = front[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])][k];
            const double above = front[static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])][k];
            auto& d = dist[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            if (std::isfinite(d)) d += (above - below) / (hi - lo);
        }
    }
    return dist;
}

std::vector<int> pareto_filter(const std::vector<Eigen::VectorXd>& objectives) {
    std::vector<int> keep;
    const int n = static_cast<int>(objectives.size());
    for (int i = 0; i < n; ++i) {
        bool is_dominated = false;
        for (int j = 0; j < n && !is_dominated; ++j) {
            if (j != i && dominates(objectives[static_cast<std::size_t>(j)],
                                    objectives[static_cast<std::size_t>(i)])) {
                is_dominated = true;
            }
        }
        if (!is_dominated) keep.push_back(i);
    }
    return keep;
}

namespace {

Eigen::VectorXd clamp_to_box(Eigen::VectorXd x, const Box& box) {
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        x[j] = std::min(std::max(x[j], box.low[j]), box.high[j]);
    }
    return x;
}

// Simulated binary crossover on one coordinate pair.
void sbx_pair(double& c1, double& c2, double u, double eta) {
    double beta;
    if (u <= 0.5) {
        beta = std::pow(2.0 * u, 1.0 / (eta + 1.0));
    } else {
        beta = std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
    }
    const double p1 = c1, p2 = c2;
    c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2);
    c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2);
}

double polynomial_mutation(double v, double lo, double hi, double u, double eta) {
    if (hi <= lo) return lo;
    const double range = hi - lo;
    double delta;
    if (u < 0.5) {
        const double dl = (v - lo) / range;
        delta = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - dl, eta + 1.0),
                         1.0 / (eta + 1.0)) -
                1.0;
    } else {
        const double dh = (hi - v) / range;
        delta = 1.0 - std::pow(2.0 * (1.0 - u) + (2.0 * u - 1.0) * std::pow(1.0 - dh, eta + 1.0),
                               1.0 / (eta + 1.0));
    }
    return std::min(std::max(v + delta * range, lo), hi);
}

} // namespace

ParetoArchive nsga2(const VectorFn& problem, const Box& box, const Nsga2Options& options) {
    const int pop = options.population;
    if (pop < 4 || pop % 2 != 0) {
        throw std::invalid_argument("nsga2: population must be even and >= 4");
    }
    const Eigen::Index d = box.size();
    const double mutation_p =
        options.mutation_probability < 0.0 ? 1.0 / static_cast<double>(d)
                                           : options.mutation_probability;
    Rng rng(derive_seed(options.seed, 0x45a));

    // Evaluations run in parallel but never touch the shared generator: all
    // random draws happen while building the candidate list, so results are
    // identical to a sequential run.
    auto evaluate_batch = [&problem](std::vector<Individual>& batch) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < batch.size(); ++i) {
            try {
                batch[i].objectives = problem(batch[i].x);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    };

    ParetoArchive archive;
    std::vector<Individual> population(static_cast<std::size_t>(pop));
    for (auto& ind : population) {
        ind.x.resize(d);
        for (Eigen::Index j = 0; j < d; ++j) ind.x[j] = rng.uniform(box.low[j], box.high[j]);
    }
    evaluate_batch(population);
    for (const auto& ind : population) archive.insert(ind.x, ind.objectives);

    auto assign_rank_crowding = [](std::vector<Individual>& pool) {
        std::vector<Eigen::VectorXd> objs;
        objs.reserve(pool.size());
        for (const auto& ind : pool) objs.push_back(ind.objectives);
        const auto fronts = non_dominated_sort(objs);
        for (std::size_t f = 0; f < fronts.size(); ++f) {
            std::vector<Eigen::VectorXd> front_objs;
            for (int i : fronts[f]) front_objs.push_back(objs[static_cast<std::size_t>(i)]);
            const auto cd = crowding_distance(front_objs);
            for (std::size_t t = 0; t < fronts[f].size(); ++t) {
                pool[static_cast<std::size_t>(fronts[f][t])].rank = static_cast<int>(f);
                pool[static_cast<std::size_t>(fronts[f][t])].crowding = cd[t];
            }
        }
    };
    assign_rank_crowding(population);

    auto tournament = [&](void) -> const Individual& {
        const auto i = rng.index(static_cast<std::size_t>(pop));
        const auto j = rng.index(static_cast<std::size_t>(pop));
        const Individual& a = population[i];
        const Individual& b = population[j];
        if (a.rank != b.rank) return a.rank < b.rank ? a : b;
        return a.crowding >= b.crowding ? a : b;
    };

    for (int gen = 0; gen < options.generations; ++gen) {
        std::vector<Individual> offspring;
        offspring.reserve(static_cast<std::size_t>(pop));
        for (int k = 0; k < pop; k += 2) {
            Eigen::VectorXd c1 = tournament().x;
            Eigen::VectorXd c2 = tournament().x;
            if (rng.uniform() < options.crossover_probability) {
                for (Eigen::Index j = 0; j < d; ++j) {
                    if (rng.uniform() < 0.5 && box.width(j) > 0.0) {
                        sbx_pair(c1[j], c2[j], rng.uniform(), options.eta_crossover);
                    }
                }
            }
            for (Eigen::VectorXd* c : {&c1, &c2}) {
                for (Eigen::Index j = 0; j < d; ++j) {
                    if (rng.uniform() < mutation_p) {
                        (*c)[j] = polynomial_mutation((*c)[j], box.low[j], box.high[j],
                                                      rng.uniform(), options.eta_mutation);
                    }
                }
                Individual ind;
                ind.x = clamp_to_box(*c, box);
                offspring.push_back(std::move(ind));
            }
        }
        evaluate_batch(offspring);
        for (const auto& ind : offspring) archive.insert(ind.x, ind.objectives);

        // Elitist environmental selection from parents + offspring.
        std::vector<Individual> pool = std::move(population);
        pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
        assign_rank_crowding(pool);
        std::vector<std::size_t> order(pool.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (pool[a].rank != pool[b].rank) return pool[a].rank < pool[b].rank;
            return pool[a].crowding > pool[b].crowding;
        });
        population.clear();
        population.reserve(static_cast<std::size_t>(pop));
        for (int i = 0; i < pop; ++i) population.push_back(pool[order[static_cast<std::size_t>(i)]]);

        if (options.observer) options.observer(gen, archive);
    }
    return archive;
}

PsoResult pso(const ScalarFn& objective, const Box& box, const PsoOptions& options) {
    if (options.particles < 2) throw std::invalid_argument("pso: need >= 2 particles");
    const Eigen::Index d = box.size();
    Rng rng(derive_seed(options.seed, 0x950));

    const int n = options.particles;
    std::vector<Eigen::VectorXd> x(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n)),
        pbest(static_cast<std::size_t>(n));
    std::vector<double> pbest_f(static_cast<std::size_t>(n));
    Eigen::VectorXd gbest;
    double gbest_f = std::numeric_limits<double>::infinity();

    for (int i = 0; i < n; ++i) {
        auto& xi = x[static_cast<std::size_t>(i)];
        xi.resize(d);
        for (Eigen::Index j = 0; j < d; ++j) xi[j] = rng.uniform(box.low[j], box.high[j]);
        // Random initial velocities (up to one box width): a swarm started at
        // rest collapses onto the first good basin it sees.
        auto& vi = v[static_cast<std::size_t>(i)];
        vi.resize(d);
        for (Eigen::Index j = 0; j < d; ++j) {
            const double w = box.width(j);
            vi[j] = rng.uniform(-w, w);
        }
        const double f = objective(xi);
        pbest[static_cast<std::size_t>(i)] = xi;
        pbest_f[static_cast<std::size_t>(i)] = f;
        if (f < gbest_f) {
            gbest_f = f;
            gbest = xi;
        }
    }

    PsoResult result;
    result.trace.push_back(gbest_f);
    for (int it = 0; it < options.iterations; ++it) {
        for (int i = 0; i < n; ++i) {
            auto& xi = x[static_cast<std::size_t>(i)];
            auto& vi = v[static_cast<std::size_t>(i)];
            for (Eigen::Index j = 0; j < d; ++j) {
                const double r1 = rng.uniform(), r2 = rng.uniform();
                vi[j] = options.inertia * vi[j] +
                        options.cognitive * r1 * (pbest[static_cast<std::size_t>(i)][j] - xi[j]) +
                        options.social * r2 * (gbest[j] - xi[j]);
                xi[j] += vi[j];
                if (xi[j] < box.low[j]) {
                    xi[j] = box.low[j];
                    vi[j] = 0.0;
                } else if (xi[j] > box.high[j]) {
                    xi[j] = box.high[j];
                    vi[j] = 0.0;
                }
            }
            const double f = objective(xi);
            if (f < pbest_f[static_cast<std::size_t>(i)]) {
                pbest_f[static_cast<std::size_t>(i)] = f;
                pbest[static_cast<std::size_t>(i)] = xi;
                if (f < gbest_f) {
                    gbest_f = f;
                    gbest = xi;
                }
            }
        }
        result.trace.push_back(gbest_f);
    }

    // Coordinate polish on the box faces. Worst-case style objectives often
    // attain their optimum on a boundary, and a collapsed swarm can settle on
    // the wrong face when two faces score similarly; 4d extra evaluations
    // rule that failure mode out.
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < d; ++j) {
            for (const double cand : {box.low[j], box.high[j]}) {
                if (gbest[j] == cand) continue;
                Eigen::VectorXd probe = gbest;
                probe[j] = cand;
                const double f = objective(probe);
                if (f < gbest_f) {
                    gbest_f = f;
                    gbest = std::move(probe);
                }
            }
        }
    }
    result.trace.push_back(gbest_f);

    result.x_best = gbest;
    result.f_best = gbest_f;
    return result;
}

double hypervolume_2d(const std::vector<Eigen::VectorXd>& objectives,
                      const Eigen::Vector2d& reference) {
    std::vector<Eigen::VectorXd> pts;
    for (int i : pareto_filter(objectives)) {
        const auto& p = objectives[static_cast<std::size_t>(i)];
        if (p.size() != 2) throw std::invalid_argument("hypervolume_2d: need 2 objectives");
        if (p[0] < reference[0] && p[1] < reference[1]) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(),
              [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return a[0] < b[0]; });
    // Vertical slabs: between consecutive f1 values the dominated height is
    // set by the point opening the slab (f2 is descending along the front).
    double hv = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double next_f1 = i + 1 < pts.size() ? pts[i + 1][0] : reference[0];
        hv += (next_f1 - pts[i][0]) * (reference[1] - pts[i][1]);
    }
    return hv;
}

} // namespace rsopt
