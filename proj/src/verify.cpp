#include "eqschub/verify.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <random>
#include <thread>

#include "eqschub/parallel.hpp"
#include "eqschub/struct_const.hpp"

namespace eqschub {

std::string to_string(suite_kind s) {
    switch (s) {
    case suite_kind::identities: return "identities";
    case suite_kind::pieri: return "pieri";
    case suite_kind::engines: return "engines";
    case suite_kind::assoc: return "assoc";
    case suite_kind::all: return "all";
    }
    throw internal_error("unknown suite kind");
}

suite_kind suite_from_string(const std::string& s) {
    if (s == "identities") return suite_kind::identities;
    if (s == "pieri") return suite_kind::pieri;
    if (s == "engines") return suite_kind::engines;
    if (s == "assoc") return suite_kind::assoc;
    if (s == "all") return suite_kind::all;
    throw usage_error("unknown suite '" + s + "'");
}

namespace {

int slot_count(int jobs) {
    int n = jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : jobs;
    return n < 1 ? 1 : n;
}

check_report run_identities(const grassmann_shape& shape) {
    const int p = shape.p, cols = shape.cols(), s_max = shape.m;
    check_report rep;
    const int lo = std::min({0, 2 - s_max, 2 - p});
    const int hi = std::max(p + s_max - 1, p + 1);
    rep.merge(run_identity_suite(p, s_max, lo, hi));
    rep.merge(run_schur_agreement(p, p, cols, -(p + cols + 2), 2 * p + cols + 2));
    rep.merge(run_vanishing_table(p, cols));
    return rep;
}

check_report run_pieri(const grassmann_shape& shape) {
    check_report rep;
    const int bound = shape.p * shape.cols() + 1;
    const partition box({1});
    for (model_kind model : {model_kind::h, model_kind::e}) {
        const presentation_ring ring(model, shape, bound);
        for (const partition& lam : ring.basis()) {
            const schubert_expansion got = ring.eqlr(lam, box);
            const schubert_expansion want = pieri_rule(lam, shape);
            rep.add("single-box product matches the closed-form rule",
                    to_string(model) + "-model, " + lam.bracket() + " at " + shape.str(),
                    got == want,
                    got == want ? "" : "got " + got.str() + ", want " + want.str());
        }
    }
    return rep;
}

check_report run_engines(const grassmann_shape& shape, int jobs) {
    check_report rep;
    const int bound = 2 * shape.p * shape.cols();

    std::optional<presentation_ring> rings[2];
    parallel_for(2, jobs, [&](int, long long k) {
        rings[k].emplace(k == 0 ? model_kind::h : model_kind::e, shape, bound);
    });
    const presentation_ring& hring = *rings[0];
    const presentation_ring& ering = *rings[1];

    const std::vector<partition>& basis = ering.basis();
    const int n = static_cast<int>(basis.size());
    std::vector<std::pair<int, int>> work;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) work.push_back({i, j});

    struct triple {
        schubert_expansion h, e, x;
    };
    std::vector<triple> results(work.size());
    std::vector<std::unique_ptr<xmodel_engine>> engines(slot_count(jobs));

    parallel_for(static_cast<long long>(work.size()), jobs, [&](int tid, long long k) {
        const auto [i, j] = work[static_cast<std::size_t>(k)];
        auto& eng = engines.at(tid);
        if (!eng) eng = std::make_unique<xmodel_engine>(ering);
        results[k] = {hring.eqlr(basis[i], basis[j]), ering.eqlr(basis[i], basis[j]),
                      eng->eqlr(basis[i], basis[j])};
    });

    std::vector<std::vector<int>> slot(n, std::vector<int>(n));
    for (int k = 0; k < static_cast<int>(work.size()); ++k)
        slot[work[k].first][work[k].second] = slot[work[k].second][work[k].first] = k;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const triple& r = results[slot[i][j]];
            const std::string inst =
                "(" + basis[i].bracket() + ", " + basis[j].bracket() + ") at " + shape.str();
            const bool agree = r.h == r.e && r.e == r.x;
            rep.add("three engines agree", inst, agree,
                    agree ? ""
                          : "h: " + r.h.str() + " | e: " + r.e.str() + " | x: " + r.x.str());
            const int total = basis[i].weight() + basis[j].weight();
            rep.add("coefficients are homogeneous of the complementary grade", inst,
                    expansion_homogeneous(r.e, total, shape), "");
        }
    return rep;
}

check_report run_assoc(const grassmann_shape& shape, int jobs) {
    check_report rep;
    const int bound = 2 * shape.p * shape.cols();
    const presentation_ring ring(model_kind::e, shape, bound);

    const std::vector<partition>& basis = ring.basis();
    const int n = static_cast<int>(basis.size());
    std::vector<std::pair<int, int>> work;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) work.push_back({i, j});

    std::vector<std::pair<schubert_expansion, schubert_expansion>> both(work.size());
    parallel_for(static_cast<long long>(work.size()), jobs, [&](int, long long k) {
        const auto [i, j] = work[static_cast<std::size_t>(k)];
        both[k] = {ring.eqlr(basis[i], basis[j]), ring.eqlr(basis[j], basis[i])};
    });

    std::vector<std::vector<int>> slot(n, std::vector<int>(n));
    for (int k = 0; k < static_cast<int>(work.size()); ++k)
        slot[work[k].first][work[k].second] = slot[work[k].second][work[k].first] = k;

    for (std::size_t k = 0; k < work.size(); ++k) {
        const auto [i, j] = work[k];
        rep.add("product is order independent",
                "(" + basis[i].bracket() + ", " + basis[j].bracket() + ") at " + shape.str(),
                both[k].first == both[k].second, "");
    }

    std::mt19937 gen(20240823u);
    const int n_triples = 50;
    std::vector<std::array<int, 3>> triples;
    for (int t = 0; t < n_triples; ++t)
        triples.push_back({static_cast<int>(gen() % n), static_cast<int>(gen() % n),
                           static_cast<int>(gen() % n)});

    std::vector<char> ok(triples.size(), 0);
    std::vector<std::string> detail(triples.size());
    parallel_for(static_cast<long long>(triples.size()), jobs, [&](int, long long k) {
        const auto [i, j, l] = triples[static_cast<std::size_t>(k)];
        const schubert_expansion left =
            compose(both[slot[i][j]].first, basis[l], ring); // (s_i s_j) s_l
        const schubert_expansion right =
            compose(both[slot[j][l]].first, basis[i], ring); // s_i (s_j s_l)
        ok[k] = left == right;
        if (!ok[k]) detail[k] = "left " + left.str() + " != right " + right.str();
    });
    for (std::size_t k = 0; k < triples.size(); ++k) {
        const auto [i, j, l] = triples[k];
        rep.add("product is associative",
                "(" + basis[i].bracket() + ", " + basis[j].bracket() + ", " + basis[l].bracket() +
                    ") at " + shape.str(),
                ok[k] != 0, detail[k]);
    }
    return rep;
}

} // namespace

check_report run_suite(const grassmann_shape& shape, suite_kind suite, int jobs) {
    check_report rep;
    if (suite == suite_kind::identities || suite == suite_kind::all)
        rep.merge(run_identities(shape));
    if (suite == suite_kind::pieri || suite == suite_kind::all) rep.merge(run_pieri(shape));
    if (suite == suite_kind::engines || suite == suite_kind::all)
        rep.merge(run_engines(shape, jobs));
    if (suite == suite_kind::assoc || suite == suite_kind::all) rep.merge(run_assoc(shape, jobs));
    if (suite == suite_kind::all) rep.merge(verify_relations(shape));
    return rep;
}

} // namespace eqschub
