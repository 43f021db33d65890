#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "eqschub/cache.hpp"
#include "eqschub/detail/json_util.hpp"
#include "eqschub/factorial_schur.hpp"
#include "eqschub/table.hpp"
#include "eqschub/verify.hpp"

namespace {

using namespace eqschub;

struct common_flags {
    int p = 0;
    int m = 0;
    std::string lambda = "0";
    std::string mu = "0";
    std::string engine = "e";
    bool q0 = false;
    bool t0 = false;
    std::string format = "text";
    std::string out;
    int jobs = 0;
    int degree_bound = -1; // -1: use the default 2 p (m-p)
    std::string cache_dir;
    std::string suite = "all";
    std::string mode = "ratio";
    std::string seq = "generic";
    int cols = -1;
    bool clear = false;
};

int resolved_bound(const common_flags& f, const grassmann_shape& shape) {
    const int minimum = 2 * shape.p * shape.cols();
    if (f.degree_bound < 0) return minimum;
    if (f.degree_bound < minimum)
        throw usage_error("--degree-bound must be at least 2*p*(m-p) = " +
                          std::to_string(minimum));
    return f.degree_bound;
}

void emit(const common_flags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        write_file_atomic(f.out, text);
    }
}

int cmd_mult(const common_flags& f) {
    const grassmann_shape shape(f.p, f.m);
    const partition lam = partition::parse(f.lambda);
    const partition mu = partition::parse(f.mu);
    const engine_kind engine = engine_from_string(f.engine);
    const int bound = resolved_bound(f, shape);
    const std::string dir = resolve_cache_dir(f.cache_dir);

    schubert_expansion prod;
    if (engine == engine_kind::xmodel) {
        const presentation_ring ring = get_ring(model_kind::e, shape, bound, dir);
        xmodel_engine eng(ring);
        prod = eng.eqlr(lam, mu);
    } else {
        const model_kind model = engine == engine_kind::h ? model_kind::h : model_kind::e;
        const presentation_ring ring = get_ring(model, shape, bound, dir);
        prod = ring.eqlr(lam, mu);
    }
    if (f.q0) prod = specialize(prod, spec_mode::q0);
    if (f.t0) prod = specialize(prod, spec_mode::t0);

    if (f.format == "json") {
        detail::ordered_json out;
        out["p"] = shape.p;
        out["m"] = shape.m;
        out["engine"] = to_string(engine);
        out["lambda"] = lam.str();
        out["mu"] = mu.str();
        out["terms"] = detail::expansion_terms_json(prod);
        emit(f, out.dump(1) + "\n");
    } else if (f.format == "text") {
        emit(f, prod.str() + "\n");
    } else {
        throw usage_error("mult supports --format text or json");
    }
    return static_cast<int>(exit_code::ok);
}

int cmd_table(const common_flags& f) {
    const grassmann_shape shape(f.p, f.m);
    const engine_kind engine = engine_from_string(f.engine);
    const int bound = resolved_bound(f, shape);
    const model_kind model = engine == engine_kind::h ? model_kind::h : model_kind::e;
    const presentation_ring ring =
        get_ring(model, shape, bound, resolve_cache_dir(f.cache_dir));
    const table_document doc = build_table(ring, engine, f.q0, f.t0, f.jobs);

    std::string ext, text;
    if (f.format == "csv") {
        ext = "csv";
        text = table_to_csv(doc);
    } else if (f.format == "json" || f.format == "text") {
        ext = "json";
        text = table_to_json(doc);
    } else {
        throw usage_error("table supports --format json or csv");
    }

    std::string path = f.out;
    if (path.empty()) {
        path = "table_p" + std::to_string(shape.p) + "_m" + std::to_string(shape.m) + "_" +
               to_string(engine);
        if (doc.q0) path += "_q0";
        if (doc.t0) path += "_t0";
        path += "." + ext;
    }
    write_file_atomic(path, text);
    std::cout << path << ": " << doc.entries.size() << " entries\n";
    return static_cast<int>(exit_code::ok);
}

int cmd_verify(const common_flags& f) {
    const grassmann_shape shape(f.p, f.m);
    const suite_kind suite = suite_from_string(f.suite);
    const check_report rep = run_suite(shape, suite, f.jobs);

    if (f.format == "json") {
        detail::ordered_json out;
        out["shape"] = shape.str();
        out["suite"] = to_string(suite);
        out["checks"] = rep.items.size();
        out["failures"] = rep.failures();
        detail::ordered_json items = detail::ordered_json::array();
        for (const auto& it : rep.items) {
            detail::ordered_json row;
            row["name"] = it.name;
            row["instance"] = it.instance;
            row["pass"] = it.pass;
            if (!it.pass) row["detail"] = it.detail;
            items.push_back(std::move(row));
        }
        out["items"] = std::move(items);
        emit(f, out.dump(1) + "\n");
    } else if (f.format == "text") {
        std::string text;
        for (const auto& it : rep.items)
            if (!it.pass)
                text += "FAIL " + it.name + " [" + it.instance + "]" +
                        (it.detail.empty() ? "" : ": " + it.detail) + "\n";
        text += to_string(suite) + " at " + shape.str() + ": " +
                std::to_string(rep.items.size() - rep.failures()) + "/" +
                std::to_string(rep.items.size()) + " checks passed\n";
        emit(f, text);
    } else {
        throw usage_error("verify supports --format text or json");
    }
    return static_cast<int>(rep.all_pass() ? exit_code::ok : exit_code::verify_failed);
}

int cmd_schur(const common_flags& f) {
    const int p = f.p;
    if (p < 1) throw usage_error("--p must be at least 1");
    const partition lam = partition::parse(f.lambda);
    if (lam.length() > p)
        throw usage_error("partition " + lam.bracket() + " has more than " + std::to_string(p) +
                          " rows");
    const int lam1 = lam.part(1);
    int cols = f.cols;
    if (cols < 0) cols = lam1;
    if (cols < lam1) throw usage_error("--cols must be at least the first part of lambda");

    parameter_sequence a = [&] {
        if (f.seq == "generic") {
            const int reach = p + lam1 + cols + 2;
            return parameter_sequence::generic(-reach, reach);
        }
        if (f.seq.rfind("t:", 0) == 0) {
            int m = 0;
            try {
                m = std::stoi(f.seq.substr(2));
            } catch (const std::exception&) {
                throw usage_error("--seq t:<m> needs an integer, got '" + f.seq + "'");
            }
            return make_t(grassmann_shape(p, m));
        }
        throw usage_error("--seq expects 'generic' or 't:<m>'");
    }();

    poly value;
    if (f.mode == "ratio")
        value = schur_ratio(lam, a, p);
    else if (f.mode == "jt-h")
        value = schur_jt_h(lam, a, p);
    else if (f.mode == "jt-e")
        value = schur_jt_e(lam, a, p, cols);
    else
        throw usage_error("--mode expects ratio, jt-h, or jt-e");

    if (f.format == "json") {
        detail::ordered_json out;
        out["p"] = p;
        out["lambda"] = lam.str();
        out["mode"] = f.mode;
        out["seq"] = f.seq;
        out["poly"] = value.str();
        emit(f, out.dump(1) + "\n");
    } else if (f.format == "text") {
        emit(f, value.str() + "\n");
    } else {
        throw usage_error("schur supports --format text or json");
    }
    return static_cast<int>(exit_code::ok);
}

int cmd_cache(const common_flags& f) {
    const grassmann_shape shape(f.p, f.m);
    const engine_kind engine = engine_from_string(f.engine);
    if (engine == engine_kind::xmodel)
        throw usage_error("cache stores the h or e model reducer");
    const model_kind model = engine == engine_kind::h ? model_kind::h : model_kind::e;
    const int bound = resolved_bound(f, shape);
    const std::string dir = resolve_cache_dir(f.cache_dir);
    const std::string path = ring_cache_path(dir, model, shape, bound);

    if (f.clear) {
        if (std::filesystem::remove(path))
            std::cout << "removed " << path << "\n";
        else
            std::cout << "no cache at " << path << "\n";
        return static_cast<int>(exit_code::ok);
    }
    const presentation_ring ring = get_ring(model, shape, bound, dir);
    std::cout << path << ": " << ring.normal_forms().size() << " normal forms\n";
    return static_cast<int>(exit_code::ok);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant quantum Schubert calculus on Gr(p,m)"};
    app.require_subcommand(1);
    common_flags f;

    auto add_shape = [&](CLI::App* cmd, bool need_m) {
        cmd->add_option("--p", f.p, "number of rows p")->required();
        if (need_m) cmd->add_option("--m", f.m, "ambient dimension m (p < m)")->required();
    };

    CLI::App* mult = app.add_subcommand("mult", "product of two classes");
    add_shape(mult, true);
    mult->add_option("--lambda", f.lambda, "first partition, e.g. 2,1 (0 for empty)");
    mult->add_option("--mu", f.mu, "second partition");
    mult->add_option("--engine", f.engine, "h, e, or xmodel (default e)");
    mult->add_flag("--q0", f.q0, "keep only the q^0 layer");
    mult->add_flag("--t0", f.t0, "set every T variable to zero");
    mult->add_option("--format", f.format, "text or json");
    mult->add_option("--out", f.out, "write output to this path");
    mult->add_option("--degree-bound", f.degree_bound, "reducer degree bound (>= 2p(m-p))");
    mult->add_option("--cache-dir", f.cache_dir, "reducer cache directory");

    CLI::App* table = app.add_subcommand("table", "full multiplication table");
    add_shape(table, true);
    table->add_option("--engine", f.engine, "h, e, or xmodel (default e)");
    table->add_flag("--q0", f.q0, "keep only the q^0 layer");
    table->add_flag("--t0", f.t0, "set every T variable to zero");
    table->add_option("--format", f.format, "json or csv");
    table->add_option("--out", f.out, "output path (default derived from the shape)");
    table->add_option("--jobs", f.jobs, "worker threads (default: all cores)");
    table->add_option("--degree-bound", f.degree_bound, "reducer degree bound (>= 2p(m-p))");
    table->add_option("--cache-dir", f.cache_dir, "reducer cache directory");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_shape(verify, true);
    verify->add_option("--suite", f.suite, "identities, pieri, engines, assoc, or all");
    verify->add_option("--format", f.format, "text or json");
    verify->add_option("--out", f.out, "write the report to this path");
    verify->add_option("--jobs", f.jobs, "worker threads (default: all cores)");

    CLI::App* schur = app.add_subcommand("schur", "one factorial Schur polynomial");
    add_shape(schur, false);
    schur->add_option("--lambda", f.lambda, "partition, e.g. 2,1 (0 for empty)");
    schur->add_option("--mode", f.mode, "ratio, jt-h, or jt-e");
    schur->add_option("--seq", f.seq, "'generic' or 't:<m>' for the torus sequence");
    schur->add_option("--cols", f.cols, "determinant size for jt-e (default: first part)");
    schur->add_option("--format", f.format, "text or json");
    schur->add_option("--out", f.out, "write output to this path");

    CLI::App* cache = app.add_subcommand("cache", "build, refresh, or clear a reducer cache");
    add_shape(cache, true);
    cache->add_option("--engine", f.engine, "h or e (default e)");
    cache->add_option("--degree-bound", f.degree_bound, "reducer degree bound (>= 2p(m-p))");
    cache->add_option("--cache-dir", f.cache_dir, "reducer cache directory");
    cache->add_flag("--clear", f.clear, "remove the matching cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(eqschub::exit_code::usage);
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = static_cast<int>(eqschub::exit_code::internal);
    try {
        if (app.got_subcommand(mult)) rc = cmd_mult(f);
        else if (app.got_subcommand(table)) rc = cmd_table(f);
        else if (app.got_subcommand(verify)) rc = cmd_verify(f);
        else if (app.got_subcommand(schur)) rc = cmd_schur(f);
        else if (app.got_subcommand(cache)) rc = cmd_cache(f);
    } catch (const eqschub::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(eqschub::exit_code::usage);
    } catch (const eqschub::verification_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(eqschub::exit_code::verify_failed);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(eqschub::exit_code::internal);
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cerr << "runtime: " << ms << " ms\n";
    return rc;
}
