#include "eqschub/table.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include "eqschub/parallel.hpp"
#include "eqschub/detail/json_util.hpp"

namespace eqschub {

std::string to_string(engine_kind e) {
    switch (e) {
    case engine_kind::h: return "h";
    case engine_kind::e: return "e";
    case engine_kind::xmodel: return "xmodel";
    }
    throw internal_error("unknown engine kind");
}

engine_kind engine_from_string(const std::string& s) {
    if (s == "h") return engine_kind::h;
    if (s == "e") return engine_kind::e;
    if (s == "xmodel") return engine_kind::xmodel;
    throw usage_error("unknown engine '" + s + "' (expected h, e, or xmodel)");
}

table_document build_table(const presentation_ring& ring, engine_kind engine, bool q0, bool t0,
                           int jobs) {
    const grassmann_shape& shape = ring.shape();
    const int needed = 2 * shape.p * shape.cols();
    if (ring.degree_bound() < needed)
        throw usage_error("a full table needs a degree bound of at least " +
                          std::to_string(needed));
    const model_kind model = engine == engine_kind::h ? model_kind::h : model_kind::e;
    if (ring.model() != model)
        throw usage_error("the " + to_string(engine) + " engine needs a " + to_string(model) +
                          "-model reducer");

    const std::vector<partition>& basis = ring.basis();
    const int n = static_cast<int>(basis.size());

    table_document doc;
    doc.p = shape.p;
    doc.m = shape.m;
    doc.engine = engine;
    doc.q0 = q0;
    doc.t0 = t0;
    doc.entries.resize(static_cast<std::size_t>(n) * n);

    // Upper-triangle work list; the product is symmetric, so (j, i) mirrors.
    std::vector<std::pair<int, int>> work;
    work.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) work.push_back({i, j});

    int slots = jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : jobs;
    if (slots < 1) slots = 1;
    std::vector<std::unique_ptr<xmodel_engine>> engines(slots);

    parallel_for(static_cast<long long>(work.size()), jobs, [&](int tid, long long k) {
        const auto [i, j] = work[static_cast<std::size_t>(k)];
        schubert_expansion prod;
        if (engine == engine_kind::xmodel) {
            auto& eng = engines.at(tid);
            if (!eng) eng = std::make_unique<xmodel_engine>(ring);
            prod = eng->eqlr(basis[i], basis[j]);
        } else {
            prod = ring.eqlr(basis[i], basis[j]);
        }
        if (q0) prod = specialize(prod, spec_mode::q0);
        if (t0) prod = specialize(prod, spec_mode::t0);
        doc.entries[static_cast<std::size_t>(i) * n + j] = {basis[i], basis[j], prod};
        if (i != j) doc.entries[static_cast<std::size_t>(j) * n + i] = {basis[j], basis[i], prod};
    });
    return doc;
}

table_document build_table(const grassmann_shape& shape, engine_kind engine, bool q0, bool t0,
                           int degree_bound, int jobs) {
    const model_kind model = engine == engine_kind::h ? model_kind::h : model_kind::e;
    return build_table(presentation_ring(model, shape, degree_bound), engine, q0, t0, jobs);
}

std::string table_to_json(const table_document& doc) {
    detail::ordered_json out;
    out["version"] = doc.version;
    out["p"] = doc.p;
    out["m"] = doc.m;
    out["engine"] = to_string(doc.engine);
    out["q0"] = doc.q0;
    out["t0"] = doc.t0;
    detail::ordered_json entries = detail::ordered_json::array();
    for (const auto& e : doc.entries) {
        detail::ordered_json row;
        row["lambda"] = e.lambda.str();
        row["mu"] = e.mu.str();
        row["terms"] = detail::expansion_terms_json(e.product);
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out.dump(1) + "\n";
}

table_document table_from_json(const std::string& text) {
    detail::ordered_json in;
    try {
        in = detail::ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw usage_error(std::string("malformed table JSON: ") + ex.what());
    }
    try {
        table_document doc;
        doc.version = in.at("version").get<std::string>();
        if (doc.version != "1") throw usage_error("unsupported table version " + doc.version);
        doc.p = in.at("p").get<int>();
        doc.m = in.at("m").get<int>();
        doc.engine = engine_from_string(in.at("engine").get<std::string>());
        doc.q0 = in.at("q0").get<bool>();
        doc.t0 = in.at("t0").get<bool>();
        for (const auto& row : in.at("entries")) {
            table_document::entry e;
            e.lambda = partition::parse(row.at("lambda").get<std::string>());
            e.mu = partition::parse(row.at("mu").get<std::string>());
            e.product = detail::expansion_from_terms(row.at("terms"));
            doc.entries.push_back(std::move(e));
        }
        return doc;
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception& ex) {
        throw usage_error(std::string("malformed table JSON: ") + ex.what());
    }
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string table_to_csv(const table_document& doc) {
    std::ostringstream out;
    out << "\"lambda\",\"mu\",\"nu\",\"d\",\"coeff\"\n";
    for (const auto& e : doc.entries)
        for (const auto& [key, c] : e.product.terms())
            out << csv_quote(e.lambda.str()) << ',' << csv_quote(e.mu.str()) << ','
                << csv_quote(key.nu.str()) << ',' << csv_quote(std::to_string(key.d)) << ','
                << csv_quote(c.str()) << '\n';
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw usage_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw usage_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace eqschub
