#include "eqschub/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "eqschub/table.hpp"
#include "eqschub/detail/json_util.hpp"

namespace eqschub {

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("EQSCHUB_CACHE_DIR"); env && *env) return env;
    return "cache";
}

std::string ring_cache_path(const std::string& dir, model_kind model,
                            const grassmann_shape& shape, int degree_bound) {
    return dir + "/ring_" + to_string(model) + "_p" + std::to_string(shape.p) + "_m" +
           std::to_string(shape.m) + "_D" + std::to_string(degree_bound) + ".json";
}

std::string ring_to_json(const presentation_ring& ring) {
    detail::ordered_json out;
    out["version"] = "1";
    out["kind"] = "ring-normal-forms";
    out["model"] = to_string(ring.model());
    out["p"] = ring.shape().p;
    out["m"] = ring.shape().m;
    out["bound"] = ring.degree_bound();
    detail::ordered_json rels = detail::ordered_json::array();
    for (const poly& r : ring.relations()) rels.push_back(r.str());
    out["relations"] = std::move(rels);
    detail::ordered_json entries = detail::ordered_json::array();
    for (const auto& [alpha, nf] : ring.normal_forms()) {
        detail::ordered_json row;
        row["monomial"] = poly::term(alpha, 1).str();
        row["terms"] = detail::expansion_terms_json(nf);
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out.dump(1) + "\n";
}

namespace {

monomial parse_monomial(const std::string& text) {
    const poly f = poly::parse(text);
    if (f.n_terms() != 1) throw usage_error("expected a single monomial, got '" + text + "'");
    const auto& [m, c] = *f.terms().begin();
    if (!(c == ZZ(1))) throw usage_error("expected a monic monomial, got '" + text + "'");
    return m;
}

} // namespace

presentation_ring ring_from_json(const std::string& text, model_kind model,
                                 const grassmann_shape& shape, int degree_bound) {
    detail::ordered_json in;
    try {
        in = detail::ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw usage_error(std::string("malformed cache JSON: ") + ex.what());
    }
    try {
        if (in.at("version").get<std::string>() != "1")
            throw usage_error("unsupported cache version");
        if (in.at("kind").get<std::string>() != "ring-normal-forms")
            throw usage_error("not a ring cache file");
        if (in.at("model").get<std::string>() != to_string(model) ||
            in.at("p").get<int>() != shape.p || in.at("m").get<int>() != shape.m ||
            in.at("bound").get<int>() != degree_bound)
            throw usage_error("cache header does not match the requested ring");
        std::vector<std::string> stored_relations;
        for (const auto& r : in.at("relations"))
            stored_relations.push_back(r.get<std::string>());
        presentation_ring::nf_table table;
        for (const auto& row : in.at("entries")) {
            monomial alpha = parse_monomial(row.at("monomial").get<std::string>());
            if (!table.emplace(std::move(alpha), detail::expansion_from_terms(row.at("terms")))
                     .second)
                throw usage_error("duplicate cache entry");
        }
        presentation_ring ring =
            presentation_ring::from_normal_forms(model, shape, degree_bound, std::move(table));
        if (stored_relations.size() != ring.relations().size())
            throw usage_error("cache relation list does not match the presentation");
        for (std::size_t i = 0; i < stored_relations.size(); ++i)
            if (stored_relations[i] != ring.relations()[i].str())
                throw usage_error("cache relation text does not match the presentation");
        return ring;
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception& ex) {
        throw usage_error(std::string("malformed cache JSON: ") + ex.what());
    }
}

presentation_ring get_ring(model_kind model, const grassmann_shape& shape, int degree_bound,
                           const std::string& cache_dir) {
    const std::string path = ring_cache_path(cache_dir, model, shape, degree_bound);
    if (std::filesystem::exists(path)) {
        try {
            return ring_from_json(read_file(path), model, shape, degree_bound);
        } catch (const usage_error& ex) {
            std::cerr << "cache: ignoring " << path << ": " << ex.what() << "\n";
        }
    }
    presentation_ring ring(model, shape, degree_bound);
    write_file_atomic(path, ring_to_json(ring));
    return ring;
}

} // namespace eqschub
