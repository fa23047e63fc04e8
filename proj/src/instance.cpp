#include "hnnsa/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hnnsa/random.hpp"

namespace hnnsa {

using nlohmann::json;

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), d_(std::move(entries)) {
    if (d_.size() != n_ * n_) {
        throw Error(ErrorCode::invalid_matrix, "distance matrix needs " + std::to_string(n_ * n_) +
                                                   " entries, got " + std::to_string(d_.size()));
    }
    for (std::size_t x = 0; x < n_; ++x) {
        if ((*this)(x, x) != 0.0) {
            throw Error(ErrorCode::invalid_matrix,
                        "distance matrix diagonal entry " + std::to_string(x) + " is not zero");
        }
        for (std::size_t y = 0; y < n_; ++y) {
            const double v = (*this)(x, y);
            if (!std::isfinite(v) || v < 0.0) {
                throw Error(ErrorCode::invalid_matrix, "distance matrix entry (" + std::to_string(x) +
                                                           "," + std::to_string(y) +
                                                           ") is negative or not finite");
            }
            if (v != (*this)(y, x)) {
                throw Error(ErrorCode::invalid_matrix, "distance matrix is not symmetric at (" +
                                                           std::to_string(x) + "," +
                                                           std::to_string(y) + ")");
            }
        }
    }
}

DistanceMatrix DistanceMatrix::euclidean(std::span<const City> cities) {
    const auto n = cities.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const double v = std::hypot(cities[x].x - cities[y].x, cities[x].y - cities[y].y);
            d[x * n + y] = v;
            d[y * n + x] = v;
        }
    }
    return DistanceMatrix(n, std::move(d));
}

double DistanceMatrix::max_entry() const noexcept {
    return d_.empty() ? 0.0 : *std::max_element(d_.begin(), d_.end());
}

Instance::Instance(std::string id, std::vector<City> cities, std::optional<std::uint64_t> seed,
                   std::optional<DistanceMatrix> matrix)
    : id_(std::move(id)), cities_(std::move(cities)), seed_(seed), matrix_(std::move(matrix)) {
    if (cities_.size() < 3) {
        throw Error(ErrorCode::invalid_size,
                    "an instance needs at least 3 cities, got " + std::to_string(cities_.size()));
    }
    std::set<std::string> labels;
    for (const auto& c : cities_) {
        if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
            throw Error(ErrorCode::invalid_argument, "city '" + c.label + "' has a non-finite coordinate");
        }
        if (!labels.insert(c.label).second) {
            throw Error(ErrorCode::invalid_argument, "duplicate city label '" + c.label + "'");
        }
    }
    if (matrix_ && matrix_->size() != cities_.size()) {
        throw Error(ErrorCode::invalid_matrix, "explicit matrix is " + std::to_string(matrix_->size()) +
                                                   "x" + std::to_string(matrix_->size()) + " for " +
                                                   std::to_string(cities_.size()) + " cities");
    }
}

Instance generate_random_instance(std::size_t n, std::uint64_t seed, double bound) {
    if (n < 3) throw Error(ErrorCode::invalid_size, "need at least 3 cities, got " + std::to_string(n));
    if (!(bound > 0.0) || !std::isfinite(bound)) {
        throw Error(ErrorCode::invalid_argument, "bound must be a positive finite number");
    }
    Rng rng(seed);
    std::vector<City> cities;
    cities.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = bound * uniform01(rng);
        const double y = bound * uniform01(rng);
        cities.push_back({"C" + std::to_string(k + 1), x, y});
    }
    return Instance("random-n" + std::to_string(n) + "-s" + std::to_string(seed), std::move(cities), seed);
}

DistanceMatrix distance_matrix(const Instance& inst) {
    if (inst.explicit_matrix()) return *inst.explicit_matrix();
    return DistanceMatrix::euclidean(inst.cities());
}

DistanceMatrix normalize_distances(const DistanceMatrix& m) {
    const double max = m.max_entry();
    if (!(max > 0.0)) {
        throw Error(ErrorCode::degenerate_instance, "cannot normalize an all-zero distance matrix");
    }
    std::vector<double> scaled(m.entries().begin(), m.entries().end());
    for (auto& v : scaled) v /= max;
    return DistanceMatrix(m.size(), std::move(scaled));
}

double tour_length(const DistanceMatrix& m, const Tour& t) {
    if (t.size() != m.size()) {
        throw Error(ErrorCode::invalid_tour, "tour visits " + std::to_string(t.size()) +
                                                 " cities, matrix has " + std::to_string(m.size()));
    }
    const auto n = t.size();
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) total += m(t[k], t[(k + 1) % n]);
    return total;
}

std::string instance_to_json(const Instance& inst) {
    json doc;
    doc["id"] = inst.id();
    doc["seed"] = inst.seed() ? json(*inst.seed()) : json(nullptr);
    json cities = json::array();
    for (const auto& c : inst.cities()) cities.push_back({{"label", c.label}, {"x", c.x}, {"y", c.y}});
    doc["cities"] = std::move(cities);
    if (const auto& m = inst.explicit_matrix()) {
        json rows = json::array();
        for (std::size_t x = 0; x < m->size(); ++x) {
            json row = json::array();
            for (std::size_t y = 0; y < m->size(); ++y) row.push_back((*m)(x, y));
            rows.push_back(std::move(row));
        }
        doc["matrix"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::parse_error, "instance field '" + field + "': " + what);
}

double number_field(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) field_error(where + "." + key, "missing");
    if (!it->is_number()) field_error(where + "." + key, "expected a number");
    return it->get<double>();
}

}  // namespace

Instance instance_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse_error, std::string("malformed instance file: ") + e.what());
    }
    if (!doc.is_object()) field_error("<root>", "expected an object");

    std::string id;
    if (auto it = doc.find("id"); it != doc.end()) {
        if (!it->is_string()) field_error("id", "expected a string");
        id = it->get<std::string>();
    } else {
        field_error("id", "missing");
    }

    std::optional<std::uint64_t> seed;
    if (auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_unsigned()) field_error("seed", "expected an unsigned integer or null");
        seed = it->get<std::uint64_t>();
    }

    const auto cit = doc.find("cities");
    if (cit == doc.end()) field_error("cities", "missing");
    if (!cit->is_array()) field_error("cities", "expected an array");
    std::vector<City> cities;
    for (std::size_t k = 0; k < cit->size(); ++k) {
        const auto& c = (*cit)[k];
        const std::string where = "cities[" + std::to_string(k) + "]";
        if (!c.is_object()) field_error(where, "expected an object");
        City city;
        if (auto lt = c.find("label"); lt != c.end() && lt->is_string()) {
            city.label = lt->get<std::string>();
        } else {
            field_error(where + ".label", "missing or not a string");
        }
        city.x = number_field(c, "x", where);
        city.y = number_field(c, "y", where);
        cities.push_back(std::move(city));
    }

    std::optional<DistanceMatrix> matrix;
    if (auto mit = doc.find("matrix"); mit != doc.end() && !mit->is_null()) {
        if (!mit->is_array()) field_error("matrix", "expected an array of rows");
        const auto n = mit->size();
        std::vector<double> entries;
        entries.reserve(n * n);
        for (std::size_t x = 0; x < n; ++x) {
            const auto& row = (*mit)[x];
            const std::string where = "matrix[" + std::to_string(x) + "]";
            if (!row.is_array() || row.size() != n) field_error(where, "expected " + std::to_string(n) + " numbers");
            for (const auto& v : row) {
                if (!v.is_number()) field_error(where, "expected numbers");
                entries.push_back(v.get<double>());
            }
        }
        matrix = DistanceMatrix(n, std::move(entries));
    }

    return Instance(std::move(id), std::move(cities), seed, std::move(matrix));
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "' for writing");
    out << instance_to_json(inst);
    if (!out) throw Error(ErrorCode::io_error, "failed writing '" + path.string() + "'");
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return instance_from_json(buffer.str());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::parse_error) throw;
        throw Error(ErrorCode::parse_error, path.string() + ": " + e.what());
    }
}

}  // namespace hnnsa
