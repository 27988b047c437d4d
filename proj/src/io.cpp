#include "minangle/io.hpp"

#include <cmath>
#include <fstream>

namespace minangle {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::vector<std::vector<double>> part_to_nested(const CMatrix& m, bool imaginary) {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto& row = out[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(m.cols()));
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row[static_cast<std::size_t>(j)] = imaginary ? m(i, j).imag() : m(i, j).real();
        }
    }
    return out;
}

}  // namespace

nlohmann::json matrix_to_json(const CMatrix& m) {
    return {
        {"rows", m.rows()},
        {"cols", m.cols()},
        {"re", part_to_nested(m, false)},
        {"im", part_to_nested(m, true)},
    };
}

CMatrix matrix_from_json(const nlohmann::json& j) {
    const auto rows = field(j, "rows").get<Eigen::Index>();
    const auto cols = field(j, "cols").get<Eigen::Index>();
    if (rows < 0 || cols < 0) {
        throw ParseError("matrix: negative dimensions");
    }
    const auto& re = field(j, "re");
    const auto& im = field(j, "im");
    if (static_cast<Eigen::Index>(re.size()) != rows ||
        static_cast<Eigen::Index>(im.size()) != rows) {
        throw ParseError("matrix: row count does not match \"rows\"");
    }
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& re_row = re[static_cast<std::size_t>(i)];
        const auto& im_row = im[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(re_row.size()) != cols ||
            static_cast<Eigen::Index>(im_row.size()) != cols) {
            throw ParseError("matrix: column count does not match \"cols\"");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            const double a = re_row[static_cast<std::size_t>(k)].get<double>();
            const double b = im_row[static_cast<std::size_t>(k)].get<double>();
            if (!std::isfinite(a) || !std::isfinite(b)) {
                throw ParseError("matrix: non-finite entry");
            }
            m(i, k) = Complex(a, b);
        }
    }
    return m;
}

nlohmann::json subspace_to_json(const Subspace& s) {
    return {
        {"ambient_dim", s.ambient_dim()},
        {"basis", matrix_to_json(s.basis())},
    };
}

Subspace subspace_from_json(const nlohmann::json& j, const Tolerance& tol) {
    const auto d = field(j, "ambient_dim").get<Eigen::Index>();
    CMatrix basis = matrix_from_json(field(j, "basis"));
    if (basis.rows() != d) {
        throw ParseError("subspace: basis rows do not match ambient_dim");
    }
    try {
        return Subspace(std::move(basis), tol);
    } catch (const Error& e) {
        throw ParseError(std::string("subspace: ") + e.what());
    }
}

nlohmann::json isometry_to_json(const IsometryMap& u) {
    return {
        {"matrix", matrix_to_json(u.matrix)},
        {"conjugate", u.conjugate},
    };
}

IsometryMap isometry_from_json(const nlohmann::json& j, const Tolerance& tol) {
    CMatrix m = matrix_from_json(field(j, "matrix"));
    const bool conj = field(j, "conjugate").get<bool>();
    try {
        return IsometryMap(std::move(m), conj, tol);
    } catch (const Error& e) {
        throw ParseError(std::string("isometry: ") + e.what());
    }
}

nlohmann::json map_to_json(const GrassmannMap& map) {
    nlohmann::json j{
        {"kind", to_string(map.kind())},
        {"n", map.domain_rank()},
        {"d", map.domain_dim()},
    };
    switch (map.kind()) {
        case GrassmannMap::Kind::standard:
        case GrassmannMap::Kind::complement_standard:
            j["isometry"] = isometry_to_json(map.isometry());
            break;
        case GrassmannMap::Kind::table: {
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& [in, out] : map.pairs()) {
                pairs.push_back({subspace_to_json(in), subspace_to_json(out)});
            }
            j["pairs"] = std::move(pairs);
            break;
        }
        case GrassmannMap::Kind::nonstandard_demo:
            j["selector"] = map.rule_name();
            j["selector_rank"] = map.selector_rank();
            break;
    }
    return j;
}

GrassmannMap map_from_json(const nlohmann::json& j, const Tolerance& tol) {
    const auto kind = kind_from_string(field(j, "kind").get<std::string>());
    const auto n = field(j, "n").get<Eigen::Index>();
    const auto d = field(j, "d").get<Eigen::Index>();
    switch (kind) {
        case GrassmannMap::Kind::standard: {
            IsometryMap u = isometry_from_json(field(j, "isometry"), tol);
            if (u.domain_dim() != d) {
                throw ParseError("map: isometry domain does not match \"d\"");
            }
            return GrassmannMap::standard(std::move(u), n);
        }
        case GrassmannMap::Kind::complement_standard: {
            IsometryMap u = isometry_from_json(field(j, "isometry"), tol);
            if (u.domain_dim() != d) {
                throw ParseError("map: isometry domain does not match \"d\"");
            }
            return GrassmannMap::complement_standard(std::move(u), n);
        }
        case GrassmannMap::Kind::table: {
            std::vector<std::pair<Subspace, Subspace>> pairs;
            for (const auto& entry : field(j, "pairs")) {
                if (!entry.is_array() || entry.size() != 2) {
                    throw ParseError("map: each table entry must be a [input, output] pair");
                }
                pairs.emplace_back(subspace_from_json(entry[0], tol),
                                   subspace_from_json(entry[1], tol));
            }
            return GrassmannMap::table(d, n, std::move(pairs));
        }
        case GrassmannMap::Kind::nonstandard_demo: {
            const auto selector = field(j, "selector").get<std::string>();
            const auto rank = field(j, "selector_rank").get<Eigen::Index>();
            if (selector == "pivot_column" && rank == 1) {
                return construct_nonstandard_demo(d, n, 1);
            }
            if (selector == "identity" && rank == n) {
                return construct_nonstandard_demo(d, n, n);
            }
            throw ParseError("map: unknown selector \"" + selector + "\"");
        }
    }
    throw ParseError("map: unknown kind");
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open " + path + " for writing");
    }
    out << j.dump(2) << "\n";
}

}  // namespace minangle
