#include "steklov/json_io.hpp"

#include "steklov/errors.hpp"

namespace steklov::io {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::vector<Rational> rational_list(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from(x, what));
    return out;
}

double real_from(const json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_string()) throw DomainError(std::string(what) + " must be a number or a numeric string");
    const auto text = j.get<std::string>();
    if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError(std::string(what) + ": not a number: '" + text + "'");
    }
    if (used != text.size()) throw DomainError(std::string(what) + ": not a number: '" + text + "'");
    return value;
}

std::size_t index_from(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw DomainError(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

template <class T>
SquareMatrix<T> matrix_from(const json& j, std::size_t dim, bool exact) {
    if (!j.is_array() || j.size() != dim * dim) {
        throw DomainError("matrix must list " + std::to_string(dim * dim) + " row-major entries");
    }
    std::vector<T> entries;
    for (const auto& x : j) {
        if constexpr (std::is_same_v<T, Rational>) {
            entries.push_back(rational_from(x, "matrix entry"));
        } else {
            entries.push_back(exact ? rational_from(x, "matrix entry").get_d() : real_from(x, "matrix entry"));
        }
    }
    return SquareMatrix<T>(dim, std::move(entries));
}

bool exact_mode(const json& j) {
    const auto mode = j.value("mode", std::string("rational"));
    if (mode == "rational") return true;
    if (mode == "float") return false;
    throw DomainError("mode must be \"rational\" or \"float\", got \"" + mode + "\"");
}

}  // namespace

Rational rational_from(const json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
    throw DomainError(std::string(what) + " must be a rational string \"p/q\"");
}

json rational_to(const Rational& value) { return to_string(value); }

BoundaryData boundary_from_json(const json& j) {
    LengthUnit unit = LengthUnit::Plain;
    if (j.is_object() && j.contains("length_unit")) {
        const auto u = j.at("length_unit").get<std::string>();
        if (u == "pi") {
            unit = LengthUnit::PiMultiple;
        } else if (u != "plain") {
            throw DomainError("length_unit must be \"plain\" or \"pi\"");
        }
    }
    return BoundaryData(rational_list(field(j, "type_one"), "type_one"),
                        rational_list(field(j, "type_two"), "type_two"), unit);
}

json to_json(const BoundaryData& data) {
    json out;
    out["type_one"] = json::array();
    out["type_two"] = json::array();
    for (const auto& l : data.type_one()) out["type_one"].push_back(rational_to(l));
    for (const auto& l : data.type_two()) out["type_two"].push_back(rational_to(l));
    if (data.unit() == LengthUnit::PiMultiple) out["length_unit"] = "pi";
    return out;
}

SpectrumUnit unit_from_json(const json& j) {
    const auto u = j.get<std::string>();
    if (u == "pi") return SpectrumUnit::PiScaled;
    if (u == "abs") return SpectrumUnit::Absolute;
    throw DomainError("unit must be \"pi\" or \"abs\", got \"" + u + "\"");
}

ArithmeticSpectrum spectrum_from_json(const json& j) {
    const auto unit = unit_from_json(field(j, "unit"));
    const auto zeros = index_from(field(j, "zeros"), "zeros");
    std::vector<Progression> progs;
    for (const auto& entry : field(j, "progressions")) {
        if (!entry.is_array() || entry.size() != 2) throw DomainError("progression must be [\"p/q\", multiplicity]");
        progs.push_back({rational_from(entry[0], "difference"), index_from(entry[1], "multiplicity")});
    }
    return ArithmeticSpectrum(unit, zeros, std::move(progs));
}

json to_json(const ArithmeticSpectrum& spectrum) {
    json out;
    out["unit"] = unit_name(spectrum.unit());
    out["zeros"] = spectrum.zeros();
    out["progressions"] = json::array();
    for (const auto& p : spectrum.progressions()) {
        out["progressions"].push_back(json::array({rational_to(p.difference), p.multiplicity}));
    }
    return out;
}

SpectrumView view_from_json(const json& j) {
    SpectrumView view{unit_from_json(field(j, "unit")), rational_list(field(j, "values"), "values")};
    validate_view(view);
    return view;
}

json to_json(const SpectrumView& view, bool with_decimals) {
    json out;
    out["unit"] = unit_name(view.unit);
    out["values"] = json::array();
    for (const auto& v : view.values) out["values"].push_back(rational_to(v));
    if (with_decimals) {
        out["approx"] = json::array();
        for (const auto& v : view.values) {
            out["approx"].push_back(view.unit == SpectrumUnit::PiScaled ? v.get_d() * 3.141592653589793 : v.get_d());
        }
    }
    return out;
}

json to_json(const BoundaryDataClass& cls) {
    json out;
    out["r"] = cls.r();
    out["s"] = cls.s();
    out["merged_lengths"] = json::array();
    for (const auto& l : cls.merged_lengths()) out["merged_lengths"].push_back(rational_to(l));
    return out;
}

json to_json(const ApproxDecomposition& dec) {
    json out;
    out["heuristic"] = dec.heuristic;
    out["zeros"] = dec.zeros;
    out["progressions"] = json::array();
    for (const auto& [d, mu] : dec.progressions) out["progressions"].push_back(json::array({d, mu}));
    return out;
}

OrthogonalGroup group_from_json(const json& j) {
    const std::size_t dim = index_from(field(j, "dim"), "dim");
    if (dim == 0) throw DomainError("dim must be >= 1");
    const bool exact = exact_mode(j);
    const std::size_t max_order = j.contains("max_order") ? index_from(j.at("max_order"), "max_order") : 100000;
    const auto& gens = field(j, "generators");
    if (!gens.is_array() || gens.empty()) throw DomainError("generators must be a non-empty array");
    if (exact) {
        std::vector<RationalMatrix> ms;
        for (const auto& g : gens) ms.push_back(matrix_from<Rational>(g, dim, true));
        return close_group(ms, max_order);
    }
    const double tol = j.contains("tolerance") ? real_from(j.at("tolerance"), "tolerance") : kDefaultTolerance;
    std::vector<RealMatrix> ms;
    for (const auto& g : gens) ms.push_back(matrix_from<double>(g, dim, false));
    return close_group(ms, tol, max_order);
}

json to_json(const HarmonicDimensionTable& table) {
    return json{{"group_order", table.group_order}, {"max_degree", table.max_degree()}, {"dims", table.dims}};
}

json to_json(const FourierDTN& dtn) {
    json out;
    out["label"] = dtn.label;
    out["modes"] = json::array();
    for (std::size_t j = 0; j < dtn.modes(); ++j) {
        out["modes"].push_back(
            {{"mode", j}, {"eigenvalue", rational_to(dtn.eigenvalue[j])}, {"multiplicity", dtn.multiplicity[j]}});
    }
    return out;
}

FiniteGroup finite_group_from_json(const json& j) {
    const std::size_t order = index_from(field(j, "order"), "order");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : field(j, "table")) {
        std::vector<std::size_t> r;
        for (const auto& x : row) r.push_back(index_from(x, "table entry"));
        table.push_back(std::move(r));
    }
    if (table.size() != order) throw DomainError("table has " + std::to_string(table.size()) + " rows, order is " +
                                                 std::to_string(order));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup(std::move(table), std::move(labels));
}

json to_json(const FiniteGroup& group) {
    return json{{"order", group.order()}, {"table", group.table()}, {"labels", group.labels()}};
}

SubgroupCollection collection_from_json(const FiniteGroup& group, const json& j) {
    if (!j.is_array()) throw DomainError("collection must be an array of index arrays");
    std::vector<std::vector<std::size_t>> subgroups;
    for (const auto& s : j) {
        std::vector<std::size_t> members;
        for (const auto& x : s) members.push_back(index_from(x, "subgroup element"));
        subgroups.push_back(std::move(members));
    }
    return SubgroupCollection(group, std::move(subgroups));
}

MatrixRealization realization_from_json(const FiniteGroup& group, const json& j) {
    const std::size_t dim = index_from(field(j, "dim"), "dim");
    const bool exact = exact_mode(j);
    const auto& images = field(j, "images");
    if (exact) {
        std::vector<RationalMatrix> ms;
        for (const auto& g : images) ms.push_back(matrix_from<Rational>(g, dim, true));
        return realize(group, ms);
    }
    const double tol = j.contains("tolerance") ? real_from(j.at("tolerance"), "tolerance") : kDefaultTolerance;
    std::vector<RealMatrix> ms;
    for (const auto& g : images) ms.push_back(matrix_from<double>(g, dim, false));
    return realize(group, ms, tol);
}

json to_json(const SunadaReport& report, const FiniteGroup& group) {
    json out;
    out["holds"] = report.holds;
    out["classes"] = json::array();
    for (const auto& c : report.classes) {
        out["classes"].push_back({{"representative", group.label(c.representative)},
                                  {"size", c.class_size},
                                  {"lhs", rational_to(c.lhs)},
                                  {"rhs", rational_to(c.rhs)}});
    }
    return out;
}

json to_json(const PermutationCharacterReport& report) {
    return json{{"equal", report.equal}, {"chi_h", report.chi_h}, {"chi_k", report.chi_k}};
}

json to_json(const BallCheckReport& report) {
    return json{{"isospectral", report.isospectral},
                {"max_degree", report.max_degree},
                {"union_h", to_json(report.union_h)},
                {"union_k", to_json(report.union_k)}};
}

CellComplex cells_from_json(const json& j) {
    CellComplex cc;
    for (const auto& c : field(j, "cells")) {
        const auto dim = index_from(field(c, "dim"), "dim");
        const auto iso = index_from(field(c, "isotropy"), "isotropy");
        if (dim > 2) throw DomainError("cell dimension must be 0, 1 or 2");
        if (iso == 0) throw DomainError("isotropy order must be >= 1");
        cc.cells.push_back({static_cast<int>(dim), iso});
    }
    return cc;
}

json to_json(const BoundReport& report) {
    return json{{"regime", regime_name(report.regime)},
                {"excess", rational_to(report.excess)},
                {"rhs", rational_to(report.rhs)},
                {"conformal_invariant", conformal_name(report.conformal)}};
}

}  // namespace steklov::io
