#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "steklov/ball_quotients.hpp"
#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"
#include "steklov/inverse.hpp"
#include "steklov/json_io.hpp"
#include "steklov/spectra.hpp"
#include "steklov/sunada.hpp"

namespace {

using namespace steklov;
using steklov::io::json;
using steklov::io::to_json;

constexpr const char* kVersion = "0.1.0";
constexpr int kUsageError = 1;
constexpr int kDemoFailed = 5;

// Inline JSON if the argument starts with '{' or '[', stdin for "" or "-",
// otherwise a file path.
json read_json(const std::string& arg) {
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (arg.empty() || arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw DomainError("cannot open input file '" + arg + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return json::parse(text);
}

Rational rational_arg(const std::string& text, const char* what) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw DomainError(std::string(what) + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Schemas

const std::map<std::string, json>& schemas() {
    static const std::map<std::string, json> table = [] {
        const json rational = "string \"p/q\", integer string or finite decimal";
        const json boundary = {{"type_one", json::array({rational})},
                               {"type_two", json::array({rational})},
                               {"length_unit", "optional: \"plain\" (default) or \"pi\""}};
        const json view = {{"unit", "\"pi\" | \"abs\""}, {"values", json::array({rational})}};
        const json group = {{"dim", "integer >= 1"},
                            {"mode", "\"rational\" (default) | \"float\""},
                            {"generators", "array of row-major entry arrays"},
                            {"max_order", "optional integer, default 100000"},
                            {"tolerance", "optional number, default 1e-9 (float mode)"}};
        const json finite_group = {
            {"order", "integer"}, {"table", "order x order array, table[a][b] = a*b"}, {"labels", "optional"}};
        std::map<std::string, json> s;
        s["spectrum"] = {{"flags", {{"--boundary", "BoundaryData JSON (inline, path, or stdin)"}, {"--n", "integer >= 1"}}},
                         {"input", boundary},
                         {"output", {{"boundary", boundary}, {"spectrum", "ArithmeticSpectrum"}, {"view", view}}}};
        s["invert"] = {{"flags",
                        {{"--view", "SpectrumView JSON (inline, path, or stdin)"},
                         {"--tolerance", "optional epsilon; switches to heuristic peeling of {\"values\": [numbers]}"}}},
                       {"input", view},
                       {"output", {{"r", "integer"}, {"s", "integer"}, {"merged_lengths", json::array({rational})},
                                   {"members", "array of BoundaryData"}, {"decomposition", "ArithmeticSpectrum"}}},
                       {"exit_codes", {{"2", "PeelInconsistency"}, {"3", "InfeasibleCounts"}}}};
        s["equivalent"] = {{"flags", {{"--first", "BoundaryData JSON"}, {"--second", "BoundaryData JSON"}}},
                           {"output", {{"equivalent", "bool"}, {"spectra_equal", "bool"}, {"first", "class"},
                                       {"second", "class"}}}};
        s["quotient-ball"] = {{"flags", {{"--group", "group JSON"}, {"--radius", rational}, {"--max-degree", "M"}}},
                              {"input", group},
                              {"output", view}};
        s["cone"] = {{"flags", {{"--k", "cone order >= 1"}, {"--modes", "highest Fourier mode J"}}},
                     {"output", {{"cone", "FourierDTN"}, {"disk", "FourierDTN"}, {"verdict", "IDENTICAL | DIFFERENT"}}}};
        s["isospectral"] = {{"flags", {{"--first", "group JSON"}, {"--second", "group JSON"}, {"--max-degree", "M"}}},
                            {"output", {{"isospectral", "bool"}, {"max_degree", "M"},
                                        {"first_difference", "degree or null"}}}};
        s["sunada"] = {{"flags",
                        {{"--group", finite_group},
                         {"--collections", {{"H", "array of index arrays"}, {"K", "array of index arrays"}}},
                         {"--matrix-group", {{"dim", "n"}, {"mode", "rational | float"},
                                             {"images", "one row-major matrix per group element"}}},
                         {"--max-degree", "M, default 30"}}},
                       {"output", {{"sunada", "per-class report"}, {"permutation_characters", "report"},
                                   {"ball_check", "present with --matrix-group"}}}};
        s["lens-sigma2"] = {{"flags", {{"--q", "integer >= 1"}, {"--p", "comma-separated integers"}}},
                            {"output", {{"sigma2", "integer"}, {"witness", "integer array"}}}};
        s["sharpness"] = {{"flags", {{"--m", "integer >= 1"}, {"--jmax", "integer >= 2"}}},
                          {"output", {{"rows", "array of {j, q, sigma2, holds}"}, {"all_hold", "bool"}}}};
        s["euler"] = {{"flags", {{"--cells", "{\"cells\": [{\"dim\": 0|1|2, \"isotropy\": k}]}"}}},
                      {"output", {{"chi", rational}}}};
        s["regime"] = {{"flags", {{"--chi", rational}, {"--r", "integer"}, {"--s", "integer"}, {"--k", "integer >= 1"},
                                  {"--A", rational}, {"--B", rational},
                                  {"--conformal", "zero | positive-unknown | unspecified"}}},
                       {"output", {{"regime", "NonnegativeExcess | NegativeExcess"}, {"excess", rational},
                                   {"rhs", rational}, {"conformal_invariant", "flag"}}}};
        s["demo"] = {{"flags", {{"name", "optional example name; all when omitted"}, {"--k", "cone order for cone"}}},
                     {"output", {{"examples", "array of {example, pass, ...}"}, {"all_pass", "bool"}}},
                     {"exit_codes", {{"5", "some example failed"}}}};
        return s;
    }();
    return table;
}

// ---------------------------------------------------------------------------
// Demo examples. Each returns its data plus "pass".

json demo_disk(std::size_t) {
    auto view = enumerate(canonical_disk_spectrum(Length(Rational(2))), 7);
    std::vector<Rational> expected{0, 1, 1, 2, 2, 3, 3};
    auto abs = enumerate(canonical_disk_spectrum(Length(Rational(2)), LengthUnit::PiMultiple), 7);
    return {{"example", "disk"},
            {"view", to_json(view)},
            {"pass", view.values == expected && abs.values == expected}};
}

json demo_half_disk(std::size_t) {
    auto view = enumerate(canonical_half_disk_spectrum(Length(Rational(1))), 5);
    std::vector<Rational> expected{0, 1, 2, 3, 4};
    return {{"example", "half-disk"}, {"view", to_json(view)}, {"pass", view.values == expected}};
}

json demo_ell1ell2(std::size_t) {
    BoundaryData a({Rational(2)}, {Rational(2), Rational(2)});
    BoundaryData b({Rational(4)}, {Rational(1), Rational(1)});
    auto sa = canonical_spectrum(a);
    auto sb = canonical_spectrum(b);
    const bool equal = spectra_equal(sa, sb) && data_equivalent(a, b);
    return {{"example", "ell1ell2"},
            {"first", {{"boundary", to_json(a)}, {"spectrum", to_json(sa)}, {"view", to_json(enumerate(sa, 12))}}},
            {"second", {{"boundary", to_json(b)}, {"spectrum", to_json(sb)}, {"view", to_json(enumerate(sb, 12))}}},
            {"verdict", equal ? "EQUAL" : "DIFFERENT"},
            {"pass", equal}};
}

json demo_peel(std::size_t) {
    SpectrumView view{SpectrumUnit::Absolute, {0, 1, 1, 2, 2, 3, 3}};
    auto dec = peel_progressions(view);
    ArithmeticSpectrum expected(SpectrumUnit::Absolute, 1, {{Rational(1), 2}});
    return {{"example", "peel"}, {"decomposition", to_json(dec)}, {"pass", dec == expected}};
}

json demo_recover(std::size_t) {
    BoundaryData a({Rational(2)}, {Rational(2), Rational(2)});
    BoundaryData b({Rational(4)}, {Rational(1), Rational(1)});
    auto ca = recover_boundary_class(peel_progressions(enumerate(canonical_spectrum(a), 40)));
    auto cb = recover_boundary_class(peel_progressions(enumerate(canonical_spectrum(b), 40)));
    BoundaryDataClass expected(1, 2, {2, 2, 4, 4});
    return {{"example", "recover"}, {"class", to_json(ca)}, {"pass", ca == expected && cb == expected}};
}

json demo_members(std::size_t) {
    auto pair = enumerate_class_members(BoundaryDataClass(1, 2, {2, 2, 4, 4}));
    auto single = enumerate_class_members(BoundaryDataClass(0, 3, {2, 4, 6}));
    std::vector<BoundaryData> pair_expected{BoundaryData({Rational(2)}, {Rational(2), Rational(2)}),
                                            BoundaryData({Rational(4)}, {Rational(1), Rational(1)})};
    std::vector<BoundaryData> single_expected{BoundaryData({}, {Rational(1), Rational(2), Rational(3)})};
    json jp = json::array(), js = json::array();
    for (const auto& m : pair) jp.push_back(to_json(m));
    for (const auto& m : single) js.push_back(to_json(m));
    return {{"example", "members"},
            {"r1_s2", jp},
            {"r0_s3", js},
            {"pass", pair == pair_expected && single == single_expected}};
}

std::vector<RationalMatrix> axis_rotations() {
    const int x[] = {1, -1, -1}, y[] = {-1, 1, -1}, z[] = {-1, -1, 1};
    return {diagonal_signs(x), diagonal_signs(y), diagonal_signs(z)};
}

json demo_closure(std::size_t) {
    auto klein = close_group(axis_rotations());
    auto z4 = cyclic_rotation_group(4);
    return {{"example", "closure"},
            {"klein_order", klein.order()},
            {"z4_order", z4.order()},
            {"pass", klein.order() == 4 && z4.order() == 4}};
}

json demo_harmonic(std::size_t) {
    bool ok = true;
    auto trivial = invariant_harmonic_dims(trivial_group(2), 12);
    for (std::size_t m = 0; m <= 12; ++m) ok &= trivial.dims[m] == (m == 0 ? 1u : 2u);
    json zk = json::object();
    for (std::size_t k = 1; k <= 6; ++k) {
        auto t = invariant_harmonic_dims(cyclic_rotation_group(k), 12);
        for (std::size_t m = 0; m <= 12; ++m) ok &= t.dims[m] == (m == 0 ? 1u : (m % k == 0 ? 2u : 0u));
        zk[std::to_string(k)] = to_json(t);
    }
    return {{"example", "harmonic"}, {"trivial", to_json(trivial)}, {"cyclic", zk}, {"pass", ok}};
}

json demo_ball(std::size_t) {
    std::vector<Rational> expected{0, 1, 1, 2, 2, 3, 3};
    bool ok = quotient_ball_spectrum(trivial_group(2), Rational(1), 3).values == expected;
    json cones = json::object();
    for (std::size_t k = 1; k <= 6; ++k) {
        auto view = quotient_ball_spectrum(cyclic_rotation_group(k), Rational(k), 3 * k);
        ok &= view.values == expected;
        cones[std::to_string(k)] = to_json(view);
    }
    return {{"example", "ball"}, {"cyclic_radius_k", cones}, {"pass", ok}};
}

json demo_cone(std::size_t k) {
    const std::size_t modes = 20;
    auto cone = dtn_cone(k, modes);
    auto disk = dtn_disk(Rational(1), modes);
    const bool ok = same_operator(cone, disk);
    return {{"example", "cone"},
            {"k", k},
            {"cone", to_json(cone)},
            {"disk", to_json(disk)},
            {"verdict", ok ? "IDENTICAL" : "DIFFERENT"},
            {"pass", ok}};
}

json demo_sunada(std::size_t) {
    auto g = klein_four_group();
    SubgroupCollection h(g, {{0, 1}, {0, 2}, {0, 3}});
    SubgroupCollection k(g, {{0}, {0, 1, 2, 3}, {0, 1, 2, 3}});
    auto classes = conjugacy_classes(g);
    auto condition = sunada_condition(g, h, k);
    auto characters = permutation_character_equal(g, h, k);

    const int id[] = {1, 1, 1}, rx[] = {1, -1, -1}, ry[] = {-1, 1, -1}, rz[] = {-1, -1, 1};
    const int pxy[] = {1, 1, -1}, pxz[] = {1, -1, 1};
    auto quot1 = realize(g, {diagonal_signs(id), diagonal_signs(rx), diagonal_signs(ry), diagonal_signs(rz)});
    auto quot2 = realize(g, {diagonal_signs(id), diagonal_signs(pxy), diagonal_signs(pxz), diagonal_signs(rx)});
    auto ball1 = sunada_ball_check(g, quot1, h, k, 30);
    auto ball2 = sunada_ball_check(g, quot2, h, k, 30);

    const bool ok = classes.size() == 4 && condition.holds && characters.equal && ball1.isospectral &&
                    ball2.isospectral;
    return {{"example", "sunada"},
            {"conjugacy_classes", classes.size()},
            {"sunada", to_json(condition, g)},
            {"permutation_characters", to_json(characters)},
            {"rotations_isospectral_to_degree", ball1.isospectral ? json(ball1.max_degree) : json(nullptr)},
            {"reflections_isospectral_to_degree", ball2.isospectral ? json(ball2.max_degree) : json(nullptr)},
            {"pass", ok}};
}

json demo_lens(std::size_t) {
    auto r = sigma2_lens(LensParams(9, {1, 3}));
    const bool ok = r.sigma2 == 3 && verify_sharpness_family(2, 2) && verify_sharpness_family(2, 3);
    return {{"example", "lens"}, {"q9_p13", {{"sigma2", r.sigma2}, {"witness", r.witness}}}, {"pass", ok}};
}

json demo_euler(std::size_t) {
    bool ok = true;
    json chis = json::object();
    for (std::uint64_t k : {2u, 3u, 5u}) {
        auto chi = euler_characteristic(cone_complex(k));
        ok &= chi == Rational(1, k);
        chis[std::to_string(k)] = io::rational_to(chi);
    }
    // The order-k cone is double covered by the order-k/2 cone (the disk for k = 2).
    ok &= euler_characteristic(disk_complex()) == 2 * euler_characteristic(cone_complex(2));
    ok &= euler_characteristic(cone_complex(3)) == 2 * euler_characteristic(cone_complex(6));
    return {{"example", "euler"}, {"cones", chis}, {"pass", ok}};
}

json demo_regime(std::size_t) {
    bool ok = true;
    for (std::uint64_t k0 = 1; k0 <= 10; ++k0) {
        auto report = bound_regime({Rational(1, k0), 1, 0}, 1, Rational(1), Rational(1), ConformalFlag::Zero);
        ok &= report.regime == Regime::NonnegativeExcess;
    }
    return {{"example", "regime"}, {"pass", ok}};
}

const std::vector<std::pair<std::string, std::function<json(std::size_t)>>>& demos() {
    static const std::vector<std::pair<std::string, std::function<json(std::size_t)>>> list{
        {"disk", demo_disk},       {"half-disk", demo_half_disk}, {"ell1ell2", demo_ell1ell2},
        {"peel", demo_peel},       {"recover", demo_recover},     {"members", demo_members},
        {"closure", demo_closure}, {"harmonic", demo_harmonic},   {"ball", demo_ball},
        {"cone", demo_cone},       {"sunada", demo_sunada},       {"lens", demo_lens},
        {"euler", demo_euler},     {"regime", demo_regime}};
    return list;
}

// ---------------------------------------------------------------------------

ConformalFlag conformal_from(const std::string& name) {
    if (name == "zero") return ConformalFlag::Zero;
    if (name == "positive-unknown") return ConformalFlag::PositiveUnknown;
    return ConformalFlag::Unspecified;
}

json approx_invert(const json& input, double epsilon) {
    const json& values = input.is_object() ? input.at("values") : input;
    if (!values.is_array()) throw DomainError("values must be an array of numbers");
    std::vector<double> xs;
    for (const auto& v : values) {
        if (!v.is_number()) throw DomainError("heuristic mode needs numeric values");
        xs.push_back(v.get<double>());
    }
    std::sort(xs.begin(), xs.end());
    auto out = to_json(peel_progressions_approx(xs, epsilon));
    out["epsilon"] = epsilon;
    return out;
}

json exact_invert(const json& input) {
    auto dec = peel_progressions(io::view_from_json(input));
    auto cls = recover_boundary_class(dec);
    auto out = to_json(cls);
    out["members"] = json::array();
    for (const auto& m : enumerate_class_members(cls)) out["members"].push_back(to_json(m));
    out["decomposition"] = to_json(dec);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steklov spectra of orbifolds: exact computation, comparison and inversion", "steklov"};
    app.fallthrough();
    bool show_version = false, with_float = false;
    std::string schema_for;
    app.add_flag("--version", show_version, "Print version information as JSON");
    app.add_option("--schema", schema_for, "Print the JSON schema of a subcommand");
    app.add_flag("--float", with_float, "Add approximate decimal renderings next to exact values");

    std::string boundary, view_arg, first, second, group_arg, collections_arg, matrix_group_arg, cells_arg;
    std::string radius = "1", chi, a_const, b_const, conformal = "unspecified", demo_name;
    std::size_t n = 10, max_degree = 10, k = 1, modes = 20, m = 2, jmax = 6;
    std::size_t r = 0, s = 0;
    std::optional<double> tolerance;
    std::optional<std::size_t> sunada_degree;
    std::int64_t q = 1;
    std::vector<std::int64_t> p;

    auto* spectrum = app.add_subcommand("spectrum", "Canonical spectrum of boundary data");
    spectrum->add_option("--boundary", boundary, "BoundaryData JSON, path or '-' for stdin");
    spectrum->add_option("--n", n, "Number of eigenvalues")->check(CLI::PositiveNumber);

    auto* invert = app.add_subcommand("invert", "Recover the boundary-data class of a spectrum prefix");
    invert->add_option("--view", view_arg, "SpectrumView JSON, path or '-' for stdin");
    invert->add_option("--tolerance", tolerance, "Heuristic epsilon for floating-point input");

    auto* equivalent = app.add_subcommand("equivalent", "Compare two boundary data");
    equivalent->add_option("--first", first)->required();
    equivalent->add_option("--second", second)->required();

    auto* quotient = app.add_subcommand("quotient-ball", "Steklov spectrum of a finite quotient of a ball");
    quotient->add_option("--group", group_arg, "Group JSON, path or '-' for stdin");
    quotient->add_option("--radius", radius);
    quotient->add_option("--max-degree", max_degree);

    auto* cone = app.add_subcommand("cone", "Dirichlet-to-Neumann tables of a cone and of the unit disk");
    cone->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    cone->add_option("--modes", modes);

    auto* isospectral = app.add_subcommand("isospectral", "Compare two ball quotients up to a degree");
    isospectral->add_option("--first", first)->required();
    isospectral->add_option("--second", second)->required();
    isospectral->add_option("--max-degree", max_degree);

    auto* sunada = app.add_subcommand("sunada", "Check the Sunada condition for two subgroup collections");
    sunada->add_option("--group", group_arg)->required();
    sunada->add_option("--collections", collections_arg)->required();
    sunada->add_option("--matrix-group", matrix_group_arg);
    sunada->add_option("--max-degree", sunada_degree);

    auto* lens = app.add_subcommand("lens-sigma2", "sigma_2 of a lens-type ball quotient");
    lens->add_option("--q", q)->required();
    lens->add_option("--p", p)->required()->delimiter(',');

    auto* sharpness = app.add_subcommand("sharpness", "Check sigma_2 = q^(1/m) on the sharpness family");
    sharpness->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    sharpness->add_option("--jmax", jmax)->required()->check(CLI::Range(2, 1000000));

    auto* euler = app.add_subcommand("euler", "Orbifold Euler characteristic of a cell complex");
    euler->add_option("--cells", cells_arg, "Cells JSON, path or '-' for stdin");

    auto* regime = app.add_subcommand("regime", "Classify the eigenvalue bound regime");
    regime->add_option("--chi", chi)->required();
    regime->add_option("--r", r)->required();
    regime->add_option("--s", s)->required();
    regime->add_option("--k", k)->required();
    regime->add_option("--A", a_const)->required();
    regime->add_option("--B", b_const)->required();
    regime->add_option("--conformal", conformal)
        ->check(CLI::IsMember({"zero", "positive-unknown", "unspecified"}));

    auto* demo = app.add_subcommand("demo", "Reproduce the worked examples");
    std::vector<std::string> demo_names;
    for (const auto& [name, fn] : demos()) demo_names.push_back(name);
    demo->add_option("name", demo_name)->check(CLI::IsMember(demo_names));
    auto* demo_k = demo->add_option("--k", k)->check(CLI::PositiveNumber);

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        std::cerr << sub->help();
        if (sub != &app && schemas().contains(sub->get_name())) {
            std::cerr << "schema: " << schemas().at(sub->get_name()).dump(2) << "\n";
        }
        return kUsageError;
    }

    if (show_version) {
        std::cout << json{{"name", "steklov"}, {"version", kVersion}}.dump(2) << "\n";
        return 0;
    }
    if (!schema_for.empty()) {
        if (!schemas().contains(schema_for)) {
            std::cerr << "unknown subcommand '" << schema_for << "'\n";
            return kUsageError;
        }
        std::cout << json{{"subcommand", schema_for}, {"schema", schemas().at(schema_for)}}.dump(2) << "\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kUsageError;
    }

    try {
        json out;
        int code = 0;
        if (*spectrum) {
            auto data = io::boundary_from_json(read_json(boundary));
            auto spec = canonical_spectrum(data);
            out = {{"boundary", to_json(data)}, {"spectrum", to_json(spec)},
                   {"view", to_json(enumerate(spec, n), with_float)}};
        } else if (*invert) {
            auto input = read_json(view_arg);
            if (tolerance) {
                if (!(*tolerance > 0)) throw DomainError("tolerance must be positive");
                out = approx_invert(input, *tolerance);
            } else {
                out = exact_invert(input);
            }
        } else if (*equivalent) {
            auto a = io::boundary_from_json(read_json(first));
            auto b = io::boundary_from_json(read_json(second));
            const bool comparable = a.unit() == b.unit();
            out = {{"equivalent", data_equivalent(a, b)},
                   {"spectra_equal", comparable && spectra_equal(canonical_spectrum(a), canonical_spectrum(b))},
                   {"first", to_json(boundary_class_of(a))},
                   {"second", to_json(boundary_class_of(b))}};
        } else if (*quotient) {
            auto g = io::group_from_json(read_json(group_arg));
            out = to_json(quotient_ball_spectrum(g, rational_arg(radius, "--radius"), max_degree), with_float);
            out["group_order"] = g.order();
            out["max_degree"] = max_degree;
        } else if (*cone) {
            auto c = dtn_cone(k, modes);
            auto d = dtn_disk(Rational(1), modes);
            out = {{"cone", to_json(c)}, {"disk", to_json(d)},
                   {"verdict", same_operator(c, d) ? "IDENTICAL" : "DIFFERENT"}};
        } else if (*isospectral) {
            auto v = steklov_isospectral_quotients(io::group_from_json(read_json(first)),
                                                   io::group_from_json(read_json(second)), max_degree);
            out = {{"isospectral", v.isospectral},
                   {"max_degree", v.max_degree},
                   {"first_difference", v.first_difference ? json(*v.first_difference) : json(nullptr)},
                   {"first", to_json(v.first)},
                   {"second", to_json(v.second)}};
        } else if (*sunada) {
            auto g = io::finite_group_from_json(read_json(group_arg));
            auto c = read_json(collections_arg);
            if (!c.is_object() || !c.contains("H") || !c.contains("K")) {
                throw DomainError("collections must be {\"H\": [...], \"K\": [...]}");
            }
            auto h = io::collection_from_json(g, c.at("H"));
            auto kk = io::collection_from_json(g, c.at("K"));
            out = {{"sunada", to_json(sunada_condition(g, h, kk), g)},
                   {"permutation_characters", to_json(permutation_character_equal(g, h, kk))}};
            if (!matrix_group_arg.empty()) {
                auto realization = io::realization_from_json(g, read_json(matrix_group_arg));
                out["ball_check"] = to_json(sunada_ball_check(g, realization, h, kk, sunada_degree.value_or(30)));
            } else if (sunada_degree) {
                throw DomainError("--max-degree needs --matrix-group");
            }
        } else if (*lens) {
            LensParams params(q, p);
            auto result = sigma2_lens(params);
            out = {{"q", params.q()}, {"p", params.p()}, {"sigma2", result.sigma2}, {"witness", result.witness}};
        } else if (*sharpness) {
            out = {{"m", m}, {"rows", json::array()}};
            bool all = true;
            for (std::size_t j = 2; j <= jmax; ++j) {
                auto params = sharpness_params(static_cast<std::int64_t>(j), static_cast<std::int64_t>(m));
                auto result = sigma2_lens(params);
                const bool holds = result.sigma2 == static_cast<std::int64_t>(j);
                all &= holds;
                out["rows"].push_back(
                    {{"j", j}, {"q", params.q()}, {"p", params.p()}, {"sigma2", result.sigma2}, {"holds", holds}});
            }
            out["all_hold"] = all;
        } else if (*euler) {
            out = {{"chi", io::rational_to(euler_characteristic(io::cells_from_json(read_json(cells_arg))))}};
        } else if (*regime) {
            auto report = bound_regime({rational_arg(chi, "--chi"), r, s}, k, rational_arg(a_const, "--A"),
                                       rational_arg(b_const, "--B"), conformal_from(conformal));
            out = to_json(report);
        } else if (*demo) {
            const std::size_t cone_k = demo_k->count() ? k : 7;
            out = {{"examples", json::array()}};
            bool all = true;
            for (const auto& [name, fn] : demos()) {
                if (!demo_name.empty() && name != demo_name) continue;
                json result = fn(name == "cone" ? cone_k : 0);
                all &= result.at("pass").get<bool>();
                out["examples"].push_back(std::move(result));
            }
            out["all_pass"] = all;
            if (!all) code = kDemoFailed;
        }
        std::cout << out.dump(2) << "\n";
        return code;
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}, {"exit_code", e.exit_code()}}.dump() << "\n";
        return e.exit_code();
    } catch (const json::exception& e) {
        std::cerr << json{{"error", std::string("malformed JSON input: ") + e.what()}, {"exit_code", 4}}.dump()
                  << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"exit_code", 4}}.dump() << "\n";
        return 4;
    }
}
