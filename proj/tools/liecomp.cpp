// liecomp: command-line front end for the verification runners and the
// individual computations on L(f) and gl(V).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liecomp/constructions.hpp"
#include "liecomp/forms.hpp"
#include "liecomp/repmod.hpp"
#include "liecomp/verify.hpp"

using namespace liecomp;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field_text;
    Index m = 0;
    std::string form = "auto";
    std::string output = "text";
    std::uint64_t budget = default_budget;
    std::string out;
    std::string alpha = "1";
    std::string command;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

/// Fills form fields of `c` from --form; a file form may also fix the field.
void apply_form(const Options& o, CaseSpec& c) {
    if (o.form == "auto") {
        c.form = FormKind::automatic;
    } else if (o.form == "alternating") {
        c.form = FormKind::alternating;
    } else if (o.form.rfind("diag:", 0) == 0) {
        c.form = FormKind::diagonal;
        c.diagonal = split(o.form.substr(5), ',');
        if (c.m == 0) c.m = static_cast<Index>(c.diagonal.size());
    } else if (o.form.rfind("file:", 0) == 0) {
        c.form = FormKind::custom;
        c.gram = read_matrix_file(o.form.substr(5));
        if (o.field_text.empty()) c.field = c.gram->field;
        else if (c.gram->field != c.field)
            throw UsageError(c.gram->source + ": matrix is over " + c.gram->field.name() + " but --field is " +
                             c.field.name());
        if (c.m == 0) c.m = c.gram->rows;
    } else {
        throw UsageError("unknown --form '" + o.form + "' (expected alternating, diag:d1,...,dm or file:PATH)");
    }
}

CaseSpec case_from(const Options& o, const std::string& id) {
    CaseSpec c;
    c.id = id;
    c.field = o.field_text.empty() ? FieldSpec::rationals() : parse_field(o.field_text);
    c.m = o.m;
    c.alpha = o.alpha;
    c.budget = o.budget;
    apply_form(o, c);
    return c;
}

/// Gram matrix for the computation commands: the CLI form, defaulting to J for even m and I otherwise.
template <class S>
Mat<S> gram_for(const CaseSpec& c) {
    switch (c.form) {
        case FormKind::custom: return materialize<S>(*c.gram);
        case FormKind::diagonal: {
            std::vector<S> d;
            for (const auto& t : c.diagonal) d.push_back(FieldTraits<S>::parse(t));
            return diagonal_gram<S>(d);
        }
        case FormKind::alternating:
            if (c.m % 2 != 0) throw HypothesisError("an alternating form needs even m");
            return symplectic_gram<S>(c.m);
        case FormKind::automatic:
            return c.m % 2 == 0 ? symplectic_gram<S>(c.m) : identity<S>(c.m);
    }
    return {};
}

template <class S>
std::string describe(const BilForm<S>& f) {
    std::string s = f.alternating ? "alternating" : f.symmetric ? "symmetric" : "general";
    return s + (f.nondegenerate ? ", nondegenerate" : ", degenerate");
}

template <class S>
ordered_json algebra_info(const CaseSpec& c) {
    const Mat<S> a = gram_for<S>(c);
    const auto f = classify(a);
    const auto l = skew_adjoint_algebra<S>(a);
    const auto mm = self_adjoint_module<S>(a);
    std::vector<Index> derived;
    for (const auto& t : derived_series(l)) derived.push_back(t.dim());
    ordered_json j{{"field", FieldTraits<S>::current().name()},
                   {"m", a.rows()},
                   {"form", describe(f)},
                   {"gram", format_matrix<S>(a)},
                   {"dim_L", l.dim()},
                   {"dim_M", mm.dim()},
                   {"L_equals_M", l.space == mm.space},
                   {"derived_series", derived}};
    if (f.nondegenerate && f.symmetric && !f.alternating) j["discriminant_square"] = discriminant_is_square(f);
    return j;
}

template <class S>
ordered_json series_info(const CaseSpec& c) {
    const Mat<S> a = gram_for<S>(c);
    const Index m = a.rows();
    const auto l = skew_adjoint_algebra<S>(a);
    const auto mod = adjoint_module(lie_generators(l), Subspace<S>::full(m * m), m);
    const auto cs = composition_series(mod, c.budget, 2 * static_cast<std::uint64_t>(m));
    std::vector<Index> chain;
    for (const auto& t : cs.chain) chain.push_back(t.dim());
    ordered_json factors = ordered_json::array();
    for (std::size_t i = 0; i < cs.length(); ++i)
        factors.push_back({{"dim", cs.factor_dims[i]}, {"trivial", static_cast<bool>(cs.factor_trivial[i])},
                           {"method", cs.methods[i]}});
    return {{"field", FieldTraits<S>::current().name()}, {"m", m},        {"dim_L", l.dim()},
            {"chain", chain},                            {"factors", factors}, {"certified", cs.certified}};
}

template <class S>
ordered_json weights_info(const CaseSpec& c) {
    const Mat<S> a = gram_for<S>(c);
    const Index m = a.rows();
    const auto l = skew_adjoint_algebra<S>(a);
    // H = diagonal matrices in L(f), acting on gl(V) by ad.
    std::vector<Mat<S>> diag;
    for (Index i = 0; i < m; ++i) diag.push_back(unit_matrix<S>(m, i, i));
    const auto h = subspace_intersect(l.space, matrix_span<S>(m, diag).space);
    std::vector<Mat<S>> hs;
    for (Index k = 0; k < h.dim(); ++k) hs.push_back(unvec<S>(h.vector(k), m, m));
    const auto mod = adjoint_module(hs, Subspace<S>::full(m * m), m);
    ordered_json ws = ordered_json::array();
    Index total = 0;
    for (const auto& w : weights(mod.actions)) {
        std::vector<std::string> vals;
        for (const auto& v : w.values) vals.push_back(to_string(v));
        ws.push_back({{"values", vals}, {"multiplicity", w.multiplicity}});
        total += w.multiplicity;
    }
    return {{"field", FieldTraits<S>::current().name()}, {"m", m}, {"dim_H", h.dim()}, {"weights", ws},
            {"accounted", total}, {"dim_gl", m * m}};
}

template <class S>
ordered_json hom_info(const CaseSpec& c) {
    const Mat<S> a = gram_for<S>(c);
    const Index m = a.rows();
    const auto l = skew_adjoint_algebra<S>(a);
    const auto gens = lie_generators(l);
    const auto v = natural_module(gens);
    const auto gl = adjoint_module(gens, Subspace<S>::full(m * m), m);
    const auto vv = hom_space(v, dual_module(v));
    // The form itself, as a map V -> V*: v -> f(v, .), matrix A'.
    const bool form_in = vv.contains(vec<S>(Mat<S>(a.transpose())));
    return {{"field", FieldTraits<S>::current().name()},
            {"m", m},
            {"dim_End_V", hom_space(v, v).dim()},
            {"dim_Hom_V_Vdual", vv.dim()},
            {"form_is_invariant", form_in},
            {"dim_End_gl", hom_space(gl, gl).dim()}};
}

void print_json_or_text(const ordered_json& j, const Options& o, std::ostream& os) {
    if (o.output == "json") {
        os << j.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int run(const Options& o, std::ostream& os) {
    if (o.output != "text" && o.output != "json") throw UsageError("--output must be text or json");
    if (o.command == "verify:all") {
        const auto reports = run_all(default_grid(o.budget));
        bool all = true;
        for (const auto& r : reports) all = all && r.pass();
        if (o.output == "json") os << reports_to_json(reports) << "\n";
        else {
            for (const auto& r : reports) os << report_to_text(r);
            std::size_t passed = 0;
            for (const auto& r : reports) passed += r.pass() ? 1 : 0;
            os << passed << "/" << reports.size() << " cases pass\n";
        }
        return all ? 0 : 1;
    }
    if (o.command.rfind("verify:", 0) == 0) {
        const std::string id = o.command.substr(7);
        const auto& ids = case_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UsageError("unknown case id '" + id + "'");
        const CaseSpec c = case_from(o, id);
        const Report r = run_case(c);
        os << (o.output == "json" ? report_to_json(r) + "\n" : report_to_text(r));
        return r.pass() ? 0 : 1;
    }
    const CaseSpec c = case_from(o, "");
    if (c.m < 1) throw UsageError("--m is required");
    ordered_json j;
    auto compute = [&](auto fn) { j = dispatch_field(c.field, fn); };
    if (o.command == "algebra") compute([&](auto t) { return algebra_info<typename decltype(t)::type>(c); });
    else if (o.command == "series") compute([&](auto t) { return series_info<typename decltype(t)::type>(c); });
    else if (o.command == "weights") compute([&](auto t) { return weights_info<typename decltype(t)::type>(c); });
    else if (o.command == "hom") compute([&](auto t) { return hom_info<typename decltype(t)::type>(c); });
    else throw UsageError("unknown command '" + o.command + "'");
    print_json_or_text(j, o, os);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with classical Lie algebras L(f) and the L(f)-module gl(V)"};
    Options o;
    if (const char* env = std::getenv("LIECOMP_BUDGET")) {
        try {
            o.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: LIECOMP_BUDGET is not a number\n";
            return 2;
        }
    }
    app.add_option("--field", o.field_text, "Q, a prime p, or p^2");
    app.add_option("--m", o.m, "dimension m (n for sp-so-embedding, block-irreducibles, heisenberg)");
    app.add_option("--form", o.form, "alternating | diag:d1,...,dm | file:PATH");
    app.add_option("--output", o.output, "text | json");
    app.add_option("--budget", o.budget, "cap on enumerated 1-dimensional subspaces (env LIECOMP_BUDGET)");
    app.add_option("--out", o.out, "write output to this path");
    app.add_option("--alpha", o.alpha, "scalar alpha for the heisenberg case");
    app.add_option("command", o.command, "verify:<id> | verify:all | algebra | series | weights | hom")->required();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        std::ofstream file;
        if (!o.out.empty()) {
            file.open(o.out);
            if (!file) throw UsageError("cannot write " + o.out);
        }
        return run(o, o.out.empty() ? std::cout : file);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const MatrixParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const FormError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
