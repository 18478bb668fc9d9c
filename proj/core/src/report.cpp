#include "toricbv/report.hpp"

#include <chrono>
#include <future>
#include <json.hpp>
#include <sstream>

#include "toricbv/bv.hpp"
#include "toricbv/corpus.hpp"
#include "toricbv/errors.hpp"
#include "toricbv/oracles.hpp"
#include "toricbv/variety.hpp"

namespace toricbv {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------- helpers

ordered_json weight_json(const Weight& w) {
    ordered_json out = ordered_json::array();
    for (const auto& x : w) {
        if (x.fits_slong_p())
            out.push_back(x.get_si());
        else
            out.push_back(x.get_str());
    }
    return out;
}

ordered_json ratvec_json(const RatVec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

ordered_json matrix_json(const RatMatrix& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(ratvec_json(m.row(r)));
    return out;
}

ordered_json fan_json(const NamedFan& named) {
    ordered_json out;
    out["name"] = named.name.empty() ? "(unnamed)" : named.name;
    out["dim"] = named.fan.dim;
    out["rays"] = named.fan.rays.size();
    out["max_cones"] = named.fan.max_cones.size();
    return out;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
    return s + ")";
}

std::string render(const ordered_json& doc, Format format) {
    if (format == Format::machine) return doc.dump(2) + "\n";
    return {};
}

long elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

// ------------------------------------------------------ element parsing

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

}  // namespace

WeightedPolyvector parse_element(const std::string& text, int dim, Variant variant) {
    const std::string compact = strip_spaces(text);
    if (compact.empty()) throw input_error("element: empty description");

    // Split into signed chunks at top-level + and -.
    struct Chunk {
        std::string body;
        bool negative;
    };
    std::vector<Chunk> chunks;
    {
        std::string cur;
        bool negative = false;
        int depth = 0;
        for (std::size_t i = 0; i < compact.size(); ++i) {
            const char ch = compact[i];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty()) {
                chunks.push_back({cur, negative});
                cur.clear();
                negative = ch == '-';
            } else if ((ch == '+' || ch == '-') && depth == 0 && cur.empty()) {
                if (ch == '-') negative = !negative;
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) chunks.push_back({cur, negative});
    }
    if (chunks.empty()) throw input_error("element: no terms in '" + text + "'");

    WeightedPolyvector out(variant, 0);
    bool first_term = true;
    for (const auto& chunk : chunks) {
        Rat coeff = chunk.negative ? Rat(-1) : Rat(1);
        std::optional<Weight> weight;
        std::vector<int> wedge_indices;
        bool scalar_part = false;

        for (const std::string& part : split_top_level(chunk.body, '*')) {
            if (part.empty()) throw input_error("element: empty factor in '" + chunk.body + "'");
            if (part.rfind("chi(", 0) == 0) {
                if (part.back() != ')')
                    throw input_error("element: malformed weight in '" + part + "'");
                if (weight) throw input_error("element: two weights in one term");
                const std::string inner = part.substr(4, part.size() - 5);
                Weight w;
                for (const auto& tok : split_top_level(inner, ',')) {
                    try {
                        w.push_back(Int(tok));
                    } catch (const std::invalid_argument&) {
                        throw input_error("element: bad weight coordinate '" + tok + "'");
                    }
                }
                if (static_cast<int>(w.size()) != dim)
                    throw input_error("element: weight has " + std::to_string(w.size()) +
                                      " coordinates, expected " + std::to_string(dim));
                weight = std::move(w);
            } else if (part == "1") {
                scalar_part = true;
            } else if (part[0] == 'e') {
                for (const auto& tok : split_top_level(part, '^')) {
                    if (tok.size() < 2 || tok[0] != 'e')
                        throw input_error("element: bad wedge factor '" + tok + "'");
                    int idx = 0;
                    try {
                        idx = std::stoi(tok.substr(1));
                    } catch (const std::exception&) {
                        throw input_error("element: bad wedge factor '" + tok + "'");
                    }
                    if (idx < 1 || idx > dim)
                        throw input_error("element: index " + std::to_string(idx) +
                                          " outside e1..e" + std::to_string(dim));
                    wedge_indices.push_back(idx - 1);
                }
            } else {
                coeff *= Rat::parse(part);
            }
        }
        if (!weight) throw input_error("element: term '" + chunk.body + "' has no chi(...) weight");
        (void)scalar_part;

        Multivector mv = Multivector::scalar(coeff);
        for (int idx : wedge_indices) mv = wedge(mv, Multivector::basis({idx}));

        if (first_term) {
            out = WeightedPolyvector(variant, mv.degree());
            first_term = false;
        }
        if (!mv.is_zero() && mv.degree() != out.degree())
            throw input_error("element: terms of mixed degree");
        out.add_term(*weight, mv);
    }
    return out;
}

// ------------------------------------------------------------- validate

CommandResult run_validate(const NamedFan& named, const ReportOptions& options) {
    const FanReport report = validate(named.fan);

    ordered_json doc;
    doc["command"] = "validate";
    doc["fan"] = fan_json(named);
    doc["flags"]["primitive"] = report.primitive;
    doc["flags"]["simplicial_smooth"] = report.simplicial_smooth;
    doc["flags"]["complete"] = report.complete;
    doc["messages"] = report.messages;
    doc["valid"] = report.valid();

    CommandResult result;
    result.exit_code = report.valid() ? 0 : 1;
    if (options.format == Format::machine) {
        result.output = render(doc, options.format);
        return result;
    }
    std::ostringstream os;
    os << "fan " << doc["fan"]["name"].get<std::string>() << " (dim " << named.fan.dim
       << ", " << named.fan.rays.size() << " rays, " << named.fan.max_cones.size()
       << " maximal cones)\n";
    os << "  primitive:          " << (report.primitive ? "yes" : "no") << "\n";
    os << "  simplicial smooth:  " << (report.simplicial_smooth ? "yes" : "no") << "\n";
    os << "  complete:           " << (report.complete ? "yes" : "no") << "\n";
    for (const auto& m : report.messages) os << "  ! " << m << "\n";
    os << (report.valid() ? "valid\n" : "invalid\n");
    result.output = os.str();
    return result;
}

// ------------------------------------------------------------- polytope

CommandResult run_polytope(const NamedFan& named, const ReportOptions& options) {
    const Variety v = Variety::analyze(named.fan);
    const auto strata = stratum_counts(v.points);
    const auto vertices = lattice_vertices(v.points);

    ordered_json doc;
    doc["command"] = "polytope";
    doc["fan"] = fan_json(named);
    doc["lattice_point_count"] = v.points.size();
    doc["points"] = ordered_json::array();
    for (const auto& rec : v.points) {
        ordered_json p;
        p["point"] = weight_json(rec.point);
        p["active_rays"] = rec.active;
        p["stratum"] = rec.stratum;
        doc["points"].push_back(p);
    }
    doc["strata"] = ordered_json();
    for (const auto& [stratum, count] : strata)
        doc["strata"][std::to_string(stratum)] = count;
    doc["lattice_vertices"] = ordered_json::array();
    for (const auto& rec : vertices) doc["lattice_vertices"].push_back(weight_json(rec.point));

    CommandResult result;
    if (options.format == Format::machine) {
        result.output = render(doc, options.format);
        return result;
    }
    std::ostringstream os;
    os << "weight polytope of " << doc["fan"]["name"].get<std::string>() << ": "
       << v.points.size() << " lattice points\n";
    for (const auto& rec : v.points) {
        os << "  " << weight_str(rec.point) << "  stratum " << rec.stratum << "  tight rays {";
        for (std::size_t i = 0; i < rec.active.size(); ++i)
            os << (i ? "," : "") << rec.active[i];
        os << "}\n";
    }
    os << "strata:";
    for (const auto& [stratum, count] : strata) os << " " << stratum << "->" << count;
    os << "\nlattice vertices:";
    if (vertices.empty()) os << " none";
    for (const auto& rec : vertices) os << " " << weight_str(rec.point);
    os << "\n";
    result.output = os.str();
    return result;
}

// ----------------------------------------------------------------- dims

CommandResult run_dims(const NamedFan& named, const ReportOptions& options) {
    const Variety v = Variety::analyze(named.fan);
    const auto dims = v.degree_dims();

    ordered_json doc;
    doc["command"] = "dims";
    doc["fan"] = fan_json(named);
    doc["dims"] = dims;

    CommandResult result;
    if (options.format == Format::machine) {
        result.output = render(doc, options.format);
        return result;
    }
    std::ostringstream os;
    os << "polyvector field dimensions of " << doc["fan"]["name"].get<std::string>() << ":\n";
    for (int k = 0; k <= named.fan.dim; ++k)
        os << "  degree " << k << ": " << dims[k] << "\n";
    result.output = os.str();
    return result;
}

// ---------------------------------------------------------------- basis

CommandResult run_basis(const NamedFan& named, const ReportOptions& options) {
    const Variety v = Variety::analyze(named.fan);

    ordered_json doc;
    doc["command"] = "basis";
    doc["fan"] = fan_json(named);
    doc["degrees"] = ordered_json::array();
    for (int k = 0; k <= named.fan.dim; ++k) {
        ordered_json deg;
        deg["degree"] = k;
        deg["dim"] = v.basis.dim(k);
        deg["elements"] = ordered_json::array();
        for (const auto& e : v.basis.entries(k)) {
            ordered_json el;
            el["weight"] = weight_json(e.point);
            el["multivector"] = e.multivector.str();
            deg["elements"].push_back(el);
        }
        doc["degrees"].push_back(deg);
    }

    CommandResult result;
    if (options.format == Format::machine) {
        result.output = render(doc, options.format);
        return result;
    }
    std::ostringstream os;
    os << "graded basis of " << doc["fan"]["name"].get<std::string>() << "\n";
    for (int k = 0; k <= named.fan.dim; ++k) {
        os << "degree " << k << " (dim " << v.basis.dim(k) << "):\n";
        for (const auto& e : v.basis.entries(k))
            os << "  I = " << weight_str(e.point) << "; A = " << e.multivector.str() << "\n";
    }
    result.output = os.str();
    return result;
}

// -------------------------------------------------------------- bracket

CommandResult run_bracket(const NamedFan& named, const std::string& a_text,
                          const std::string& b_text, const ReportOptions& options) {
    const Variety v = Variety::analyze(named.fan);
    const WeightedPolyvector a = parse_element(a_text, named.fan.dim, Variant::field);
    const WeightedPolyvector b = parse_element(b_text, named.fan.dim, Variant::field);

    for (const auto* elem : {&a, &b})
        for (const auto& [I, A] : elem->terms())
            if (!membership(v.basis, I, A, elem->degree()))
                throw input_error("bracket: term chi" + weight_str(I) +
                                  " (" + A.str() + ") is not a global field on this variety");

    const WeightedPolyvector result_elem = schouten(a, b);

    ordered_json doc;
    doc["command"] = "bracket";
    doc["fan"] = fan_json(named);
    doc["a"] = a.str();
    doc["b"] = b.str();
    doc["bracket"] = result_elem.str();
    doc["terms"] = ordered_json::array();
    for (const auto& [I, A] : result_elem.terms()) {
        ordered_json t;
        t["weight"] = weight_json(I);
        t["multivector"] = A.str();
        doc["terms"].push_back(t);
    }

    CommandResult result;
    if (options.format == Format::machine) {
        result.output = render(doc, options.format);
        return result;
    }
    std::ostringstream os;
    os << "[" << a.str() << ", " << b.str() << "] = " << result_elem.str() << "\n";
    result.output = os.str();
    return result;
}

// ------------------------------------------------------------------- bv

namespace {

ordered_json verification_json(const OperatorVerification& ver) {
    ordered_json out;
    out["d_squared_zero"] = ver.d_squared_zero;
    out["pairs_checked"] = ver.pairs_checked;
    out["triples_checked"] = ver.triples_checked;
    out["violations"] = ver.violation_count;
    out["violation_samples"] = ver.violations;
    out["ok"] = ver.ok();
    return out;
}

}  // namespace

CommandResult run_bv(const NamedFan& named, const std::optional<RatVec>& chosen_delta,
                     const ReportOptions& options) {
    const Variety v = Variety::analyze(named.fan);
    const BVSolution sol = existence(v);

    ordered_json doc;
    doc["command"] = "bv";
    doc["fan"] = fan_json(named);
    doc["active_rays"] = sol.active_rays;
    doc["system"] = ordered_json::array();
    for (std::size_t r = 0; r < sol.active_rays.size(); ++r) {
        ordered_json row;
        row["ray"] = sol.active_rays[r];
        row["coefficients"] = ratvec_json(sol.system.row(r));
        row["rhs"] = sol.rhs[r].str();
        doc["system"].push_back(row);
    }
    doc["exists"] = sol.exists;

    bool all_ok = true;
    std::vector<std::pair<RatVec, OperatorVerification>> verified;
    std::vector<BVOperator> operators;

    if (sol.exists) {
        doc["solution"]["particular"] = ratvec_json(sol.delta_particular);
        doc["solution"]["kernel"] = ordered_json::array();
        for (const auto& kvec : sol.delta_kernel)
            doc["solution"]["kernel"].push_back(ratvec_json(kvec));
        doc["solution"]["dimension"] = sol.delta_kernel.size();

        std::vector<RatVec> deltas;
        if (chosen_delta) {
            deltas.push_back(*chosen_delta);
        } else {
            deltas.push_back(sol.delta_particular);
            for (const auto& kvec : sol.delta_kernel) {
                RatVec d = sol.delta_particular;
                for (std::size_t i = 0; i < d.size(); ++i) d[i] += kvec[i];
                deltas.push_back(std::move(d));
            }
        }

        CheckBudget budget;
        budget.seed = options.seed;
        doc["operators"] = ordered_json::array();
        for (const auto& delta : deltas) {
            const BVOperator op = build_operator(delta, v);  // throws when inadmissible
            const OperatorVerification ver = verify_operator(op, v, budget);
            if (!ver.ok()) all_ok = false;

            ordered_json jop;
            jop["delta"] = ratvec_json(delta);
            jop["matrices"] = ordered_json();
            for (int k = 1; k <= named.fan.dim; ++k)
                jop["matrices"][std::to_string(k)] = matrix_json(op.matrix(k));
            jop["verification"] = verification_json(ver);
            doc["operators"].push_back(jop);
            verified.emplace_back(delta, ver);
            operators.push_back(op);
        }
    } else if (chosen_delta) {
        throw input_error("bv: no operator exists for this fan, cannot use --delta");
    }

    CommandResult result;
    result.exit_code = all_ok ? 0 : 1;
    if (options.format == Format::machine) {
        result.output = render(doc, options.format);
        return result;
    }
    std::ostringstream os;
    os << "generating-operator existence for " << doc["fan"]["name"].get<std::string>()
       << "\n";
    os << "tight-ray system (" << sol.active_rays.size() << " rows):\n";
    for (std::size_t r = 0; r < sol.active_rays.size(); ++r) {
        os << "  <delta, ray " << sol.active_rays[r] << " = (";
        const auto& e = v.polytope.normals[sol.active_rays[r]];
        for (std::size_t j = 0; j < e.size(); ++j) os << (j ? "," : "") << e[j].get_str();
        os << ")> = -1\n";
    }
    if (!sol.exists) {
        os << "no solution: the system is inconsistent, no generating operator exists\n";
    } else {
        os << "solutions: delta = " << to_string(sol.delta_particular);
        for (const auto& kvec : sol.delta_kernel) os << " + t*" << to_string(kvec);
        os << "  (dimension " << sol.delta_kernel.size() << ")\n";
        for (std::size_t i = 0; i < verified.size(); ++i) {
            const auto& [delta, ver] = verified[i];
            os << "operator at delta = " << to_string(delta) << ":\n";
            for (int k = 1; k <= named.fan.dim; ++k) {
                os << "  degree " << k << " -> " << (k - 1) << ":\n";
                const std::string matrix_text = operators[i].matrix(k).str();
                std::istringstream lines(matrix_text);
                std::string line;
                while (std::getline(lines, line)) os << "    " << line << "\n";
            }
            os << "  squares to zero: " << (ver.d_squared_zero ? "yes" : "NO")
               << "; identity violations: " << ver.violation_count << " (pairs "
               << ver.pairs_checked << ", triples " << ver.triples_checked << ")\n";
        }
    }
    result.output = os.str();
    return result;
}

// ---------------------------------------------------------------- check

namespace {

struct Section {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;

    void note(const std::string& line) { lines.push_back(line); }
    void fail(const std::string& line) {
        pass = false;
        lines.push_back("FAIL: " + line);
    }
};

struct CheckOutcome {
    std::vector<Section> sections;
    bool pass = true;
    long elapsed = 0;
};

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

CheckOutcome run_check_core(const NamedFan& named, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;

    // 1. validation
    Section validation{"validation"};
    const FanReport report = validate(named.fan);
    validation.pass = report.valid();
    validation.note(std::string("primitive=") + (report.primitive ? "yes" : "no") +
                    " smooth=" + (report.simplicial_smooth ? "yes" : "no") +
                    " complete=" + (report.complete ? "yes" : "no"));
    for (const auto& m : report.messages) validation.note("  " + m);
    outcome.sections.push_back(validation);
    if (!report.valid()) {
        outcome.pass = false;
        outcome.elapsed = elapsed_ms(start);
        return outcome;
    }

    const Variety v = Variety::analyze(named.fan);
    const int n = named.fan.dim;

    // 2. polytope and the independent lattice-point scan
    {
        Section s{"lattice-points"};
        std::ostringstream os;
        os << v.points.size() << " lattice points; strata:";
        for (const auto& [stratum, count] : stratum_counts(v.points))
            os << " " << stratum << "->" << count;
        s.note(os.str());
        bool origin_found = false;
        const Weight zero(n, Int(0));
        for (const auto& rec : v.points)
            if (rec.point == zero && rec.active.empty()) origin_found = true;
        if (!origin_found) s.fail("origin missing or has tight rays");
        if (n <= 3) {
            const auto oracle = oracle_lattice_points(v.polytope);
            std::vector<Weight> fast;
            for (const auto& rec : v.points) fast.push_back(rec.point);
            if (oracle == fast)
                s.note("independent vertex-box scan agrees");
            else
                s.fail("independent vertex-box scan disagrees");
        }
        outcome.sections.push_back(s);
    }

    // 3. dimensions and the block-dimension formula
    {
        Section s{"dimensions"};
        std::ostringstream os;
        os << "dims:";
        for (auto d : v.degree_dims()) os << " " << d;
        s.note(os.str());
        for (const auto& rec : v.points) {
            for (int k = 0; k <= n; ++k) {
                const WeightBlock* block = v.basis.block(rec.point, k);
                const Int expected =
                    rec.stratum > k ? Int(0) : binomial(n - rec.stratum, k - rec.stratum);
                if (Int(static_cast<long>(block ? block->dim() : 0)) != expected) {
                    std::ostringstream fail;
                    fail << "block " << weight_str(rec.point) << " degree " << k
                         << " has dim " << (block ? block->dim() : 0) << ", expected "
                         << expected.get_str();
                    s.fail(fail.str());
                }
            }
        }
        if (v.basis.dim(n) != v.points.size())
            s.fail("top-degree dimension differs from the lattice point count");
        outcome.sections.push_back(s);
    }

    // 4. closure of the product and bracket on all basis pairs
    {
        Section s{"closure"};
        std::size_t pairs = 0;
        std::size_t bad = 0;
        for (int ka = 0; ka <= n; ++ka) {
            for (const auto& ea : v.basis.entries(ka)) {
                const auto a =
                    WeightedPolyvector::monomial(Variant::field, ea.point, ea.multivector);
                for (int kb = 0; kb <= n; ++kb) {
                    for (const auto& eb : v.basis.entries(kb)) {
                        const auto b = WeightedPolyvector::monomial(Variant::field, eb.point,
                                                                    eb.multivector);
                        ++pairs;
                        const auto prod = wedge_fields(a, b);
                        for (const auto& [I, A] : prod.terms())
                            if (!membership(v.basis, I, A, ka + kb)) ++bad;
                        const auto brak = schouten(a, b);
                        for (const auto& [I, A] : brak.terms())
                            if (!membership(v.basis, I, A, ka + kb - 1)) ++bad;
                    }
                }
            }
        }
        std::ostringstream os;
        os << pairs << " basis pairs closed under product and bracket";
        s.note(os.str());
        if (bad) {
            std::ostringstream fail;
            fail << bad << " products/brackets escaped their weight blocks";
            s.fail(fail.str());
        }
        outcome.sections.push_back(s);
    }

    // 5. algebra axioms on the multiplication/bracket tables
    AxiomBudget budget;
    budget.seed = seed;
    const AlgebraTables tables = build_tables(v);
    {
        Section s{"algebra-axioms"};
        for (const auto& r : oracle_axioms(tables, nullptr, budget)) {
            std::ostringstream os;
            os << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checked
               << " checks)";
            if (!r.pass) {
                s.fail(os.str() + " first: " + r.counterexample);
            } else {
                s.note(os.str());
            }
        }
        outcome.sections.push_back(s);
    }

    // 6. contraction lemma trials
    if (n <= 4) {
        Section s{"contraction-lemma"};
        const auto r = oracle_contraction_lemma(n, 200, seed);
        std::ostringstream os;
        os << r.checked << " seeded trials";
        if (r.pass)
            s.note(os.str());
        else
            s.fail(os.str() + " first: " + r.counterexample);
        outcome.sections.push_back(s);
    }

    // 7. chart cross-check of the bracket
    if (n <= 2) {
        Section s{"chart-bracket"};
        std::size_t pairs = 0, bad = 0;
        for (int ka = 0; ka <= n; ++ka)
            for (const auto& ea : v.basis.entries(ka))
                for (int kb = 0; kb <= n; ++kb)
                    for (const auto& eb : v.basis.entries(kb)) {
                        const auto a = WeightedPolyvector::monomial(Variant::field, ea.point,
                                                                    ea.multivector);
                        const auto b = WeightedPolyvector::monomial(Variant::field, eb.point,
                                                                    eb.multivector);
                        ++pairs;
                        if (oracle_chart_bracket(named.fan, a, b) != schouten(a, b)) ++bad;
                    }
        std::ostringstream os;
        os << pairs << " basis pairs cross-checked in the chart of cone 0";
        if (bad) {
            std::ostringstream fail;
            fail << bad << " pairs disagree with the chart bracket";
            s.fail(fail.str());
        } else {
            s.note(os.str());
        }
        outcome.sections.push_back(s);
    }

    // 8. generating operator: existence, lemma consequences, verification
    {
        Section s{"generating-operator"};
        const BVSolution sol = existence(v);
        const auto vertices = lattice_vertices(v.points);
        std::ostringstream os;
        os << (sol.exists ? "exists" : "does not exist") << "; solution dimension "
           << (sol.exists ? sol.delta_kernel.size() : 0) << "; lattice vertices "
           << vertices.size();
        s.note(os.str());

        if (sol.exists) {
            if (vertices.size() > 1)
                s.fail("operator exists with more than one lattice vertex");
            if (vertices.size() == 1) {
                const auto& vtx = vertices.front().point;
                bool pinned = sol.delta_kernel.empty();
                for (std::size_t i = 0; i < vtx.size() && pinned; ++i)
                    if (sol.delta_particular[i] != Rat(vtx[i])) pinned = false;
                if (!pinned)
                    s.fail("one lattice vertex but the solution set is not that vertex");
                else
                    s.note("solution pinned to the lattice vertex " + weight_str(vtx));
            }

            std::vector<RatVec> deltas{sol.delta_particular};
            for (const auto& kvec : sol.delta_kernel) {
                RatVec d = sol.delta_particular;
                for (std::size_t i = 0; i < d.size(); ++i) d[i] += kvec[i];
                deltas.push_back(std::move(d));
            }
            CheckBudget op_budget;
            op_budget.seed = seed;
            for (const auto& delta : deltas) {
                const BVOperator op = build_operator(delta, v);
                const OperatorVerification ver = verify_operator(op, v, op_budget);
                std::ostringstream line;
                line << "delta = " << to_string(delta) << ": square zero "
                     << (ver.d_squared_zero ? "yes" : "NO") << ", violations "
                     << ver.violation_count << " (pairs " << ver.pairs_checked
                     << ", triples " << ver.triples_checked << ")";
                if (ver.ok())
                    s.note(line.str());
                else
                    s.fail(line.str());

                // both operator characterizations, on the tables
                for (const auto& r : oracle_axioms(tables, &op.matrices, budget)) {
                    if (!r.pass)
                        s.fail(r.name + " at delta " + to_string(delta) +
                               " first: " + r.counterexample);
                }

                // the operator family is classified by delta
                const auto recovered = classify_form(op.matrices, v);
                if (!recovered || *recovered != delta)
                    s.fail("operator form not recovered at delta " + to_string(delta));

                // embedding compatibility: gamma(D x) = chi^I (x) i_{delta-I} A
                for (int k = 1; k <= n; ++k) {
                    for (const auto& e : v.basis.entries(k)) {
                        const auto x = WeightedPolyvector::monomial(Variant::field, e.point,
                                                                    e.multivector);
                        const auto lhs = gamma_embed(apply_operator(op, v, x));
                        CharacterVector shift(delta.size());
                        for (std::size_t i = 0; i < delta.size(); ++i)
                            shift[i] = delta[i] - Rat(e.point[i]);
                        WeightedPolyvector rhs(Variant::torus, k - 1);
                        rhs.add_term(e.point, contract(shift, e.multivector));
                        if (lhs != rhs) {
                            s.fail("embedding compatibility fails at delta " +
                                   to_string(delta));
                            break;
                        }
                    }
                }
            }
        }
        outcome.sections.push_back(s);
    }

    for (const auto& s : outcome.sections)
        if (!s.pass) outcome.pass = false;
    outcome.elapsed = elapsed_ms(start);
    return outcome;
}

ordered_json outcome_json(const NamedFan& named, const CheckOutcome& outcome,
                          bool with_timings) {
    ordered_json doc;
    doc["fan"] = fan_json(named);
    doc["sections"] = ordered_json::array();
    for (const auto& s : outcome.sections) {
        ordered_json js;
        js["name"] = s.name;
        js["pass"] = s.pass;
        js["lines"] = s.lines;
        doc["sections"].push_back(js);
    }
    doc["pass"] = outcome.pass;
    if (with_timings) doc["elapsed_ms"] = outcome.elapsed;
    return doc;
}

std::string outcome_human(const NamedFan& named, const CheckOutcome& outcome,
                          bool with_timings) {
    std::ostringstream os;
    os << "check " << (named.name.empty() ? "(unnamed)" : named.name) << "\n";
    for (const auto& s : outcome.sections) {
        os << "  [" << (s.pass ? "pass" : "FAIL") << "] " << s.name << "\n";
        for (const auto& line : s.lines) os << "      " << line << "\n";
    }
    os << (outcome.pass ? "all checks pass" : "CHECKS FAILED");
    if (with_timings) os << " (" << outcome.elapsed << " ms)";
    os << "\n";
    return os.str();
}

}  // namespace

CommandResult run_check(const NamedFan& named, const ReportOptions& options) {
    const CheckOutcome outcome = run_check_core(named, options.seed);
    CommandResult result;
    result.exit_code = outcome.pass ? 0 : 1;
    if (options.format == Format::machine) {
        ordered_json doc;
        doc["command"] = "check";
        const ordered_json body = outcome_json(named, outcome, options.timings);
        for (const auto& [key, value] : body.items()) doc[key] = value;
        result.output = doc.dump(2) + "\n";
    } else {
        result.output = outcome_human(named, outcome, options.timings);
    }
    return result;
}

CommandResult run_corpus(const ReportOptions& options) {
    const auto& fans = corpus::standard();

    // Entries are independent pure computations; evaluate them concurrently
    // and merge in the fixed corpus order.
    std::vector<std::future<CheckOutcome>> futures;
    futures.reserve(fans.size());
    for (const auto& named : fans)
        futures.push_back(std::async(std::launch::async, [&named, &options] {
            return run_check_core(named, options.seed);
        }));

    bool all_pass = true;
    ordered_json doc;
    doc["command"] = "corpus";
    doc["entries"] = ordered_json::array();
    std::ostringstream human;
    human << "corpus of " << fans.size() << " bundled fans\n";
    for (std::size_t i = 0; i < fans.size(); ++i) {
        const CheckOutcome outcome = futures[i].get();
        if (!outcome.pass) all_pass = false;
        doc["entries"].push_back(outcome_json(fans[i], outcome, options.timings));
        human << "  " << (outcome.pass ? "[pass] " : "[FAIL] ") << fans[i].name << "\n";
        if (!outcome.pass)
            for (const auto& s : outcome.sections)
                if (!s.pass)
                    for (const auto& line : s.lines) human << "      " << line << "\n";
    }
    doc["pass"] = all_pass;
    human << (all_pass ? "corpus passes" : "CORPUS FAILED") << "\n";

    CommandResult result;
    result.exit_code = all_pass ? 0 : 1;
    result.output = options.format == Format::machine ? doc.dump(2) + "\n" : human.str();
    return result;
}

}  // namespace toricbv
