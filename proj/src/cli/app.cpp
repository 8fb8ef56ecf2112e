#include "orbitale/cli/app.hpp"

#include "orbitale/cli/parse.hpp"
#include "orbitale/dynamics/chebyshev.hpp"
#include "orbitale/dynamics/experiments.hpp"
#include "orbitale/ffpoly/cyclotomic.hpp"
#include "orbitale/ffpoly/factor.hpp"
#include "orbitale/ffpoly/resultant.hpp"
#include "orbitale/localfield/localfield.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace orbitale {

using nlohmann::ordered_json;

void RunConfig::validate(bool uses_map_degree) const {
    if (!is_prime(p) || p >= 65536) throw ConfigError("--p must be a prime below 65536, got " + std::to_string(p));
    if (output != "csv" && output != "json") throw ConfigError("--output must be csv or json, got '" + output + "'");
    if (uses_map_degree && d % p == 0 && !allow_wild)
        throw ConfigError("d = " + std::to_string(d) + " is divisible by p = " + std::to_string(p) +
                          "; pass --allow-wild to run the wild case");
}

namespace {

// What a command produced: a JSON object always, and for CSV either one
// scalar line or a table.
struct Output {
    ordered_json json = ordered_json::object();
    std::optional<std::string> scalar;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::optional<std::string> raw_csv;  // prebuilt table
};

class Fmt {
public:
    explicit Fmt(bool decimal) : decimal_(decimal) {}
    // Table cell: always num/den unless --float.
    std::string cell(const Rational& r) const {
        if (decimal_) return dec(r);
        return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    }
    // Lone value: integers bare.
    std::string scalar(const Rational& r) const {
        if (decimal_) return dec(r);
        if (r.denominator() == 1) return std::to_string(r.numerator());
        return to_string(r);
    }

private:
    static std::string dec(const Rational& r) {
        std::ostringstream s;
        s << std::setprecision(12) << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
        return s.str();
    }
    bool decimal_;
};

std::string val_string(const Valuation& v) { return v ? std::to_string(*v) : "inf"; }
std::string bool_string(bool b) { return b ? "true" : "false"; }

// Re-raise a parse error with the flag it came from.
template <class F>
auto with_flag(const char* flag, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(std::string(flag) + ": " + e.message, e.offset);
    }
}

const std::string& need(const std::string& v, const char* flag) {
    if (v.empty()) throw ConfigError(std::string("missing ") + flag);
    return v;
}

RatFunc alpha_of(const RunConfig& c) {
    return with_flag("--alpha", [&] { return parse_ratfunc(need(c.alpha, "--alpha"), c.p); });
}
RatFunc beta_of(const RunConfig& c) {
    return with_flag("--beta", [&] { return parse_ratfunc(need(c.beta, "--beta"), c.p); });
}
ProjectivePoint point_of(const std::string& s, const char* flag, std::uint32_t p) {
    return with_flag(flag, [&] { return parse_point(need(s, flag), p); });
}
RatPoly ratpoly_of(const std::string& s, const char* flag, std::uint32_t p) {
    return with_flag(flag, [&] { return parse_ratpoly(need(s, flag), p); });
}
FpPoly fppoly_of(const std::string& s, const char* flag, std::uint32_t p, std::string* var = nullptr) {
    return with_flag(flag, [&] { return parse_fp_poly(need(s, flag), p, var); });
}
Place place_of(const RunConfig& c) {
    return with_flag("--place", [&] { return parse_place(need(c.place, "--place"), c.p); });
}
PlaceSet S_of(const RunConfig& c) {
    return with_flag("--S", [&] { return PlaceSet(parse_places(c.S, c.p), "S"); });
}
Rational rational_of(const std::string& s, const char* flag) {
    return with_flag(flag, [&] { return parse_rational(need(s, flag)); });
}

ordered_json place_array(const std::vector<Place>& ps) {
    ordered_json a = ordered_json::array();
    for (const auto& v : ps) a.push_back(v.to_string());
    return a;
}

Output scalar_out(const std::string& key, const std::string& value) {
    Output o;
    o.json[key] = value;
    o.scalar = value;
    return o;
}

Output bool_out(const std::string& key, bool value) {
    Output o;
    o.json[key] = value;
    o.scalar = bool_string(value);
    return o;
}

Output verdict_out(const IntegralityVerdict& v, const PlaceSet& S) {
    Output o;
    o.json["integral"] = v.integral;
    o.json["witness"] = v.witness ? ordered_json(v.witness->to_string()) : ordered_json(nullptr);
    o.json["S"] = place_array(S.places());
    o.header = {"integral", "witness"};
    o.rows.push_back({bool_string(v.integral), v.witness ? v.witness->to_string() : ""});
    return o;
}

std::vector<std::pair<std::int64_t, std::int64_t>> levels_of(const RunConfig& c) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (c.levels.empty()) {
        // Every m <= --m with every n < m.
        for (std::int64_t m = 1; m <= c.m; ++m)
            for (std::int64_t n = 0; n < m; ++n) out.emplace_back(m, n);
        return out;
    }
    std::stringstream ss(c.levels);
    std::string item;
    std::size_t offset = 0;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("--levels: expected m:n", offset);
        try {
            out.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw ParseError("--levels: expected integers m:n", offset);
        }
        offset += item.size() + 1;
    }
    return out;
}

LaurentApprox series_of(const RatFunc& x, const Place& v, std::int64_t prec) {
    Completion kv(v);
    if (x.is_zero()) return LaurentApprox::zero(kv.residue_field(), kExact, kv.uniformizer());
    return kv.expand(x, prec);
}

using Handler = std::function<Output(const RunConfig&, const Fmt&)>;

struct Command {
    CommandInfo info;
    Handler handler;
};

// ---------------------------------------------------------------- ffpoly

Output cmd_poly_arith(const RunConfig& c, const Fmt&) {
    std::string var;
    const FpPoly f = fppoly_of(c.f, "--f", c.p, &var);
    auto g_poly = [&] {
        std::string gv;
        FpPoly g = fppoly_of(c.g, "--g", c.p, &gv);
        return g;
    };
    const std::string& op = need(c.op, "--op");
    if (op == "add") return scalar_out("result", (f + g_poly()).to_string(var));
    if (op == "sub") return scalar_out("result", (f - g_poly()).to_string(var));
    if (op == "mul") return scalar_out("result", (f * g_poly()).to_string(var));
    if (op == "gcd") return scalar_out("result", gcd(f, g_poly()).to_string(var));
    if (op == "compose") return scalar_out("result", f.compose(g_poly()).to_string(var));
    if (op == "derivative") return scalar_out("result", f.derivative().to_string(var));
    if (op == "eval") {
        const Rational at = rational_of(c.at, "--at");
        if (at.denominator() != 1) throw ConfigError("--at must be an integer");
        const std::int64_t a = ((at.numerator() % c.p) + c.p) % c.p;
        return scalar_out("result", std::to_string(f.eval(static_cast<std::uint32_t>(a))));
    }
    if (op == "divmod") {
        const FpPoly g = g_poly();
        if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
        auto [q, r] = divmod(f, g);
        Output o;
        o.json["quotient"] = q.to_string(var);
        o.json["remainder"] = r.to_string(var);
        o.header = {"quotient", "remainder"};
        o.rows.push_back({q.to_string(var), r.to_string(var)});
        return o;
    }
    throw ConfigError("--op must be one of add, sub, mul, divmod, gcd, eval, compose, derivative");
}

Output cmd_factor(const RunConfig& c, const Fmt&) {
    std::string var;
    const FpPoly f = fppoly_of(c.f, "--f", c.p, &var);
    if (f.is_zero()) throw PreconditionError("factor: the zero polynomial");
    std::mt19937_64 rng(c.seed);
    const Factorization fz = factor(f, rng);
    Output o;
    o.json["unit"] = fz.unit;
    o.json["factors"] = ordered_json::array();
    o.header = {"factor", "multiplicity"};
    for (const auto& fp : fz.factors) {
        o.json["factors"].push_back({{"factor", fp.factor.to_string(var)}, {"multiplicity", fp.multiplicity}});
        o.rows.push_back({fp.factor.to_string(var), std::to_string(fp.multiplicity)});
    }
    return o;
}

Output cmd_cyclotomic(const RunConfig& c, const Fmt&) {
    if (c.n < 1) throw PreconditionError("cyclotomic: n must be >= 1");
    return scalar_out("polynomial", cyclotomic(static_cast<std::uint64_t>(c.n), c.p).to_string("x"));
}

Output cmd_radical(const RunConfig& c, const Fmt&) {
    if (c.d < 1) throw PreconditionError("radical: d must be >= 1");
    return scalar_out("radical", std::to_string(radical(static_cast<std::uint64_t>(c.d))));
}

Output cmd_resultant(const RunConfig& c, const Fmt&) {
    const RatPoly f = ratpoly_of(c.f, "--f", c.p), g = ratpoly_of(c.g, "--g", c.p);
    if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant of the zero polynomial");
    return scalar_out("resultant", sylvester_resultant(f, g).to_string());
}

Output cmd_roots_of_unity(const RunConfig& c, const Fmt&) {
    if (c.n < 1) throw PreconditionError("roots-of-unity: n must be >= 1");
    if (c.n % c.p == 0) throw WildCaseError("roots-of-unity: p divides n");
    const RootsOfUnity ru = nth_roots_of_unity(static_cast<std::uint64_t>(c.n), c.p);
    Output o;
    o.json["n"] = c.n;
    o.json["embedding_degree"] = ru.embedding_degree;
    o.json["modulus"] = ru.field->modulus().to_string("a");
    o.json["roots"] = ordered_json::array();
    o.header = {"k", "root"};
    for (std::size_t k = 0; k < ru.roots.size(); ++k) {
        o.json["roots"].push_back(ru.roots[k].to_string());
        o.rows.push_back({std::to_string(k), ru.roots[k].to_string()});
    }
    return o;
}

// ---------------------------------------------------------------- funcfield

Output cmd_valuation(const RunConfig& c, const Fmt&) {
    return scalar_out("valuation", val_string(valuation(alpha_of(c), place_of(c))));
}

Output cmd_log_abs(const RunConfig& c, const Fmt& fmt) {
    return scalar_out("log_abs", fmt.scalar(log_abs(alpha_of(c), place_of(c))));
}

Output cmd_support(const RunConfig& c, const Fmt&) {
    Output o;
    o.json["support"] = ordered_json::array();
    o.header = {"place", "valuation"};
    for (const auto& pv : support(alpha_of(c))) {
        o.json["support"].push_back({{"place", pv.place.to_string()}, {"valuation", pv.valuation}});
        o.rows.push_back({pv.place.to_string(), std::to_string(pv.valuation)});
    }
    return o;
}

Output cmd_product_formula(const RunConfig& c, const Fmt& fmt) {
    return scalar_out("sum", fmt.scalar(product_formula_check(alpha_of(c))));
}

Output cmd_height(const RunConfig& c, const Fmt& fmt) {
    return scalar_out("height", fmt.scalar(height(point_of(c.alpha, "--alpha", c.p))));
}

Output cmd_height_enum(const RunConfig& c, const Fmt&) {
    const Rational B = rational_of(c.bound, "--bound");
    Output o;
    o.json["bound"] = Fmt(false).scalar(B);
    o.json["elements"] = ordered_json::array();
    o.header = {"element", "height"};
    for (const auto& a : bounded_height_enum(B, c.p)) {
        o.json["elements"].push_back(a.to_string());
        o.rows.push_back({a.to_string(), Fmt(false).scalar(height(a))});
    }
    return o;
}

Output cmd_reduce_map(const RunConfig& c, const Fmt&) {
    const Place v = place_of(c);
    RationalMapPair phi = c.f.empty() ? PoweringMap(c.d, c.p).as_pair()
                                      : RationalMapPair::from_polynomial(fppoly_of(c.f, "--f", c.p));
    const ReducedMap red = reduce_map(phi, v);
    Output o;
    o.json["place"] = v.to_string();
    o.json["degree"] = phi.degree;
    o.json["reduced_degree"] = red.degree;
    o.json["good_reduction"] = red.good_reduction;
    o.header = {"place", "degree", "reduced_degree", "good_reduction"};
    o.rows.push_back({v.to_string(), std::to_string(phi.degree), std::to_string(red.degree), bool_string(red.good_reduction)});
    return o;
}

// ---------------------------------------------------------------- algpoint

Output cmd_newton_polygon(const RunConfig& c, const Fmt& fmt) {
    const NewtonPolygon np = newton_polygon(ratpoly_of(c.f, "--f", c.p), place_of(c));
    Output o;
    o.json["zero_roots"] = np.zero_root_count;
    o.json["segments"] = ordered_json::array();
    o.header = {"slope", "length", "root_valuation"};
    for (const auto& s : np.segments) {
        o.json["segments"].push_back({{"slope", fmt.cell(s.slope)}, {"length", s.length}});
        o.rows.push_back({fmt.cell(s.slope), std::to_string(s.length), fmt.cell(-s.slope)});
    }
    return o;
}

Output cmd_conj_log_sum(const RunConfig& c, const Fmt& fmt) {
    return scalar_out("log_sum", fmt.scalar(conj_log_sum(ratpoly_of(c.f, "--f", c.p), alpha_of(c), place_of(c))));
}

Output cmd_conj_distances(const RunConfig& c, const Fmt& fmt) {
    Output o;
    o.json["distances"] = ordered_json::array();
    o.header = {"log_distance"};
    for (const auto& d : conj_distance_multiset(ratpoly_of(c.f, "--f", c.p), alpha_of(c), place_of(c))) {
        o.json["distances"].push_back(fmt.cell(d));
        o.rows.push_back({fmt.cell(d)});
    }
    return o;
}

Output cmd_height_alg(const RunConfig& c, const Fmt& fmt) {
    const auto gamma = AlgebraicPoint::from_minpoly(ratpoly_of(c.f, "--f", c.p));
    return scalar_out("height", fmt.scalar(height_algebraic(gamma)));
}

Output cmd_irreducible_binomial(const RunConfig& c, const Fmt&) {
    return bool_out("irreducible", is_irreducible_xm_minus_a(c.m, alpha_of(c)));
}

Output cmd_lth_power(const RunConfig& c, const Fmt&) {
    auto root = lth_power_test(alpha_of(c), c.l);
    Output o;
    o.json["root"] = root ? ordered_json(root->to_string()) : ordered_json(nullptr);
    o.scalar = root ? root->to_string() : "none";
    return o;
}

// ---------------------------------------------------------------- localfield

Output cmd_complete(const RunConfig& c, const Fmt&) {
    return scalar_out("series", complete(alpha_of(c), place_of(c), c.prec).to_string());
}

Output cmd_hensel(const RunConfig& c, const Fmt&) {
    const Place v = place_of(c);
    const RatFunc x0 = with_flag("--x0", [&] { return parse_ratfunc(need(c.x0, "--x0"), c.p); });
    const LaurentApprox root = hensel_lift(ratpoly_of(c.f, "--f", c.p), v, series_of(x0, v, c.prec), c.prec);
    return scalar_out("root", root.to_string());
}

Output cmd_unit_power_distance(const RunConfig& c, const Fmt&) {
    const auto dist = unit_power_distance(beta_of(c), place_of(c), c.d, c.n_max, c.prec);
    Output o;
    o.json["distances"] = ordered_json::array();
    o.header = {"n", "valuation"};
    for (std::size_t n = 0; n < dist.size(); ++n) {
        o.json["distances"].push_back(dist[n].to_string());
        o.rows.push_back({std::to_string(n), dist[n].to_string()});
    }
    return o;
}

Output cmd_census(const RunConfig& c, const Fmt&) {
    const Place v = place_of(c);
    const UnityCensus cen = unity_distance_census(c.d, c.n, v, rational_of(c.r, "--r"));
    Output o;
    o.json["d"] = cen.d;
    o.json["n"] = cen.n;
    o.json["p"] = cen.p;
    o.json["place"] = v.to_string();
    o.json["embedding_degree"] = cen.embedding_degree;
    o.json["roots"] = cen.roots;
    o.json["units"] = cen.units;
    o.json["count"] = cen.count();
    o.header = {"d", "n", "p", "place", "count"};
    o.rows.push_back({std::to_string(cen.d), std::to_string(cen.n), std::to_string(cen.p), v.to_string(),
                      std::to_string(cen.count())});
    return o;
}

// ---------------------------------------------------------------- dynamics

PoweringMap map_of(const RunConfig& c) { return c.allow_wild ? PoweringMap::allow_wild(c.d, c.p) : PoweringMap(c.d, c.p); }

Output cmd_orbit(const RunConfig& c, const Fmt&) {
    const ForwardOrbit orb = forward_orbit(alpha_of(c), map_of(c), c.steps);
    Output o;
    o.json["points"] = ordered_json::array();
    for (const auto& a : orb.points) o.json["points"].push_back(a.to_string());
    o.json["cycle_start"] = orb.cycle_start ? ordered_json(*orb.cycle_start) : ordered_json(nullptr);
    o.json["cycle_length"] = orb.cycle_length();
    o.json["height_capped"] = orb.height_capped;
    o.header = {"k", "point"};
    for (std::size_t k = 0; k < orb.points.size(); ++k) o.rows.push_back({std::to_string(k), orb.points[k].to_string()});
    return o;
}

Output cmd_preperiodic(const RunConfig& c, const Fmt&) {
    return bool_out("preperiodic", is_preperiodic(point_of(c.alpha, "--alpha", c.p), map_of(c)));
}

Output cmd_fiber(const RunConfig& c, const Fmt&) {
    const BackwardFiber fib = backward_fiber(beta_of(c), map_of(c), c.n);
    Output o;
    o.json["beta"] = fib.beta.to_string();
    o.json["level"] = fib.level;
    o.json["fiber_poly"] = to_string(fib.fiber_poly);
    o.json["irreducible"] = fib.irreducible;
    o.json["factors"] = ordered_json::array();
    o.header = {"factor", "degree"};
    for (const auto& g : fib.factors) {
        o.json["factors"].push_back(g.to_string());
        o.rows.push_back({g.to_string(), std::to_string(g.degree())});
    }
    return o;
}

Output cmd_lemma2(const RunConfig& c, const Fmt&) {
    const UnitPowerReport rep = lemma2_experiment(beta_of(c), place_of(c), c.d, c.n_max);
    Output o;
    o.json["valuations"] = ordered_json::array();
    for (const auto& v : rep.valuations) o.json["valuations"].push_back(val_string(v));
    o.json["max_valuation"] = val_string(rep.max_valuation);
    o.json["verdict"] = to_string(rep.verdict);
    o.header = {"n", "valuation", "verdict"};
    for (std::size_t n = 0; n < rep.valuations.size(); ++n)
        o.rows.push_back({std::to_string(n), val_string(rep.valuations[n]), to_string(rep.verdict)});
    return o;
}

Output cmd_lemma3(const RunConfig& c, const Fmt& fmt) {
    const DistanceReport rep = lemma3_experiment(alpha_of(c), beta_of(c), place_of(c), c.d, levels_of(c));
    Output o;
    o.json["levels"] = ordered_json::array();
    o.header = {"m", "n", "closest", "distances"};
    for (const auto& lvl : rep.levels) {
        ordered_json dist = ordered_json::array();
        std::string joined;
        for (const auto& x : lvl.distances) {
            dist.push_back(fmt.cell(x));
            joined += (joined.empty() ? "" : ";") + fmt.cell(x);
        }
        o.json["levels"].push_back({{"m", lvl.m}, {"n", lvl.n}, {"closest", fmt.cell(lvl.closest)}, {"distances", dist}});
        o.rows.push_back({std::to_string(lvl.m), std::to_string(lvl.n), fmt.cell(lvl.closest), joined});
    }
    o.json["observed_infimum"] = fmt.cell(rep.observed_infimum);
    return o;
}

Output cmd_converge(const RunConfig& c, const Fmt& fmt) {
    const ConvergenceReport rep = main_theorem_experiment(alpha_of(c), beta_of(c), c.d, c.n_max, S_of(c));
    Output o;
    o.json = ordered_json::parse(rep.to_json());
    if (!c.float_mode) {
        o.raw_csv = rep.to_csv();
        return o;
    }
    // Same table with decimal cells.
    o.header = {"place", "n", "value", "predicted_limit", "A_n"};
    auto emit = [&](const std::string& name, const std::vector<Rational>& row, const Rational& lim) {
        for (std::size_t n = 0; n < row.size(); ++n)
            o.rows.push_back({name, std::to_string(n + 1), fmt.cell(row[n]), fmt.cell(lim), fmt.cell(rep.A[n])});
    };
    for (std::size_t i = 0; i < rep.places.size(); ++i) emit(rep.places[i].to_string(), rep.table[i], rep.limits[i]);
    if (rep.has_other()) emit("other", rep.other, Rational(0));
    return o;
}

Output cmd_chebyshev(const RunConfig& c, const Fmt&) {
    if (c.d < 0) throw PreconditionError("chebyshev: d must be >= 0");
    return scalar_out("polynomial", chebyshev_poly(c.d, c.p).to_string("x"));
}

Output cmd_semiconjugacy(const RunConfig& c, const Fmt&) { return bool_out("holds", semiconjugacy_check(c.d, c.p)); }

Output cmd_transfer(const RunConfig& c, const Fmt&) {
    const PlaceSet S = S_of(c);
    const TransferVerdict v = integrality_transfer_check(alpha_of(c), beta_of(c), S, map_of(c));
    auto w = [](const std::optional<Place>& x) { return x ? x->to_string() : std::string(); };
    Output o;
    o.json["side_a"] = v.side_a;
    o.json["side_b"] = v.side_b;
    o.json["agree"] = v.agree();
    o.json["witness_a"] = v.witness_a ? ordered_json(w(v.witness_a)) : ordered_json(nullptr);
    o.json["witness_b"] = v.witness_b ? ordered_json(w(v.witness_b)) : ordered_json(nullptr);
    o.json["fiber"] = ordered_json::array();
    for (const auto& g : v.fiber) o.json["fiber"].push_back(g.to_string());
    o.json["S"] = place_array(S.places());
    o.header = {"side_a", "side_b", "agree", "witness_a", "witness_b"};
    o.rows.push_back({bool_string(v.side_a), bool_string(v.side_b), bool_string(v.agree()), w(v.witness_a), w(v.witness_b)});
    return o;
}

// ---------------------------------------------------------------- integrality

Output cmd_t_set(const RunConfig& c, const Fmt&) {
    const PlaceSet T = T_set(alpha_of(c));
    Output o;
    o.json["T"] = place_array(T.places());
    o.header = {"place"};
    for (const auto& v : T.places()) o.rows.push_back({v.to_string()});
    return o;
}

Output cmd_integral(const RunConfig& c, const Fmt&) {
    const PlaceSet S = S_of(c);
    return verdict_out(is_S_integral(point_of(c.beta, "--beta", c.p), point_of(c.alpha, "--alpha", c.p), S), S);
}

Output cmd_integral_alg(const RunConfig& c, const Fmt&) {
    const PlaceSet S = S_of(c);
    const auto gamma = AlgebraicPoint::from_minpoly(ratpoly_of(c.f, "--f", c.p));
    return verdict_out(is_S_integral_algebraic(gamma, alpha_of(c), S), S);
}

Output cmd_symmetry(const RunConfig& c, const Fmt&) {
    return bool_out("integral",
                    symmetry_check(point_of(c.alpha, "--alpha", c.p), point_of(c.beta, "--beta", c.p), S_of(c)));
}

// ---------------------------------------------------------------- cli

Output cmd_parse(const RunConfig& c, const Fmt&) { return scalar_out("value", alpha_of(c).to_string()); }

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {{"poly-arith", "ffpoly", "poly_arith", "--op add|sub|mul|divmod|gcd|eval|compose|derivative on --f, --g (--at for eval). CSV: the result; divmod: quotient,remainder"}, cmd_poly_arith},
        {{"factor", "ffpoly", "factor", "Factor --f over F_p. CSV: factor,multiplicity"}, cmd_factor},
        {{"cyclotomic", "ffpoly", "cyclotomic", "n-th cyclotomic polynomial over F_p (--n). CSV: the polynomial"}, cmd_cyclotomic},
        {{"radical", "ffpoly", "radical", "Product of the distinct primes dividing --d. CSV: the integer"}, cmd_radical},
        {{"resultant", "ffpoly", "resultant", "Res_x(--f, --g) over F_p(t). CSV: the resultant"}, cmd_resultant},
        {{"roots-of-unity", "ffpoly", "nth_roots_of_unity", "All --n-th roots of unity in F_{p^k}. CSV: k,root"}, cmd_roots_of_unity},
        {{"valuation", "funcfield", "valuation", "v(--alpha) at --place. CSV: integer or inf"}, cmd_valuation},
        {{"log-abs", "funcfield", "log_abs", "log|--alpha|_v at --place. CSV: rational"}, cmd_log_abs},
        {{"support", "funcfield", "support", "Places where --alpha has nonzero valuation. CSV: place,valuation"}, cmd_support},
        {{"product-formula", "funcfield", "product_formula_check", "Sum over places of deg(v) v(--alpha). CSV: 0"}, cmd_product_formula},
        {{"height", "funcfield", "height", "h(--alpha); --alpha inf allowed. CSV: rational"}, cmd_height},
        {{"height-enum", "funcfield", "bounded_height_enum", "All elements of height <= --bound. CSV: element,height"}, cmd_height_enum},
        {{"reduce-map", "funcfield", "reduce_map", "Reduce z^d (or the polynomial map --f over F_p) at --place. CSV: place,degree,reduced_degree,good_reduction"}, cmd_reduce_map},
        {{"newton-polygon", "algpoint", "newton_polygon", "Newton polygon of --f (in x) at --place. CSV: slope,length,root_valuation"}, cmd_newton_polygon},
        {{"conj-log-sum", "algpoint", "conj_log_sum", "Sum of log|alpha - r|_v over the roots r of --f. CSV: rational"}, cmd_conj_log_sum},
        {{"conj-distances", "algpoint", "conj_distance_multiset", "Multiset of log|alpha - r|_v over the roots of --f. CSV: log_distance"}, cmd_conj_distances},
        {{"height-alg", "algpoint", "height_algebraic", "Height of the root of the irreducible --f. CSV: rational"}, cmd_height_alg},
        {{"irreducible-binomial", "algpoint", "is_irreducible_xm_minus_a", "Irreducibility of x^m - alpha (--m, --alpha). CSV: true|false"}, cmd_irreducible_binomial},
        {{"lth-power", "algpoint", "lth_power_test", "An --l-th root of --alpha in F_p(t). CSV: the root or none"}, cmd_lth_power},
        {{"complete", "localfield", "complete", "Laurent expansion of --alpha at --place to O(u^prec). CSV: the series"}, cmd_complete},
        {{"hensel", "localfield", "hensel_lift", "Newton lift of --x0 to a root of --f at --place. CSV: the series"}, cmd_hensel},
        {{"unit-power-distance", "localfield", "unit_power_distance", "v(1 - beta^(d^n)) by series, n <= --n-max. CSV: n,valuation", true}, cmd_unit_power_distance},
        {{"census", "localfield", "unity_distance_census", "Roots of unity zeta of order d^n with 0 < |1-zeta|_v < r (log r = --r). CSV: d,n,p,place,count"}, cmd_census},
        {{"orbit", "dynamics", "forward_orbit", "Forward orbit of --alpha under z^d, --steps points. CSV: k,point", true}, cmd_orbit},
        {{"preperiodic", "dynamics", "is_preperiodic", "Whether --alpha (or inf) is preperiodic under z^d. CSV: true|false", true}, cmd_preperiodic},
        {{"fiber", "dynamics", "backward_fiber", "Irreducible factors of x^(d^n) - beta. CSV: factor,degree", true}, cmd_fiber},
        {{"lemma2", "dynamics", "lemma2_experiment", "Exact v(1 - beta^(d^n)) at --place, n <= --n-max, with a verdict. CSV: n,valuation,verdict", true}, cmd_lemma2},
        {{"lemma3", "dynamics", "lemma3_experiment", "Distances from alpha to the roots of x^(d^m) - beta^(d^n) (--levels m:n,...). CSV: m,n,closest,distances", true}, cmd_lemma3},
        {{"converge", "dynamics", "main_theorem_experiment", "(1/d^n) log|alpha^(d^n) - beta|_v per place. CSV: place,n,numerator,denominator,predicted_limit,A_n", true}, cmd_converge},
        {{"chebyshev", "dynamics", "chebyshev_poly", "Chebyshev polynomial T_d over F_p. CSV: the polynomial"}, cmd_chebyshev},
        {{"semiconjugacy", "dynamics", "semiconjugacy_check", "Checks z^d T_d((z^2+1)/z) = z^(2d) + 1. CSV: true|false"}, cmd_semiconjugacy},
        {{"transfer", "dynamics", "integrality_transfer_check", "beta vs phi(alpha) against phi^{-1}(beta) vs alpha. CSV: side_a,side_b,agree,witness_a,witness_b", true}, cmd_transfer},
        {{"t-set", "integrality", "T_set", "Places where |alpha|_v > 1. CSV: place"}, cmd_t_set},
        {{"integral", "integrality", "is_S_integral", "Is --beta S-integral relative to --alpha (inf allowed). CSV: integral,witness"}, cmd_integral},
        {{"integral-alg", "integrality", "is_S_integral_algebraic", "Are the roots of --f S-integral relative to --alpha. CSV: integral,witness"}, cmd_integral_alg},
        {{"symmetry", "integrality", "symmetry_check", "Integrality of alpha, beta in both directions. CSV: true|false"}, cmd_symmetry},
        {{"parse", "cli", "parse_ratfunc", "Canonical form of --alpha. CSV: the element"}, cmd_parse},
    };
    return table;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void emit(const Output& o, const RunConfig& c, std::ostream& out) {
    if (c.output == "json") {
        out << o.json.dump(2) << '\n';
        return;
    }
    if (o.raw_csv) {
        out << *o.raw_csv;
        return;
    }
    if (o.scalar) {
        out << *o.scalar << '\n';
        return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
        out << '\n';
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
}

void emit_error(std::ostream& err, int code, const std::string& kind, const std::string& message,
                std::optional<std::size_t> offset = std::nullopt) {
    ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    if (offset) j["offset"] = *offset;
    j["exit_code"] = code;
    err << j.dump() << '\n';
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> infos = [] {
        std::vector<CommandInfo> v;
        for (const auto& c : commands()) v.push_back(c.info);
        return v;
    }();
    return infos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in F_p(t): valuations, heights, S-integrality and the dynamics of z^d.", "orbitale"};
    app.set_config("--config", "", "Flat key=value file with the same keys as the flags; flags override it");
    RunConfig cfg;
    app.add_option("--p", cfg.p, "Characteristic (prime < 65536)")->capture_default_str();
    app.add_option("--d", cfg.d, "Exponent of the powering map z^d")->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Element of F_p(t), e.g. \"(t^2+1)/(t-1)\"");
    app.add_option("--beta", cfg.beta, "Element of F_p(t)");
    app.add_option("--f", cfg.f, "Polynomial: in x over F_p(t), or over F_p in one variable");
    app.add_option("--g", cfg.g, "Second polynomial");
    app.add_option("--place", cfg.place, "A place: inf or an irreducible polynomial in t");
    app.add_option("--S,--places", cfg.S, "Comma-separated places, e.g. \"inf,t,t^2+1\"")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--n-max", cfg.n_max, "Last level n")->capture_default_str();
    app.add_option("--n", cfg.n, "Level or order")->capture_default_str();
    app.add_option("--m", cfg.m, "Upper level / binomial degree")->capture_default_str();
    app.add_option("--levels", cfg.levels, "Level pairs m:n,m:n (default: all n < m <= --m)");
    app.add_option("--prec", cfg.prec, "Series precision")->envname("ORBITALE_PREC")->capture_default_str();
    app.add_option("--steps", cfg.steps, "Orbit length")->capture_default_str();
    app.add_option("--l", cfg.l, "Root degree for lth-power")->capture_default_str();
    app.add_option("--op", cfg.op, "poly-arith operation");
    app.add_option("--at", cfg.at, "Evaluation point (integer) for poly-arith eval");
    app.add_option("--bound", cfg.bound, "Height bound (rational)")->capture_default_str();
    app.add_option("--r", cfg.r, "Census threshold log r (rational)")->capture_default_str();
    app.add_option("--x0", cfg.x0, "Starting approximation for hensel (element of F_p(t))");
    app.add_option("--output", cfg.output, "csv or json")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed (factorization)")->capture_default_str();
    app.add_flag("--allow-wild", cfg.allow_wild, "Admit p | d (counterexample mode)");
    app.add_flag("--float", cfg.float_mode, "Render rationals as decimals (for reading only)");
    for (const auto& c : commands()) app.add_subcommand(c.info.name, c.info.summary)->fallthrough()->footer("Flags are shared by all subcommands; see orbitale --help.");
    app.require_subcommand(1, 1);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(err, 2, "config", e.what());
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const auto& cmds = commands();
    const auto it = std::find_if(cmds.begin(), cmds.end(), [&](const Command& c) { return c.info.name == name; });
    try {
        cfg.validate(it->info.uses_map_degree);
        const Output o = it->handler(cfg, Fmt(cfg.float_mode));
        emit(o, cfg, out);
        return 0;
    } catch (const ParseError& e) {
        emit_error(err, 2, "parse", e.what(), e.offset);
        return 2;
    } catch (const ConfigError& e) {
        emit_error(err, 2, "config", e.what());
        return 2;
    } catch (const WildCaseError& e) {
        emit_error(err, 1, "wild", e.what());
        return 1;
    } catch (const PreconditionError& e) {
        emit_error(err, 1, "precondition", e.what());
        return 1;
    } catch (const PrecisionExhausted& e) {
        emit_error(err, 1, "precision", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error(err, 1, "error", e.what());
        return 1;
    }
}

}  // namespace orbitale
