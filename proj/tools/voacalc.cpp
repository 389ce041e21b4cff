#include <bit>
#include <cstdlib>
#include <future>
#include <thread>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "voa/cache.hpp"
#include "voa/divisor.hpp"
#include "voa/genfunc.hpp"
#include "voa/oracle.hpp"
#include "voa/registry.hpp"
#include "voa/spec_json.hpp"
#include "voa/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace voa;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDomain = 3;

FaEngine make_engine(const std::string& selector) {
    VoaSpec spec = from_selector(selector);
    if (const char* dir = std::getenv("FA_RANK_CACHE_DIR"); dir && *dir) {
        if (auto entry = cache_load(dir, spec))
            return FaEngine(std::move(spec), std::move(entry->fusion), std::move(entry->averaging));
        FaEngine engine(std::move(spec));
        FusionCacheEntry entry;
        for (int w = 0; w < engine.size(); ++w) entry.fusion.push_back(engine.fusion_entries(w));
        entry.averaging = engine.averaging_entries();
        cache_store(dir, engine.spec(), entry);
        return engine;
    }
    return FaEngine(std::move(spec));
}

std::string trimmed(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

// Multiset grammar: comma-separated `label` or `label^count` terms.
Insertion parse_multiset(const VoaSpec& spec, const std::string& expr) {
    Insertion ins = Insertion::empty(spec.size());
    const std::string body = trimmed(expr);
    if (body.empty()) return ins;
    for (const std::string& raw : split(body, ',')) {
        const std::string term = trimmed(raw);
        if (term.empty()) throw SpecError("empty term in insertion expression");
        const auto caret = term.find('^');
        const std::string label = trimmed(term.substr(0, caret));
        long long count = 1;
        if (caret != std::string::npos) {
            try {
                count = std::stoll(trimmed(term.substr(caret + 1)));
            } catch (const std::exception&) {
                throw SpecError("malformed count in insertion term '" + term + "'");
            }
        }
        ins.add(resolve_label(spec, label), count);
    }
    return ins;
}

// Ordered grammar: bracketed label list; `label^count` repeats in place.
std::vector<int> parse_ordered(const VoaSpec& spec, const std::string& expr) {
    const std::string body = trimmed(expr);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw SpecError("ordered insertions use the bracketed form [a,b,c]");
    std::vector<int> out;
    const std::string inner = trimmed(body.substr(1, body.size() - 2));
    if (inner.empty()) return out;
    for (const std::string& raw : split(inner, ',')) {
        const std::string term = trimmed(raw);
        const auto caret = term.find('^');
        const std::string label = trimmed(term.substr(0, caret));
        long long count = 1;
        if (caret != std::string::npos) {
            try {
                count = std::stoll(trimmed(term.substr(caret + 1)));
            } catch (const std::exception&) {
                throw SpecError("malformed count in insertion term '" + term + "'");
            }
        }
        const int idx = resolve_label(spec, label);
        for (long long k = 0; k < count; ++k) out.push_back(idx);
    }
    return out;
}

std::pair<int, int> parse_frame(const VoaSpec& spec, const std::string& expr) {
    const auto parts = split(expr, ',');
    if (parts.size() != 2) throw SpecError("frame must name two modules, e.g. \"V,V\"");
    return {resolve_label(spec, trimmed(parts[0])), resolve_label(spec, trimmed(parts[1]))};
}

std::string describe_insertion(const VoaSpec& spec, const Insertion& ins) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < ins.size(); ++i) {
        if (ins.counts[i] == 0) continue;
        if (!first) out << ",";
        out << spec.labels[i];
        if (ins.counts[i] > 1) out << "^" << ins.counts[i];
        first = false;
    }
    if (first) out << "(empty)";
    return out.str();
}

std::string rat_str(const Rat& r) { return format_rational(r); }

Json divisor_json(const DivisorClass& d) {
    Json j;
    j["g"] = d.g;
    j["n"] = d.n;
    j["lambda"] = rat_str(d.lambda);
    Json psi = Json::array();
    for (const auto& p : d.psi) psi.push_back(rat_str(p));
    j["psi"] = psi;
    if (d.b_irr)
        j["b_irr"] = rat_str(*d.b_irr);
    else
        j["b_irr"] = nullptr;
    Json boundary = Json::array();
    for (const auto& [key, value] : d.boundary) {
        Json item;
        item["h"] = key.first;
        Json subset = Json::array();
        for (int i = 0; i < d.n; ++i)
            if ((key.second >> i) & 1u) subset.push_back(i + 1);
        item["I"] = subset;
        item["b"] = rat_str(value);
        boundary.push_back(item);
    }
    j["boundary"] = boundary;
    return j;
}

Json ratfunc_json(const RationalFunction& rf) {
    const auto coeff_list = [](const Poly& p) {
        Json arr = Json::array();
        for (const auto& c : p.coeffs()) {
            // Keep JSON numbers where they are exact, strings beyond int64.
            if (c >= std::numeric_limits<long long>::min() &&
                c <= std::numeric_limits<long long>::max())
                arr.push_back(static_cast<long long>(c));
            else
                arr.push_back(c.str());
        }
        return arr;
    };
    Json j;
    j["num"] = coeff_list(rf.num());
    j["den"] = coeff_list(rf.den());
    return j;
}

std::string subset_str(std::uint32_t mask, int n) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) {
            if (!first) out << ",";
            out << (i + 1);
            first = false;
        }
    out << "}";
    return out.str();
}

int cmd_rank(const std::string& selector, const std::string& ins_expr, long long genus,
             bool strict, bool json_mode) {
    FaEngine engine = make_engine(selector);
    Insertion ins = ins_expr.size() && trimmed(ins_expr).front() == '['
                        ? Insertion::from_ordered(engine.size(), parse_ordered(engine.spec(), ins_expr))
                        : parse_multiset(engine.spec(), ins_expr);
    if (strict) FaEngine::require_stable(genus, ins.total());
    const Int value = engine.rank(ins, genus);
    if (json_mode) {
        Json j;
        j["rank"] = value.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return kExitOk;
}

int cmd_fa_matrix(const std::string& selector, const std::string& ins_expr, long long genus,
                  bool strict, bool json_mode) {
    FaEngine engine = make_engine(selector);
    const Insertion ins = parse_multiset(engine.spec(), ins_expr);
    if (strict) FaEngine::require_stable(genus, ins.total() + 2);
    const FaMatrix fam = engine.fa_matrix(ins, genus);
    if (json_mode) {
        Json j;
        j["size"] = engine.size();
        j["genus"] = genus;
        j["insertions"] = describe_insertion(engine.spec(), ins);
        Json rows = Json::array();
        for (int i = 0; i < engine.size(); ++i) {
            Json row = Json::array();
            for (int k = 0; k < engine.size(); ++k) row.push_back(fam.entries.at(i, k).str());
            rows.push_back(row);
        }
        j["entries"] = rows;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "FA-matrix size=" << engine.size() << " genus=" << genus
                  << " insertions=" << describe_insertion(engine.spec(), ins) << "\n";
        // Rows stream one by one; big entries print in full.
        for (int i = 0; i < engine.size(); ++i) {
            for (int k = 0; k < engine.size(); ++k)
                std::cout << (k ? " " : "") << fam.entries.at(i, k).str();
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_genfunc(const std::string& selector, const std::string& step_expr,
                const std::string& deviation_expr, const std::string& frame_expr, long long genus,
                unsigned coeffs, bool json_mode) {
    FaEngine engine = make_engine(selector);
    const VoaSpec& spec = engine.spec();
    const Insertion step = parse_multiset(spec, step_expr);
    const Insertion deviation = parse_multiset(spec, deviation_expr);
    int i = spec.vacuum, j = spec.dual[spec.vacuum];
    if (!frame_expr.empty()) std::tie(i, j) = parse_frame(spec, frame_expr);

    const RationalFunction rf = indexing_function(engine, deviation, step, i, j, genus);
    const std::vector<Rat> series = series_prefix(rf, coeffs);

    // Cross-check each printed coefficient against a direct rank query;
    // queries are independent, so fan out over a bounded pool and join in
    // coefficient order.
    std::vector<Int> direct_values(coeffs);
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), coeffs ? coeffs : 1);
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (unsigned k = w; k < coeffs; k += workers)
                direct_values[k] = engine.rank_with_frame(deviation + step.scaled(k + 3), genus, i, j);
        }));
    for (auto& t : tasks) t.get();
    bool verified = true;
    for (unsigned k = 0; k < coeffs; ++k)
        if (Rat(direct_values[k]) != series[k]) verified = false;

    if (json_mode) {
        Json j_out = ratfunc_json(rf);
        Json cs = Json::array();
        for (const auto& c : series) cs.push_back(rat_str(c));
        j_out["coefficients"] = cs;
        j_out["verified"] = verified;
        std::cout << j_out.dump() << "\n";
    } else {
        std::cout << "f(z) = " << rf.to_string() << "\n";
        std::cout << "coefficients:";
        for (const auto& c : series) {
            std::cout << " ";
            if (denominator(c) == 1)
                std::cout << numerator(c).str();
            else
                std::cout << rat_str(c);
        }
        std::cout << "\n";
        std::cout << "verified against rank queries: " << (verified ? "ok" : "MISMATCH") << "\n";
    }
    return verified ? kExitOk : kExitDomain;
}

int cmd_divisor(const std::string& selector, const std::string& ins_expr, long long genus,
                bool json_mode) {
    FaEngine engine = make_engine(selector);
    const std::vector<int> ins = parse_ordered(engine.spec(), ins_expr);
    const DivisorClass d = c1(engine, ins, genus);
    if (json_mode) {
        std::cout << divisor_json(d).dump() << "\n";
        return kExitOk;
    }
    std::cout << "divisor class on Mbar_{" << d.g << "," << d.n << "}\n";
    std::cout << "lambda: " << rat_str(d.lambda) << "\n";
    for (int k = 0; k < d.n; ++k)
        std::cout << "psi[" << (k + 1) << "]: " << rat_str(d.psi[k]) << "\n";
    if (d.b_irr) std::cout << "b_irr: " << rat_str(*d.b_irr) << "\n";
    for (const auto& [key, value] : d.boundary)
        std::cout << "b_{" << key.first << ":" << subset_str(key.second, d.n)
                  << "}: " << rat_str(value) << "\n";
    if (d.g == 0) {
        std::cout << "F-nef on genus-0 quadripartitions: "
                  << (f_check_genus0(d) ? "pass" : "fail") << "\n";
        if (d.n == 4) std::cout << "degree on M04: " << rat_str(degree_on_M04(d)) << "\n";
    } else {
        std::cout << "type-1 F-curves: " << (f_check_type1(d) ? "pass" : "fail") << "\n";
        std::cout << "type-2 F-curves: " << (f_check_type2(d) ? "pass" : "fail") << "\n";
    }
    return kExitOk;
}

int cmd_nef(const std::string& selector, const std::string& holo_charge, bool json_mode) {
    FaEngine engine = make_engine(selector);
    const auto group = engine.pointed_group();
    if (!group) throw SpecError("selector '" + selector + "' is not a pointed VOA");
    const VoaSpec& spec = engine.spec();
    PointedData data;
    data.labels = spec.labels;
    data.table = group->mul;
    data.identity = group->identity;
    data.weights = spec.weights;
    data.central_charge = spec.central_charge;
    data.strongly_generated_degree_one = spec.strongly_generated_degree_one;
    const NefReport report = pointed_nef_report(data, parse_rational(holo_charge));

    if (json_mode) {
        Json j;
        j["group_order"] = data.order();
        j["a_average"] = rat_str(report.a_average);
        j["a_max"] = rat_str(report.a_max);
        Json types = Json::array();
        for (const auto& s : report.type_status) types.push_back(to_string(s));
        j["types"] = types;
        j["vacuum_divisor_fnef"] = report.vacuum_divisor_fnef;
        j["holomorphic_charge"] = rat_str(report.holomorphic_charge);
        j["padding_r0"] = report.padding_r0.str();
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    std::cout << "pointed VOA, group of order " << data.order() << "\n";
    std::cout << "a_average = " << rat_str(report.a_average)
              << ", a_max = " << rat_str(report.a_max) << "\n";
    for (int t = 0; t < 6; ++t)
        std::cout << "type " << (t + 1) << " F-curves: " << to_string(report.type_status[t])
                  << "\n";
    std::cout << "vacuum divisor F-nef (c >= 24*a_average >= 0): "
              << (report.vacuum_divisor_fnef ? "yes" : "no") << "\n";
    std::cout << "padding exponent r0 at c_H = " << rat_str(report.holomorphic_charge) << ": "
              << report.padding_r0.str() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& selector, int max_n, int max_g, bool json_mode) {
    FaEngine engine = make_engine(selector);
    VerifyReport report = verify_fa_properties(engine, max_n, max_g);

    // Pointed specs get the closed-form rank law and the divisor
    // cross-check as extra suites.
    if (const auto group = engine.pointed_group()) {
        CheckResult law{"pointed rank law", true, ""};
        const Int order = group->order();
        for_each_multiset(engine.size(), max_n, [&](const Insertion& ins) {
            if (!law.pass) return;
            for (long long g = 0; g <= max_g; ++g) {
                Int expect = (group->product(ins.to_list()) == group->identity)
                                 ? Int(1)
                                 : Int(0);
                for (long long k = 0; k < g && expect != 0; ++k) expect *= order;
                if (engine.rank(ins, g) != expect) {
                    law.pass = false;
                    law.witness = describe_insertion(engine.spec(), ins) + " at g=" +
                                  std::to_string(g);
                    return;
                }
            }
        });
        report.checks.push_back(law);

        const VoaSpec& spec = engine.spec();
        PointedData data;
        data.labels = spec.labels;
        data.table = group->mul;
        data.identity = group->identity;
        data.weights = spec.weights;
        data.central_charge = spec.central_charge;
        CheckResult divisor_law{"pointed divisor closed form", true, ""};
        for_each_multiset(engine.size(), std::min(max_n, 3), [&](const Insertion& ins) {
            if (!divisor_law.pass) return;
            const std::vector<int> tuple = ins.to_list();
            for (long long g = 0; g <= std::min(max_g, 2); ++g) {
                if (2 * g - 2 + static_cast<long long>(tuple.size()) <= 0) continue;
                if (!divisor_equal(c1(engine, tuple, g),
                                   c1_pointed_closed_form(data, tuple, g))) {
                    divisor_law.pass = false;
                    divisor_law.witness = describe_insertion(spec, ins) + " at g=" +
                                          std::to_string(g);
                    return;
                }
            }
        });
        report.checks.push_back(divisor_law);
    }

    // Any order-two module pins the parity law for its symmetric boundary
    // coefficients.
    {
        CheckResult parity{"order-two boundary parity", true, ""};
        bool found = false;
        for (int w = 0; w < engine.size() && parity.pass; ++w) {
            if (!engine.is_order_two(w)) continue;
            found = true;
            const Rat a_w = engine.spec().weights[w];
            const DivisorClass d = c1(engine, std::vector<int>(4, w), 0);
            for (const auto& [key, value] : d.boundary) {
                const int size = std::popcount(key.second);
                if (value != (size % 2 == 1 ? a_w : Rat(0))) {
                    parity.pass = false;
                    parity.witness = "module " + engine.spec().labels[w];
                    break;
                }
            }
        }
        if (found) report.checks.push_back(parity);
    }

    // Tensor selectors additionally get the product laws tied to their
    // factors: the Kronecker identity and rank multiplicativity.
    if (const auto factors = tensor_factors(selector)) {
        const FaEngine left(from_selector(factors->first));
        const FaEngine right(from_selector(factors->second));
        CheckResult kron{"Kronecker product law", true, ""};
        CheckResult mult{"rank multiplicativity", true, ""};
        for_each_multiset(left.size(), std::min(max_n, 2), [&](const Insertion& s) {
            for_each_multiset(right.size(), std::min(max_n, 2), [&](const Insertion& t) {
                if (s.total() != t.total()) return;
                if (!kron.pass && !mult.pass) return;
                // Pair the expanded tuples positionally.
                const auto ls = s.to_list();
                const auto lt = t.to_list();
                Insertion paired = Insertion::empty(engine.size());
                for (std::size_t k = 0; k < ls.size(); ++k)
                    paired.add(ls[k] * right.size() + lt[k]);
                for (long long g = 0; g <= max_g; ++g) {
                    const IntMat expect =
                        left.fa_matrix(s, g).entries.kronecker(right.fa_matrix(t, g).entries);
                    if (kron.pass && !(engine.fa_matrix(paired, g).entries == expect)) {
                        kron.pass = false;
                        kron.witness = describe_insertion(left.spec(), s) + " x " +
                                       describe_insertion(right.spec(), t) + " at g=" +
                                       std::to_string(g);
                    }
                    if (mult.pass &&
                        engine.rank(paired, g) != left.rank(s, g) * right.rank(t, g)) {
                        mult.pass = false;
                        mult.witness = describe_insertion(left.spec(), s) + " x " +
                                       describe_insertion(right.spec(), t) + " at g=" +
                                       std::to_string(g);
                    }
                }
            });
        });
        report.checks.push_back(kron);
        report.checks.push_back(mult);
    }

    if (json_mode) {
        Json j;
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            Json item;
            item["law"] = c.law;
            item["pass"] = c.pass;
            item["witness"] = c.witness;
            checks.push_back(item);
        }
        j["checks"] = checks;
        j["all_pass"] = report.all_pass();
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            if (c.pass)
                std::cout << "PASS " << c.law << "\n";
            else
                std::cout << "FAIL " << c.law << ": " << c.witness << "\n";
        }
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_registry(const std::string& selector, bool json_mode) {
    if (selector.empty()) {
        std::cout << "selector grammar:\n"
                  << "  virasoro:p,q       discrete-series Virasoro (coprime p,q >= 2)\n"
                  << "  sl2:l              affine sl2 at level l >= 1\n"
                  << "  pointed:file.json  spec file in the shared JSON schema\n"
                  << "  tensor:(sel,sel)   tensor product of two selectors\n"
                  << "  holomorphic:c      single-module VOA of central charge c\n";
        return kExitOk;
    }
    FaEngine engine = make_engine(selector);
    const VoaSpec& spec = engine.spec();
    if (json_mode) {
        std::cout << save_spec(spec);
        return kExitOk;
    }
    std::cout << "modules: " << spec.size() << ", central charge "
              << rat_str(spec.central_charge) << "\n";
    for (int i = 0; i < spec.size(); ++i) {
        std::cout << "  [" << i << "] " << spec.labels[i] << "  weight "
                  << rat_str(spec.weights[i]) << "  dual " << spec.labels[spec.dual[i]];
        if (i == spec.vacuum) std::cout << "  (vacuum)";
        if (engine.is_order_two(i)) std::cout << "  (order two)";
        std::cout << "\n";
    }
    if (const auto group = engine.pointed_group())
        std::cout << "pointed: group of order " << group->order() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ranks and first Chern classes of VOA coinvariant bundles"};
    app.require_subcommand(1);

    std::string voa_selector, ins_expr, step_expr, deviation_expr, frame_expr, holo_charge = "8";
    long long genus = 0;
    unsigned coeffs = 12;
    int max_n = 3, max_g = 1;
    bool json_mode = false, strict = false;

    const auto add_common = [&](CLI::App* cmd, bool with_genus) {
        cmd->add_option("--voa", voa_selector, "VOA selector")->required();
        cmd->add_flag("--json", json_mode, "machine-readable output");
        if (with_genus) cmd->add_option("--genus", genus, "genus (default 0)");
    };

    auto* rank = app.add_subcommand("rank", "rank of a coinvariant bundle");
    add_common(rank, true);
    rank->add_option("--ins", ins_expr, "insertion multiset, e.g. \"Wmin^4,V\"");
    rank->add_flag("--strict-stability", strict, "reject unstable (g,n)");

    auto* fam = app.add_subcommand("fa-matrix", "FA-matrix of an insertion multiset");
    add_common(fam, true);
    fam->add_option("--ins", ins_expr, "insertion multiset");
    fam->add_flag("--strict-stability", strict, "reject unstable (g,n+2)");

    auto* gf = app.add_subcommand("genfunc", "generating function of framed ranks");
    add_common(gf, true);
    gf->add_option("--step", step_expr, "step insertion (required, nonempty)")->required();
    gf->add_option("--deviation", deviation_expr, "deviation insertion (default empty)");
    gf->add_option("--frame", frame_expr, "frame modules \"a,b\" (default vacuum pair)");
    gf->add_option("--coeffs", coeffs, "number of series coefficients (default 12)");

    auto* dv = app.add_subcommand("divisor", "first Chern class of a coinvariant bundle");
    add_common(dv, true);
    dv->add_option("--ins", ins_expr, "ordered insertions, e.g. \"[Wmax,Wmax,Wmax,Wmax]\"")
        ->required();

    auto* nef = app.add_subcommand("nef", "F-nefness report for a pointed VOA");
    add_common(nef, false);
    nef->add_option("--holo-charge", holo_charge, "holomorphic central charge for padding (default 8)");

    auto* ver = app.add_subcommand("verify", "run the property suites");
    add_common(ver, false);
    ver->add_option("--max-n", max_n, "insertion bound (default 3)");
    ver->add_option("--max-g", max_g, "genus bound (default 1)");

    auto* reg = app.add_subcommand("registry", "describe builtin VOA families");
    reg->add_option("--voa", voa_selector, "VOA selector");
    reg->add_flag("--json", json_mode, "emit the spec JSON schema");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed()) return cmd_rank(voa_selector, ins_expr, genus, strict, json_mode);
        if (fam->parsed()) return cmd_fa_matrix(voa_selector, ins_expr, genus, strict, json_mode);
        if (gf->parsed())
            return cmd_genfunc(voa_selector, step_expr, deviation_expr, frame_expr, genus, coeffs,
                               json_mode);
        if (dv->parsed()) return cmd_divisor(voa_selector, ins_expr, genus, json_mode);
        if (nef->parsed()) return cmd_nef(voa_selector, holo_charge, json_mode);
        if (ver->parsed()) return cmd_verify(voa_selector, max_n, max_g, json_mode);
        if (reg->parsed()) return cmd_registry(voa_selector, json_mode);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}
