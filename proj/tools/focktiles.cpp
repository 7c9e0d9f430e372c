#include "focktiles/beadops.hpp"
#include "focktiles/canonical.hpp"
#include "focktiles/polytope.hpp"
#include "focktiles/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

using namespace focktiles;
using nlohmann::json;

namespace {

// malformed command-line input; exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition part(const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const std::exception& ex) {
        throw UsageError("bad partition \"" + text + "\": " + ex.what());
    }
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad integer list \"" + text + "\"");
        }
    }
    return out;
}

json pj(const Partition& p) { return p.parts; }

json hat_json(const HatLabel& h) {
    json upper = json::array();
    for (const auto& [ij, v] : h.upper) upper.push_back({ij.first + 1, ij.second + 1, v});
    return {{"diag", h.diag}, {"upper", upper}};
}

json trace_json(const std::vector<MoveStep>& steps) {
    json out = json::array();
    for (size_t i = 0; i < steps.size(); ++i)
        out.push_back({{"step", i + 1}, {"r", steps[i].r}, {"partition", pj(steps[i].partition)}, {"z", steps[i].z}});
    return out;
}

// text rendering of a JSON value on one line
std::string compact(const json& j) { return j.dump(); }

Laurent d_value(const Partition& lambda, const Partition& mu, int e, const std::string& method) {
    if (method == "closed") return d_closed(lambda, mu, e);
    if (method == "llt") return llt_G(mu, e).coeff(lambda);
    if (method == "inductive") return inductive_G(mu, e).coeff(lambda);
    BlockId b = block_of(mu, e);
    if (block_of(lambda, e) != b) return Laurent();
    return rouquier_d(lambda, mu, b);
}

FockVector column(const Partition& mu, int e, const std::string& method) {
    if (method == "llt") return llt_G(mu, e);
    if (method == "inductive") return inductive_G(mu, e);
    FockVector v;
    BlockId b = block_of(mu, e);
    for (const auto& lam : enumerate_block(b)) v.add(lam, method == "closed" ? d_closed(lam, mu, e) : rouquier_d(lam, mu, b));
    return v;
}

struct Options {
    int e = 2;
    bool as_json = false;
    std::vector<std::string> parts;
    std::string method = "closed";
    std::string algo = "crystal";
    std::string format = "json";
    std::string target;
    std::string gamma;
    std::string core;
    int weight = 0;
    int r = 0;
    bool trace = false;
    std::string suite = "all";
};

void need_parts(const Options& o, size_t n) {
    if (o.parts.size() != n) throw UsageError("expected " + std::to_string(n) + " partition argument(s)");
}

int run_verb(const std::string& verb, const Options& o, std::ostream& out) {
    int e = o.e;
    auto emit = [&](const json& value, const std::string& text) {
        out << (o.as_json ? value.dump() : text) << "\n";
    };
    if (verb == "core") {
        need_parts(o, 1);
        auto c = e_core(part(o.parts[0]), e);
        emit({{"core", pj(c)}}, compact(pj(c)));
    } else if (verb == "quotient") {
        need_parts(o, 1);
        auto cq = core_quotient_weight(part(o.parts[0]), e);
        json q = json::array();
        for (const auto& c : cq.quotient) q.push_back(pj(c));
        emit({{"core", pj(cq.core)}, {"quotient", q}, {"weight", cq.weight}}, compact(q));
    } else if (verb == "zlabel") {
        need_parts(o, 1);
        auto z = z_label(part(o.parts[0]), e);
        emit({{"z", z}}, compact(z));
    } else if (verb == "hatz") {
        need_parts(o, 1);
        auto h = hat_json(hat_z(part(o.parts[0]), e));
        emit(h, compact(h));
    } else if (verb == "epsilon") {
        need_parts(o, 1);
        auto mb = modified_basis(part(o.parts[0]), e);
        json lifted = json::array();
        for (const auto& h : mb.lifted) lifted.push_back(hat_json(h));
        emit({{"epsilon", mb.plain}, {"lifted", lifted}}, compact(mb.plain));
    } else if (verb == "pi") {
        need_parts(o, 1);
        auto lam = part(o.parts[0]);
        if (!o.target.empty()) {
            auto g = pi_membership(lam, int_list(o.target), e);
            emit({{"member", g.has_value()}, {"gamma", g ? json(*g) : json(nullptr)}}, g ? compact(*g) : "none");
        } else {
            auto verts = parallelotope(lam, e).vertices();
            emit({{"vertices", verts}}, compact(verts));
        }
    } else if (verb == "dnum") {
        if (o.parts.empty()) {
            std::string line;
            json all = json::array();
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                auto semi = line.find(';');
                if (semi == std::string::npos) throw UsageError("expected \"lambda;mu\" on stdin");
                auto lam = part(line.substr(0, semi)), mu = part(line.substr(semi + 1));
                auto d = d_value(lam, mu, e, o.method);
                if (o.as_json)
                    all.push_back({{"lambda", pj(lam)}, {"mu", pj(mu)}, {"d", d.str()}});
                else
                    out << d.str() << "\n";
            }
            if (o.as_json) out << all.dump() << "\n";
        } else {
            need_parts(o, 2);
            auto lam = part(o.parts[0]), mu = part(o.parts[1]);
            auto d = d_value(lam, mu, e, o.method);
            emit({{"lambda", pj(lam)}, {"mu", pj(mu)}, {"method", o.method}, {"d", d.str()}}, d.str());
        }
    } else if (verb == "gcolumn") {
        need_parts(o, 1);
        auto mu = part(o.parts[0]);
        auto g = column(mu, e, o.method);
        BlockId b = block_of(mu, e);
        json entries = json::array();
        std::string text;
        for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
            entries.push_back({{"lambda", pj(it->first)}, {"d", it->second.str()}});
            text += to_string(it->first) + " : " + it->second.str() + "\n";
        }
        json doc = {{"block", {{"e", e}, {"core", pj(b.core)}, {"weight", b.weight}}},
                    {"columns", json::array({{{"mu", pj(mu)}, {"method", o.method}, {"entries", entries}}})}};
        if (o.as_json)
            out << doc.dump() << "\n";
        else
            out << text;
    } else if (verb == "block") {
        if (!o.parts.empty()) throw UsageError("block takes --core and --weight");
        BlockId b{e, part(o.core), o.weight};
        if (!is_e_core(b.core, e)) throw std::domain_error("--core is not an e-core");
        json members = json::array();
        std::string text;
        for (const auto& p : enumerate_block(b)) {
            auto z = z_label(p, e);
            members.push_back({{"partition", pj(p)}, {"z", z}});
            text += to_string(p) + " " + compact(z) + "\n";
        }
        if (o.as_json)
            out << json{{"e", e}, {"core", pj(b.core)}, {"weight", b.weight}, {"members", members}}.dump() << "\n";
        else
            out << text;
    } else if (verb == "tiling") {
        if (!o.parts.empty()) throw UsageError("tiling takes --core and --weight");
        BlockId b{e, part(o.core), o.weight};
        if (!is_e_core(b.core, e)) throw std::domain_error("--core is not an e-core");
        out << export_tiling(build_tiling(b), o.format);
    } else if (verb == "mullineux") {
        need_parts(o, 1);
        auto lam = part(o.parts[0]);
        std::vector<MoveStep> steps;
        auto m = o.algo == "fast" ? mullineux_fast(lam, e, &steps) : mullineux_crystal(lam, e);
        json doc = {{"partition", pj(m)}, {"algo", o.algo}};
        if (o.trace && o.algo == "fast") doc["trace"] = trace_json(steps);
        emit(doc, to_string(m));
    } else if (verb == "moveone") {
        need_parts(o, 1);
        MoveOneTrace tr;
        auto mu = move_one(part(o.parts[0]), o.r, e, &tr);
        json doc = {{"partition", pj(mu)}, {"z", z_label(mu, e)}};
        if (o.trace)
            doc["trace"] = {{"r", tr.r},       {"q", tr.start}, {"b", tr.bead},         {"g", tr.gap},
                            {"sigma", pj(tr.sigma)}, {"k", tr.k}, {"l", tr.l}, {"landings", tr.landings}};
        emit(doc, to_string(mu));
    } else if (verb == "movealong") {
        need_parts(o, 1);
        std::vector<MoveStep> steps;
        try {
            auto mu = move_along(part(o.parts[0]), int_list(o.gamma), e, &steps);
            json doc = {{"partition", pj(mu)}, {"z", z_label(mu, e)}};
            if (o.trace) doc["trace"] = trace_json(steps);
            emit(doc, to_string(mu));
        } catch (const MoveError& ex) {
            if (o.trace) std::cerr << trace_json(ex.trace()).dump() << "\n";
            throw;
        }
    } else if (verb == "lambdah") {
        need_parts(o, 1);
        auto lam = part(o.parts[0]);
        auto hooks = hooks_e(lam, e);
        if (o.r < 1 || o.r > static_cast<int>(hooks.size())) throw std::domain_error("no rimhook with that index");
        auto mu = lambda_of_hook(lam, hooks[o.r - 1], e);
        emit({{"partition", pj(mu)}, {"hook_size", hooks[o.r - 1].size}}, to_string(mu));
    } else if (verb == "verify") {
        std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
        bool ok = true;
        for (const auto& n : names) {
            SuiteResult r;
            try {
                r = run_suite(n);
            } catch (const std::invalid_argument& ex) {
                throw UsageError(ex.what());
            }
            out << format_result(r) << std::endl;
            ok = ok && r.pass;
        }
        return ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock space canonical bases, abacus labels and parallelotope tilings"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, const std::string& positional_help) {
        sub->add_option("--e", o.e, "e (at least 2)")->check(CLI::Range(2, 1000));
        sub->add_flag("--json", o.as_json, "JSON output");
        if (!positional_help.empty()) sub->add_option("partitions", o.parts, positional_help);
    };
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"core", "e-core of a partition"},
             {"quotient", "e-quotient of a partition"},
             {"zlabel", "z-label"},
             {"hatz", "lifted label"},
             {"epsilon", "modified basis vectors"}}) {
        add_common(app.add_subcommand(name, help), "partition, e.g. 5,5,4,2,2,2,1,1 or 16,8,1^13");
    }
    auto pi = app.add_subcommand("pi", "parallelotope vertices, or membership of --target");
    add_common(pi, "partition");
    pi->add_option("--target", o.target, "label to test, comma separated");

    auto method_set = CLI::IsMember({"closed", "llt", "rouquier", "inductive"});
    auto dnum = app.add_subcommand("dnum", "q-decomposition number d(lambda, mu); reads lambda;mu lines from stdin without arguments");
    add_common(dnum, "lambda mu");
    dnum->add_option("--method", o.method, "closed|llt|rouquier|inductive")->check(method_set);
    auto gcol = app.add_subcommand("gcolumn", "canonical basis column of mu");
    add_common(gcol, "mu");
    gcol->add_option("--method", o.method, "closed|llt|rouquier|inductive")->check(method_set);

    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"block", "members of a block with their labels"}, {"tiling", "tiling of a block"}}) {
        auto sub = app.add_subcommand(name, help);
        add_common(sub, "");
        sub->add_option("--core", o.core, "e-core")->required();
        sub->add_option("--weight", o.weight, "e-weight")->required()->check(CLI::NonNegativeNumber);
        if (name == "tiling")
            sub->add_option("--format", o.format, "json|svg|json3d")->check(CLI::IsMember({"json", "svg", "json3d"}));
    }

    auto mull = app.add_subcommand("mullineux", "Mullineux image of an e-regular partition");
    add_common(mull, "partition");
    mull->add_option("--algo", o.algo, "crystal|fast")->check(CLI::IsMember({"crystal", "fast"}));
    mull->add_flag("--trace", o.trace, "include the moves of the fast algorithm");
    auto m1 = app.add_subcommand("moveone", "move along one modified basis vector");
    add_common(m1, "partition");
    m1->add_option("--r", o.r, "movement index (1-based)")->required();
    m1->add_flag("--trace", o.trace, "include the bead-operation data");
    auto ma = app.add_subcommand("movealong", "move along a set of modified basis vectors");
    add_common(ma, "partition");
    ma->add_option("--gamma", o.gamma, "movement indices, comma separated");
    ma->add_flag("--trace", o.trace, "include intermediate partitions");
    auto lh = app.add_subcommand("lambdah", "partition attached to the r-th rimhook of size divisible by e");
    add_common(lh, "partition");
    lh->add_option("--r", o.r, "rimhook index (1-based)")->required();
    auto ver = app.add_subcommand("verify", "run acceptance suites");
    ver->add_option("suite", o.suite, "AC-1 .. AC-9 or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : 2;
    }
    std::string verb = app.get_subcommands().front()->get_name();
    try {
        return run_verb(verb, o, std::cout);
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
