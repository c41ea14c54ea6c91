// Command-line front end: parse charged multipartitions, dispatch to the
// library, render text/JSON/DOT.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crystal/cherednik.hpp"
#include "crystal/closedform.hpp"
#include "crystal/format.hpp"
#include "crystal/graph.hpp"

using namespace crystal;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ChargedMultipartition load_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("--input: cannot read " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw UsageError(std::string("--input: malformed JSON: ") + ex.what());
    }
    try {
        return cm_from_json(j);
    } catch (const std::exception& ex) {
        throw UsageError(std::string("--input: ") + ex.what());
    }
}

Charge parse_charge(const std::string& text) {
    Charge s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            s.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("--charge: malformed integer list: " + text);
        }
    if (s.size() < 2) throw UsageError("--charge: need at least two entries");
    return s;
}

std::vector<int> parse_ints(const std::string& flag, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError(flag + ": malformed integer list: " + text);
        }
    return out;
}

void print_cm(const ChargedMultipartition& cm, const std::string& format) {
    if (format == "json")
        std::cout << to_json(cm).dump() << "\n";
    else
        std::cout << compact(cm) << "  charge=" << nlohmann::json(cm.charge()).dump()
                  << " e=" << cm.modulus() << "\n";
}

void print_maybe(const std::optional<ChargedMultipartition>& cm, const std::string& format) {
    if (!cm) {
        std::cout << (format == "json" ? "null" : "null") << "\n";
        return;
    }
    print_cm(*cm, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"level-l Fock space crystals on abaci"};
    app.require_subcommand(1);
    std::string input = "-", format = "text";

    auto add_io = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--input", input, "multipartition JSON file, - for stdin");
        if (with_format) sub->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    };

    // render
    auto* render = app.add_subcommand("render", "draw the abacus");
    add_io(render, false);

    // sle
    auto* sle = app.add_subcommand("sle", "small crystal operations");
    sle->require_subcommand(1);
    int residue = 0;
    auto* sle_f = sle->add_subcommand("f", "apply the lowering operator");
    sle_f->add_option("--i", residue, "residue")->required();
    add_io(sle_f);
    auto* sle_e = sle->add_subcommand("e", "apply the raising operator");
    sle_e->add_option("--i", residue, "residue")->required();
    add_io(sle_e);
    auto* sle_depth = sle->add_subcommand("depth", "depth and source vertex");
    add_io(sle_depth);
    auto* sle_hw = sle->add_subcommand("hw", "totally periodic test");
    add_io(sle_hw);

    // slinf
    auto* slinf = app.add_subcommand("slinf", "big crystal operations");
    slinf->require_subcommand(1);
    int kindex = 1;
    auto* sl_up = slinf->add_subcommand("up", "travel upstream");
    sl_up->add_option("--k", kindex, "period index")->required();
    add_io(sl_up);
    auto* sl_down = slinf->add_subcommand("down", "travel downstream");
    sl_down->add_option("--k", kindex, "period index")->required();
    add_io(sl_down);
    auto* sl_theta = slinf->add_subcommand("theta", "position and depth");
    add_io(sl_theta);
    auto* sl_edges = slinf->add_subcommand("edges", "all moves at this vertex");
    add_io(sl_edges);

    // component
    auto* component = app.add_subcommand("component", "build a connected component");
    std::string crystal_kind = "slinf", comp_format = "text";
    int cap = 0;
    component->add_option("--crystal", crystal_kind, "sle|slinf")
        ->check(CLI::IsMember({"sle", "slinf"}));
    component->add_option("--cap", cap, "rank cap")->required();
    component->add_option("--format", comp_format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    component->add_option("--input", input, "multipartition JSON file, - for stdin");

    // closed-form
    auto* closed = app.add_subcommand("closed-form", "vertex of the charge-lattice component");
    std::string sigma_text, z_text;
    int modulus = 2;
    closed->add_option("--sigma", sigma_text, "partition")->required();
    closed->add_option("--z", z_text, "charge divided by e, comma separated")->required();
    closed->add_option("--e", modulus, "modulus")->required();
    closed->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // tabloid
    auto* tabloid = app.add_subcommand("tabloid", "row filling of a packed lattice abacus");
    int depth = 6;
    std::string swap_text;
    tabloid->add_option("--z", z_text, "charge divided by e, comma separated")->required();
    tabloid->add_option("--depth", depth, "entries per row");
    tabloid->add_option("--swap", swap_text, "j,j2: swap two rows and slide");

    // classify
    auto* classify = app.add_subcommand("classify", "support classifiers");
    classify->require_subcommand(1);
    int n = 0, e_flag = 2, m_rect = 0, a_comp = 1;
    std::string charge_text, lambda_text;
    auto* cl_triv = classify->add_subcommand("triv", "column multipartition");
    cl_triv->add_option("--n", n, "rank")->required();
    cl_triv->add_option("--e", e_flag, "modulus")->required();
    cl_triv->add_option("--charge", charge_text, "charge, comma separated")->required();
    auto* cl_rect = classify->add_subcommand("rectangle", "one rectangular component");
    cl_rect->add_option("--m", m_rect, "rectangle width")->required();
    cl_rect->add_option("--n", n, "rectangle height")->required();
    cl_rect->add_option("--a", a_comp, "component index")->required();
    cl_rect->add_option("--e", e_flag, "modulus")->required();
    cl_rect->add_option("--charge", charge_text, "charge, comma separated")->required();
    auto* cl_first = classify->add_subcommand("firstcomp", "all boxes in the first component");
    cl_first->add_option("--lambda", lambda_text, "partition")->required();
    cl_first->add_option("--e", e_flag, "modulus")->required();
    cl_first->add_option("--charge", charge_text, "charge, comma separated")->required();
    auto* cl_typeb = classify->add_subcommand("typeB", "charged bipartition");
    int n_check = -1;
    cl_typeb->add_option("--lambda", lambda_text, "bipartition, e.g. \"(2,1),(1)\"")->required();
    cl_typeb->add_option("--e", e_flag, "modulus")->required();
    cl_typeb->add_option("--charge", charge_text, "charge, comma separated")->required();
    cl_typeb->add_option("--n", n_check, "expected rank (validated)");

    // params
    auto* params = app.add_subcommand("params", "parameter dictionary");
    params->add_option("--e", e_flag, "modulus")->required();
    params->add_option("--charge", charge_text, "charge, comma separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*render) {
            std::cout << render_abacus(load_input(input));
        } else if (*sle_f || *sle_e) {
            auto cm = load_input(input);
            if (residue < 0 || residue >= cm.modulus())
                throw UsageError("--i: residue out of range");
            print_maybe(*sle_f ? f_tilde(cm, residue) : e_tilde(cm, residue), format);
        } else if (*sle_depth) {
            auto d = p_depth(load_input(input));
            std::cout << "p=" << d.p << "\n";
            std::cout << "source=" << compact(d.source) << "\n";
        } else if (*sle_hw) {
            std::cout << (is_totally_periodic(load_input(input)) ? "true" : "false") << "\n";
        } else if (*sl_up || *sl_down) {
            auto cm = load_input(input);
            if (kindex < 1) throw UsageError("--k: period index must be positive");
            print_maybe(*sl_up ? upsilon_minus(cm, kindex) : upsilon_plus(cm, kindex), format);
        } else if (*sl_theta) {
            auto tp = theta_position(load_input(input));
            if (format == "json") {
                nlohmann::json j;
                j["theta"] = tp.theta.parts();
                j["q"] = tp.q;
                j["source"] = to_json(tp.source);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "theta=" << compact(tp.theta) << "\n";
                std::cout << "q=" << tp.q << "\n";
                std::cout << "source=" << compact(tp.source) << "\n";
            }
        } else if (*sl_edges) {
            auto cm = load_input(input);
            for (auto& [k, v] : incoming_edges(cm))
                std::cout << "up k=" << k << " -> " << compact(v) << "\n";
            for (auto& [k, v] : outgoing_edges(cm))
                std::cout << "down k=" << k << " -> " << compact(v) << "\n";
        } else if (*component) {
            auto cm = load_input(input);
            auto kind = crystal_kind == "sle" ? CrystalKind::SLE : CrystalKind::SLINF;
            auto g = build_component(cm, kind, cap);
            if (comp_format == "dot") {
                std::cout << to_dot(g);
            } else if (comp_format == "json") {
                std::cout << to_json(g).dump() << "\n";
            } else {
                std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
                for (const auto& v : g.vertices) std::cout << compact(v) << "\n";
            }
        } else if (*closed) {
            Partition sigma = parse_partition(sigma_text);
            auto z = parse_ints("--z", z_text);
            auto cm = b_sigma_closed(sigma, z, modulus);
            bool sorted = std::is_sorted(z.rbegin(), z.rend());
            if (sorted && z.back() == 0 && !(zpartition_closed(sigma, z, modulus) == cm))
                throw std::logic_error("sorted-charge formula disagrees");
            print_cm(cm, format);
        } else if (*tabloid) {
            auto z = parse_ints("--z", z_text);
            auto t = tabloid_of(z, depth);
            if (!swap_text.empty()) {
                auto jj = parse_ints("--swap", swap_text);
                if (jj.size() != 2) throw UsageError("--swap: expected j,j2");
                t = tabloid_swap(t, jj[0], jj[1]);
            }
            for (int j = static_cast<int>(z.size()); j >= 1; --j) {
                std::cout << "row " << j << ":";
                for (int v : t.row(j)) std::cout << " " << v;
                std::cout << "\n";
            }
        } else if (*cl_triv) {
            auto s = parse_charge(charge_text);
            auto [q, p] = triv_bidepth(n, e_flag, s);
            std::cout << "q=" << q << " p=" << p << "\n";
            std::cout << (triv_is_fd(n, e_flag, s) ? "finite-dimensional" : "infinite-dimensional")
                      << "\n";
        } else if (*cl_rect) {
            auto s = parse_charge(charge_text);
            std::cout << "q=" << rectangle_q(m_rect, n, a_comp, e_flag, s) << "\n";
        } else if (*cl_first) {
            auto s = parse_charge(charge_text);
            Partition lambda = parse_partition(lambda_text);
            auto theta = firstcomp_theta(lambda, e_flag, s);
            std::cout << "theta=" << compact(theta) << "\n";
            std::cout << "q=" << theta.size() << "\n";
            std::cout << (firstcomp_is_hw(lambda, e_flag, s) ? "doubly highest weight"
                                                             : "not doubly highest weight")
                      << "\n";
        } else if (*cl_typeb) {
            auto s = parse_charge(charge_text);
            if (s.size() != 2) throw UsageError("--charge: type B needs exactly two entries");
            auto comps = parse_components(lambda_text);
            if (comps.size() != 2) throw UsageError("--lambda: expected a bipartition");
            ChargedMultipartition cm(comps, s, e_flag);
            if (n_check >= 0 && cm.rank() != n_check)
                throw UsageError("--n: rank does not match the bipartition");
            if (auto violation = typeB_pattern(cm)) {
                std::cout << "infinite-dimensional (pattern k=" << violation->k + 1
                          << " at column " << violation->beta << ")\n";
            } else if (!typeB_is_fd(cm)) {
                std::cout << "infinite-dimensional (positive small-crystal depth)\n";
            } else {
                std::cout << "finite-dimensional\n";
            }
        } else if (*params) {
            auto s = parse_charge(charge_text);
            auto cp = fock_to_cherednik({e_flag, s, 0});
            std::cout << "h=" << cp.h.str() << "\n";
            for (std::size_t p = 0; p < cp.h_p.size(); ++p)
                std::cout << "h_" << p + 1 << "=" << cp.h_p[p].str() << "\n";
            std::cout << "kappa=" << cp.kappa.str() << "\n";
            if (cp.typeB_c)
                std::cout << "c=(" << cp.typeB_c->first.str() << ","
                          << cp.typeB_c->second.str() << ")\n";
        }
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }
    return 0;
}
