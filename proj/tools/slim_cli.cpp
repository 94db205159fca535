// Batch driver: builds algebras, runs the verification suites, integrates
// cocycles symbolically, and emits reproducible reports. Rationals serialize
// as "num/den" strings everywhere; no floats touch any file. Exit codes:
// 0 all checks pass, 1 verification failure, 2 usage or configuration error.

#include "slim/checks.hpp"
#include "slim/slim.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <memory>

using json = nlohmann::ordered_json;
using namespace slim;

namespace {

constexpr const char* kVersion = "0.1.0";

// --- algebra configs ----------------------------------------------------------

LieSuperalgebra algebra_from_json(const json& j) {
    SuperBasis basis;
    for (const auto& e : j.at("basis")) {
        basis.labels.push_back(e.at("label").get<std::string>());
        std::string p = e.at("parity").get<std::string>();
        if (p != "even" && p != "odd") throw error("config: parity must be 'even' or 'odd'");
        basis.parity.push_back(p == "odd" ? Parity::odd : Parity::even);
    }
    LieSuperalgebra g(j.value("name", std::string("custom")), std::move(basis));
    auto index_of = [&](const std::string& label) {
        for (int i = 0; i < g.dim(); ++i)
            if (g.basis.labels[i] == label) return i;
        throw error("config: unknown label '" + label + "'");
    };
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            int x = index_of(b.at("x").get<std::string>());
            int y = index_of(b.at("y").get<std::string>());
            SparseVec v;
            for (const auto& t : b.at("result")) {
                Rat coef = Rat::parse(t.at("coef").get<std::string>());
                detail::sparse_add(v, index_of(t.at("label").get<std::string>()), coef);
            }
            g.set_bracket(x, y, std::move(v));
        }
    }
    auto rep = validate(g);
    if (!rep.ok) throw error("config: algebra fails validation: " + rep.failure);
    return g;
}

std::shared_ptr<const LieSuperalgebra> load_algebra(const std::string& builtin,
                                                    const std::string& config_path) {
    if (!builtin.empty() && !config_path.empty())
        throw error("give either --builtin or --config, not both");
    if (!builtin.empty()) {
        if (builtin == "heisenberg")
            return std::make_shared<const LieSuperalgebra>(build_heisenberg());
        if (builtin.rfind("supertranslation", 0) == 0) {
            // supertranslation:k:flavor with flavor k2 or k3
            int k = 1;
            Flavor f = Flavor::k2;
            auto p1 = builtin.find(':');
            if (p1 != std::string::npos) {
                auto p2 = builtin.find(':', p1 + 1);
                k = std::stoi(builtin.substr(p1 + 1, p2 - p1 - 1));
                if (p2 != std::string::npos && builtin.substr(p2 + 1) == "k3") f = Flavor::k3;
            }
            return std::make_shared<const LieSuperalgebra>(build_supertranslation(k, f));
        }
        if (builtin.rfind("so", 0) == 0) {
            int n = std::stoi(builtin.substr(2));
            return std::make_shared<const LieSuperalgebra>(build_so(n).algebra);
        }
        throw error("unknown builtin algebra '" + builtin +
                    "' (try heisenberg, supertranslation:k[:k3], soN)");
    }
    if (config_path.empty()) throw error("an algebra is required: --builtin or --config");
    std::ifstream in(config_path);
    if (!in) throw error("cannot open config '" + config_path + "'");
    json j = json::parse(in);
    return std::make_shared<const LieSuperalgebra>(algebra_from_json(j));
}

Cochain cochain_from_json(const LieSuperalgebra* g, const json& spec) {
    if (!spec.is_array() || spec.empty()) throw error("cochain spec: nonempty array required");
    int level = -1;
    Cochain c(g, static_cast<int>(spec.front().at("labels").size()));
    for (const auto& term : spec) {
        std::vector<int> labels;
        for (const auto& l : term.at("labels")) {
            std::string name = l.get<std::string>();
            int idx = -1;
            for (int i = 0; i < g->dim(); ++i)
                if (g->basis.labels[i] == name) idx = i;
            if (idx < 0) throw error("cochain spec: unknown label '" + name + "'");
            labels.push_back(idx);
        }
        if (level < 0) level = static_cast<int>(labels.size());
        if (static_cast<int>(labels.size()) != level)
            throw error("cochain spec: inconsistent arities");
        c.add_term(labels, Rat::parse(term.at("coef").get<std::string>()));
    }
    return c;
}

// --- report serialization -------------------------------------------------------

json report_to_json(const std::string& suite, const SuiteOptions& opt,
                    const std::vector<CheckRecord>& records, bool timings) {
    json j;
    j["tool"] = "slim";
    j["version"] = kVersion;
    j["suite"] = suite;
    j["seed"] = opt.seed;
    json ks = json::array();
    for (int k : opt.ks) ks.push_back(k);
    j["k"] = ks;
    j["grassmann"] = opt.grassmann_n;
    json recs = json::array();
    for (const auto& r : records) {
        json e;
        e["id"] = r.id;
        e["anchor"] = r.anchor;
        e["status"] = r.pass ? "pass" : "fail";
        e["witness"] = r.witness;
        if (timings) e["wall_ms"] = r.wall_ms;
        else e["wall_ms"] = nullptr;
        recs.push_back(e);
    }
    j["records"] = recs;
    return j;
}

std::string report_to_markdown(const std::string& suite, const std::vector<CheckRecord>& records,
                               bool timings) {
    std::ostringstream os;
    os << "# verify " << suite << "\n\n";
    os << "| check | anchor | status | witness |" << (timings ? " ms |" : "") << "\n";
    os << "|---|---|---|---|" << (timings ? "---|" : "") << "\n";
    for (const auto& r : records) {
        os << "| " << r.id << " | " << r.anchor << " | " << (r.pass ? "pass" : "fail") << " | "
           << r.witness << " |";
        if (timings) os << " " << int(r.wall_ms) << " |";
        os << "\n";
    }
    return os.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw error("cannot write '" + out_path + "'");
        out << content << "\n";
    }
}

// --- integrate output -------------------------------------------------------------

std::string monomial_key(const LieSuperalgebra& g, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m) {
        int arg = (v - kMaxTVars) / g.dim();
        int label = (v - kMaxTVars) % g.dim();
        if (!first) os << "*";
        first = false;
        os << "x" << arg << "_" << g.basis.labels[label];
        if (e > 1) os << "^" << e;
    }
    return first ? "1" : os.str();
}

json group_cochain_to_json(const GroupCochain& f) {
    json j;
    j["tool"] = "slim";
    j["version"] = kVersion;
    j["algebra"] = f.g->name;
    json basis = json::array();
    for (const auto& l : f.g->basis.labels) basis.push_back(l);
    j["basis"] = basis;
    j["level"] = f.level;
    j["picture"] = f.homogeneous ? "homogeneous" : "inhomogeneous";
    json terms = json::object();
    for (const auto& [m, c] : f.poly.terms()) terms[monomial_key(*f.g, m)] = c.str();
    j["terms"] = terms;
    return j;
}

// --- cohomology witnesses -----------------------------------------------------------

// basis of the nullspace of the matrix with the given rows
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, int cols) {
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c].is_zero()) continue;
            Rat f = rows[r][c] / rows[rank][c];
            for (int cc = 0; cc < cols; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::vector<Rat>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = Rat(1);
        for (int r = 0; r < rank; ++r) {
            if (rows[r][free].is_zero()) continue;
            v[pivot_col[r]] = -(rows[r][free] / rows[r][pivot_col[r]]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int cmd_cohomology(const std::shared_ptr<const LieSuperalgebra>& g, int level,
                   const std::string& out_path) {
    const long long guard = 20000;
    int dim_h = cohomology_dim(*g, level, guard);

    json j;
    j["tool"] = "slim";
    j["version"] = kVersion;
    j["algebra"] = g->name;
    j["level"] = level;
    j["dimension"] = dim_h;
    json witnesses = json::array();

    if (level >= 1 && dim_h > 0) {
        std::vector<std::vector<int>> p_monos;
        enumerate_monomials(*g, level, [&](const std::vector<int>& l) { p_monos.push_back(l); });
        const int np = static_cast<int>(p_monos.size());
        // kernel of d_p
        std::vector<std::vector<Rat>> rows;
        enumerate_monomials(*g, level + 1, [&](const std::vector<int>& m) {
            std::vector<Rat> row(np);
            bool nonzero = false;
            for (int u = 0; u < np; ++u) {
                Cochain unit(g.get(), level);
                unit.add_term(p_monos[u], Rat(1));
                row[u] = coboundary_on_tuple(unit, m);
                nonzero = nonzero || !row[u].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        });
        auto kernel = nullspace(std::move(rows), np);
        // image rows of d_{p-1} feed an eliminator; kernel vectors that extend
        // its rank represent nontrivial classes
        Eliminator elim(np);
        uint64_t id = 0;
        enumerate_monomials(*g, level - 1, [&](const std::vector<int>& u) {
            Cochain unit(g.get(), level - 1);
            unit.add_term(u, Rat(1));
            SparseRow row;
            row.id = id++;
            for (int c = 0; c < np; ++c) {
                Rat v = coboundary_on_tuple(unit, p_monos[c]);
                if (!v.is_zero()) row.entries.push_back({c, v});
            }
            elim.add_row(row);
        });
        int found = 0;
        for (const auto& v : kernel) {
            if (found == dim_h) break;
            int before = elim.rank();
            SparseRow row;
            row.id = id++;
            for (int c = 0; c < np; ++c)
                if (!v[c].is_zero()) row.entries.push_back({c, v[c]});
            elim.add_row(row);
            if (elim.rank() == before) continue;
            ++found;
            json w = json::array();
            for (int c = 0; c < np; ++c) {
                if (v[c].is_zero()) continue;
                json term;
                json labels = json::array();
                for (int l : p_monos[c]) labels.push_back(g->basis.labels[l]);
                term["labels"] = labels;
                term["coef"] = v[c].str();
                w.push_back(term);
            }
            witnesses.push_back(w);
        }
    }
    j["witnesses"] = witnesses;
    write_output(out_path, j.dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of division-algebra supergeometry"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::vector<int> ks{1, 2, 4, 8};
    int grassmann_n = 2;
    int samples = 0;
    uint64_t seed = 0x51a7e;
    std::string format = "json";
    std::string out_path;
    bool timings = false;
    verify->add_option("--suite", suite, "division|spinor|cohomology|linfty|integration|super")
        ->required();
    verify->add_option("--k", ks, "division algebra dimensions to cover");
    verify->add_option("--grassmann", grassmann_n, "Grassmann generator count for A-points");
    verify->add_option("--samples", samples, "override per-check sample counts");
    verify->add_option("--seed", seed, "seed for all randomized checks");
    verify->add_option("--format", format, "json|md")->check(CLI::IsMember({"json", "md"}));
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_flag("--timings", timings, "include wall times (breaks byte-reproducibility)");

    // integrate
    auto* integrate = app.add_subcommand("integrate", "integrate a cochain symbolically");
    std::string builtin, config_path, cochain_name, cochain_path, int_out;
    int level = 0;
    integrate->add_option("--builtin", builtin, "heisenberg | supertranslation:k[:k3] | soN");
    integrate->add_option("--config", config_path, "algebra config JSON");
    integrate->add_option("--cochain", cochain_name, "builtin cochain name (gamma)");
    integrate->add_option("--cochain-json", cochain_path, "cochain spec JSON file");
    integrate->add_option("--level", level, "expected cochain level (checked when given)");
    integrate->add_option("--out", int_out, "output path for the group cochain JSON");

    // cohomology
    auto* cohom = app.add_subcommand("cohomology", "compute a cohomology dimension");
    std::string c_builtin, c_config, c_out;
    int c_level = 0;
    cohom->add_option("--builtin", c_builtin, "heisenberg | supertranslation:k[:k3] | soN");
    cohom->add_option("--config", c_config, "algebra config JSON");
    cohom->add_option("--level", c_level, "cochain level p")->required();
    cohom->add_option("--out", c_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            for (int k : ks)
                if (k != 1 && k != 2 && k != 4 && k != 8) throw error("bad k (use 1, 2, 4, 8)");
            SuiteOptions opt;
            opt.ks = ks;
            opt.grassmann_n = grassmann_n;
            opt.samples = samples;
            opt.seed = seed;
            if (const char* w = std::getenv("SLIM_WORKERS")) opt.workers = std::max(1, atoi(w));
            auto records = run_suite(suite, opt);
            std::string content = format == "md"
                                      ? report_to_markdown(suite, records, timings)
                                      : report_to_json(suite, opt, records, timings).dump(2);
            write_output(out_path, content);
            for (const auto& r : records)
                if (!r.pass) return 1;
            return 0;
        }
        if (*integrate) {
            auto g = load_algebra(builtin, config_path);
            if (!g->two_step_nilpotent())
                throw error("algebra '" + g->name + "' is not 2-step nilpotent; refusing");
            Cochain w(g.get(), 1);
            if (cochain_name == "gamma") {
                w = make_gamma(g.get());
            } else if (!cochain_path.empty()) {
                std::ifstream in(cochain_path);
                if (!in) throw error("cannot open cochain spec '" + cochain_path + "'");
                w = cochain_from_json(g.get(), json::parse(in));
            } else {
                throw error("a cochain is required: --cochain gamma or --cochain-json file");
            }
            if (level > 0 && w.level() != level)
                throw error("cochain has level " + std::to_string(w.level()) + ", expected " +
                            std::to_string(level));
            GroupCochain f = integrate_cochain(w);
            write_output(int_out, group_cochain_to_json(f).dump(2));
            return 0;
        }
        if (*cohom) {
            auto g = load_algebra(c_builtin, c_config);
            return cmd_cohomology(g, c_level, c_out);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
