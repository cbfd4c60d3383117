#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trihedral/classify.hpp"
#include "trihedral/graphs.hpp"
#include "trihedral/hecke.hpp"
#include "trihedral/koornwinder.hpp"
#include "trihedral/reps.hpp"
#include "trihedral/verify.hpp"
#include "trihedral/zigzag.hpp"

using json = nlohmann::ordered_json;
using namespace trihedral;

namespace {

json laurent_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.get_str();
    return j;
}

json frac_json(const FracLaurent& f) {
    if (f.is_laurent()) return laurent_json(f.num());
    return json{{"num", laurent_json(f.num())}, {"den", laurent_json(f.den())}};
}

json bivar_json(const BivarPoly& p) {
    json j = json::array();
    for (const auto& [m, c] : p.coeffs()) j.push_back({m.first, m.second, c.get_str()});
    return j;
}

json laurent_matrix_json(const Matrix<LaurentPoly>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(laurent_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json graph_json(const graphs::TricoloredGraph& g) {
    auto mat = [](const Matrix<Int>& m) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
            rows.push_back(row);
        }
        return rows;
    };
    return json{{"name", g.name},
                {"level", g.level},
                {"green", g.n_green()},
                {"orange", g.n_orange()},
                {"purple", g.n_purple()},
                {"A", mat(g.A)},
                {"B", mat(g.B)},
                {"C", mat(g.C)}};
}

std::string fmt(double x) {
    char buf[64];
    // clamp negative zero for byte-stable output
    if (std::abs(x) < 5e-13) x = 0.0;
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

// pretty text form with quantum-number abbreviations
std::string pretty_laurent(const LaurentPoly& p) {
    static const std::pair<const char*, LaurentPoly> named[] = {
        {"[3]!", quantum_factorial(3)}, {"[3]", quantum_integer(3)}, {"[2]", quantum_integer(2)}};
    for (const auto& [n, v] : named)
        if (p == v) return n;
    return p.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the trihedral Hecke algebra and its relatives"};
    app.require_subcommand(1);

    int level = 0, m = 0, n = 0;
    double tol = 1e-9;
    std::string format = "text", out_path, color = "g", family = "A", ename = "E5";
    bool pretty = false, check = false, exhaustive = false;
    int max_verts = 3, max_mult = 2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", out_path, "write output to a file");
        sub->add_option("--tol", tol, "numeric tolerance")
            ->check(CLI::Range(1e-300, 1e-3));
    };

    auto* poly = app.add_subcommand("poly", "print the polynomial p_{m,n}");
    poly->add_option("--m", m)->required();
    poly->add_option("--n", n)->required();
    poly->add_flag("--pretty", pretty);
    add_common(poly);

    auto* roots = app.add_subcommand("roots", "vanishing set of a level");
    roots->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    add_common(roots);

    auto* hk = app.add_subcommand("hecke", "basis, dimension and products");
    hk->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    std::string left_label, right_label;
    hk->add_option("--left", left_label, "label m,n,u of the left factor");
    hk->add_option("--right", right_label, "label m,n,u of the right factor");
    add_common(hk);

    auto* cl = app.add_subcommand("cells", "cell decomposition of a level");
    cl->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    add_common(cl);

    auto* rp = app.add_subcommand("reps", "simple representation report");
    rp->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    add_common(rp);

    auto* gr = app.add_subcommand("graph", "generalized ADE diagrams and certificates");
    gr->add_option("--family", family, "A, D, C or an E name (E5, E9_1..E9_4, E21)");
    gr->add_option("--level", level)->check(CLI::NonNegativeNumber);
    gr->add_option("--corner", color, "corner color for A/D")->check(CLI::IsMember({"g", "o", "p"}));
    gr->add_flag("--check", check, "run admissibility/annihilation/spectrum certificates");
    add_common(gr);

    auto* cf = app.add_subcommand("classify", "search or verify the classification");
    cf->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    cf->add_flag("--exhaustive", exhaustive, "run the bounded exhaustive search");
    cf->add_option("--max-verts", max_verts, "max vertices per color for --exhaustive");
    cf->add_option("--max-mult", max_mult, "max edge multiplicity for --exhaustive");
    add_common(cf);

    auto* zz = app.add_subcommand("zigzag", "trihedral zigzag algebra data");
    zz->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    bool want_gram = false, want_cartan = false;
    std::string theta;
    zz->add_flag("--gram", want_gram, "report Gram nondegeneracy");
    zz->add_flag("--cartan", want_cartan, "graded Cartan matrix");
    zz->add_option("--theta", theta, "theta action matrix for a color")
        ->check(CLI::IsMember({"g", "o", "p"}));
    add_common(zz);

    auto* va = app.add_subcommand("verify-all", "run the verification table for a level");
    va->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    add_common(va);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (*poly) {
            BivarPoly p = koornwinder::chebyshev_sl3(m, n);
            if (format == "json") {
                emit(json{{"m", m}, {"n", n}, {"poly", bivar_json(p)}}.dump() + "\n", out_path);
            } else {
                emit(p.str() + "\n", out_path);
            }
            return 0;
        }
        if (*roots) {
            auto pts = koornwinder::vanishing_set(level);
            if (format == "json") {
                json arr = json::array();
                for (const auto& p : pts) {
                    Cplx z = p.z();
                    arr.push_back({{"k", p.k}, {"l", p.l}, {"z", {fmt(z.real()), fmt(z.imag())}}});
                }
                emit(arr.dump() + "\n", out_path);
            } else {
                std::ostringstream os;
                for (const auto& p : pts) {
                    Cplx z = p.z();
                    os << "(" << p.k << "," << p.l << ") z = " << fmt(z.real()) << " + "
                       << fmt(z.imag()) << "i\n";
                }
                emit(os.str(), out_path);
            }
            return 0;
        }
        if (*hk) {
            auto parse_label = [&](const std::string& s) {
                if (s == "1") return hecke::KLLabel::one();
                int mm, nn;
                char uu;
                if (std::sscanf(s.c_str(), "%d,%d,%c", &mm, &nn, &uu) != 3)
                    throw CLI::ValidationError("--left/--right", "expected m,n,u");
                return hecke::KLLabel::rkl(mm, nn, color_from_char(uu));
            };
            std::ostringstream os;
            if (!left_label.empty() && !right_label.empty()) {
                hecke::HeckeElement a(level), b(level);
                a.add(parse_label(left_label), FracLaurent(LaurentPoly(1)));
                b.add(parse_label(right_label), FracLaurent(LaurentPoly(1)));
                hecke::HeckeElement prod = hecke::multiply(a, b);
                if (format == "json") {
                    json arr = json::array();
                    for (const auto& [l, c] : prod.terms())
                        arr.push_back({{"label", l.str()}, {"coeff", frac_json(c)}});
                    os << arr.dump() << "\n";
                } else {
                    os << prod.str() << "\n";
                }
            } else {
                if (format == "json") {
                    json arr = json::array();
                    for (const auto& l : hecke::basis(level)) arr.push_back(l.str());
                    os << json{{"dimension", hecke::dimension(level)}, {"basis", arr}}.dump()
                       << "\n";
                } else {
                    os << "dimension " << hecke::dimension(level) << "\n";
                    for (const auto& l : hecke::basis(level)) os << l.str() << "\n";
                }
            }
            emit(os.str(), out_path);
            return 0;
        }
        if (*cl) {
            auto cd = hecke::cells(level);
            auto dump_cells = [](const std::vector<std::vector<hecke::KLLabel>>& cs) {
                json arr = json::array();
                for (const auto& c : cs) {
                    json cell = json::array();
                    for (const auto& l : c) cell.push_back(l.str());
                    arr.push_back(cell);
                }
                return arr;
            };
            if (format == "json") {
                emit(json{{"left", dump_cells(cd.left)},
                          {"right", dump_cells(cd.right)},
                          {"two_sided", dump_cells(cd.two_sided)}}
                             .dump() +
                         "\n",
                     out_path);
            } else {
                std::ostringstream os;
                auto line = [&](const char* kind, const std::vector<std::vector<hecke::KLLabel>>& cs) {
                    os << kind << " cells (" << cs.size() << "):\n";
                    for (const auto& c : cs) {
                        os << "  {";
                        for (std::size_t i = 0; i < c.size(); ++i)
                            os << (i ? ", " : "") << c[i].str();
                        os << "}\n";
                    }
                };
                line("left", cd.left);
                line("right", cd.right);
                line("two-sided", cd.two_sided);
                emit(os.str(), out_path);
            }
            return 0;
        }
        if (*rp) {
            auto st = reps::simple_table(level);
            auto chars = reps::admitted_characters(level);
            auto orbits = koornwinder::zeta_orbits(level);
            json jchars = json::array();
            for (const auto& c : chars)
                jchars.push_back({pretty_laurent(c.lg), pretty_laurent(c.lo), pretty_laurent(c.lp)});
            json jroots = json::array();
            for (std::size_t oi = 0; oi < orbits.size(); ++oi)
                for (const auto& p : orbits[oi]) {
                    Cplx z = p.z();
                    jroots.push_back({{"k", p.k},
                                      {"l", p.l},
                                      {"orbit", oi},
                                      {"z", {fmt(z.real()), fmt(z.imag())}},
                                      {"simple", reps::is_simple(z, tol)}});
                }
            json rep{{"level", level},
                     {"one_dim", st.one_dim},
                     {"three_dim", st.three_dim},
                     {"sum_of_squares", st.sum_of_squares},
                     {"dimension", hecke::dimension(level)},
                     {"characters", jchars},
                     {"roots", jroots}};
            if (format == "json") {
                emit(rep.dump() + "\n", out_path);
            } else {
                std::ostringstream os;
                os << "level " << level << ": " << st.one_dim << " one-dimensional, "
                   << st.three_dim << " three-dimensional simples; sum of squares "
                   << st.sum_of_squares << " = dim T_" << level << "\n";
                emit(os.str(), out_path);
            }
            return st.sum_of_squares == hecke::dimension(level) ? 0 : 1;
        }
        if (*gr) {
            graphs::TricoloredGraph g;
            if (family == "A") {
                g = graphs::type_A(level, color_from_char(color[0]));
            } else if (family == "D") {
                g = graphs::type_D(level, color_from_char(color[0]));
            } else if (family == "C") {
                g = graphs::type_C(level);
            } else {
                g = graphs::type_E(family);
                level = g.level;
            }
            json j = graph_json(g);
            int rc = 0;
            if (check) {
                bool adm = graphs::is_admissible(g);
                auto ann = graphs::annihilation_test(g, level);
                auto spec = graphs::spectrum_check(g, level, std::max(tol, 1e-6));
                j["admissible"] = adm;
                j["annihilation"] = ann.ok;
                j["annihilation_max_abs"] = ann.max_abs_entry.get_si();
                j["spectrum_ok"] = spec.ok;
                rc = (adm && ann.ok && spec.ok) ? 0 : 1;
            }
            emit(j.dump() + "\n", out_path);
            return rc;
        }
        if (*cf) {
            json j;
            if (exhaustive || level <= 2) {
                classify::SearchBounds bounds;
                bounds.max_green = bounds.max_orange = bounds.max_purple = max_verts;
                bounds.max_mult = max_mult;
                auto sols = classify::enumerate_solutions(level, bounds);
                json arr = json::array();
                for (auto& g : sols) {
                    g.name = classify::describe_solution(g);
                    json gj = graph_json(g);
                    gj["admissible"] = true;
                    gj["annihilation"] = true;
                    arr.push_back(gj);
                }
                j = json{{"level", level},
                         {"mode", "exhaustive"},
                         {"bounds", {{"max_verts", max_verts}, {"max_mult", max_mult}}},
                         {"classes", arr}};
            } else if (level == 3) {
                auto rep = classify::verify_theorem(3);
                j = json{{"level", 3},
                         {"mode", "verification"},
                         {"classes_found", rep.classes_found},
                         {"names", rep.names},
                         {"ok", rep.matches_expected}};
            } else {
                throw CLI::ValidationError("--level", "classification covers levels 0..3");
            }
            emit(j.dump() + "\n", out_path);
            return 0;
        }
        if (*zz) {
            json j{{"level", level}};
            if (want_gram) j["gram_nondegenerate"] = zigzag::gram_nondegenerate(level);
            if (want_cartan) j["cartan"] = laurent_matrix_json(zigzag::graded_cartan(level));
            if (!theta.empty())
                j["theta"] = laurent_matrix_json(
                    zigzag::theta_action(color_from_char(theta[0]), level));
            emit(j.dump() + "\n", out_path);
            return 0;
        }
        if (*va) {
            verify::Options o;
            o.level = level;
            o.tol = tol;
            auto outcome = verify::verify_all(o);
            emit(outcome.report, out_path);
            return outcome.ok ? 0 : 1;
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
