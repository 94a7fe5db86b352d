#include "mag/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mag/ancestral.hpp"
#include "mag/equivalence.hpp"
#include "mag/io.hpp"
#include "mag/oracle.hpp"
#include "mag/orient.hpp"
#include "mag/projection.hpp"
#include "mag/separation.hpp"

namespace mag {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

MixedGraph loadGraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseGraph(buf.str());
}

std::set<std::string> splitCsv(const std::string& csv) {
    std::set<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    return out;
}

std::string formatStatement(const IndependenceStatement& s) {
    std::string line = s.a + " _||_ " + s.b;
    if (!s.given.empty()) {
        line += " |";
        for (const std::string& z : s.given) line += " " + z;
    }
    return line;
}

std::string formatPath(const Path& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += " ";
        out += p[i];
    }
    return out;
}

int cmdValidate(const std::string& file, std::ostream& out) {
    MixedGraph g = loadGraph(file);
    AncestralReport report = checkAncestral(g);
    out << "ancestral: " << (report.ancestral ? "yes" : "no") << "\n";
    for (const std::string& v : report.violations) out << "  violation: " << v << "\n";
    if (!report.ancestral) {
        out << "maximal: not applicable\n";
        return kExitFalse;
    }
    bool maximal = isMaximal(g);
    out << "maximal: " << (maximal ? "yes" : "no") << "\n";
    if (!maximal) {
        const std::vector<std::string>& vs = g.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (g.isAdjacent(vs[i], vs[j])) continue;
                InducingPathResult r = inducingPath(g, vs[i], vs[j]);
                if (r.exists)
                    out << "  inducing path: " << formatPath(*r.witness) << "\n";
            }
        }
    }
    return maximal ? kExitTrue : kExitFalse;
}

int cmdMsep(const std::string& file, const std::string& a, const std::string& b,
            const std::string& given, std::ostream& out) {
    MixedGraph g = loadGraph(file);
    SeparationResult r = mSeparatedWithWitness(g, a, b, splitCsv(given));
    if (r.separated) {
        out << "m-separated\n";
        return kExitTrue;
    }
    out << "m-connected\n";
    out << "witness: " << formatPath(*r.witness) << "\n";
    return kExitFalse;
}

int cmdModel(const std::string& file, std::ostream& out) {
    MixedGraph g = loadGraph(file);
    for (const IndependenceStatement& s : independenceModel(g))
        out << formatStatement(s) << "\n";
    return kExitTrue;
}

int cmdEquiv(const std::string& file1, const std::string& file2, bool bruteforce,
             std::ostream& out) {
    MixedGraph g1 = loadGraph(file1);
    MixedGraph g2 = loadGraph(file2);
    EquivalenceResult r = markovEquivalentWithReason(g1, g2);
    if (bruteforce) {
        bool modelsEqual = independenceModel(g1) == independenceModel(g2);
        if (modelsEqual != r.equivalent)
            throw std::logic_error("equivalence test disagrees with the brute-force model comparison");
    }
    if (r.equivalent) {
        out << "equivalent\n";
        return kExitTrue;
    }
    out << "not equivalent: " << r.reason << "\n";
    return kExitFalse;
}

int cmdOrders(const std::string& file, std::ostream& out) {
    MixedGraph g = loadGraph(file);
    OrderMap orders = computeOrders(g);
    for (const auto& [t, order] : orders.orders) {
        out << "(" << t.a << "," << t.b << "," << t.c << ") order=" << order << " "
            << (isCollider(g, t.a, t.b, t.c) ? "collider" : "non-collider");
        auto w = orders.witnesses.find(t);
        if (w != orders.witnesses.end())
            out << " path: " << formatPath(w->second)
                << " (path order " << orders.pathOrders.at(t) << ")";
        out << "\n";
    }
    return kExitTrue;
}

int cmdSup(const std::string& file, bool oracle, std::ostream& out) {
    MixedGraph g = loadGraph(file);
    MixedGraph h = orientSup(g);
    if (oracle && h != supBruteforce(g))
        throw std::logic_error("orientation rules disagree with the brute-force representative");
    out << serializeGraph(h);
    return kExitTrue;
}

int cmdEssential(const std::string& file, std::ostream& out) {
    MixedGraph d = loadGraph(file);
    out << serializeGraph(essentialGraph(d));
    return kExitTrue;
}

int cmdProject(const std::string& file, const std::string& latent,
               const std::string& selection, std::ostream& out) {
    MixedGraph d = loadGraph(file);
    out << serializeGraph(project(d, splitCsv(latent), splitCsv(selection)));
    return kExitTrue;
}

int cmdMaximalize(const std::string& file, std::ostream& out) {
    MixedGraph g = loadGraph(file);
    out << serializeGraph(maximalize(g));
    return kExitTrue;
}

int cmdClass(const std::string& file, std::ostream& out) {
    MixedGraph g = loadGraph(file);
    std::vector<MixedGraph> members = enumerateClass(g);
    out << "members: " << members.size() << "\n";
    for (const MixedGraph& m : members) {
        out << "---\n";
        out << serializeGraph(m);
    }
    out << "invariant ends:\n";
    for (const EndReport& e : invariantEnds(g)) {
        const char* cls = e.classification == EndClassification::AlwaysArrowhead
                              ? "always-arrowhead"
                          : e.classification == EndClassification::AlwaysTail
                              ? "always-tail"
                              : "varies";
        out << "  (" << e.edge.first << "," << e.edge.second << ") at " << e.at << ": "
            << cls << "\n";
    }
    return kExitTrue;
}

int cmdDot(const std::string& file, std::ostream& out) {
    out << dotExport(loadGraph(file));
    return kExitTrue;
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"maximal ancestral graph toolkit"};
    app.require_subcommand(1);

    std::string file, file2, a, b, given, latent, selection;
    bool bruteforce = false, oracle = false;

    CLI::App* validate = app.add_subcommand("validate", "ancestrality and maximality report");
    validate->add_option("file", file)->required();

    CLI::App* msep = app.add_subcommand("msep", "m-separation query");
    msep->add_option("file", file)->required();
    msep->add_option("a", a)->required();
    msep->add_option("b", b)->required();
    msep->add_option("--given", given, "comma-separated conditioning set");

    CLI::App* model = app.add_subcommand("model", "full independence model");
    model->add_option("file", file)->required();

    CLI::App* equiv = app.add_subcommand("equiv", "Markov equivalence test");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();
    equiv->add_flag("--bruteforce", bruteforce, "cross-check against model comparison");

    CLI::App* orders = app.add_subcommand("orders", "triple order listing");
    orders->add_option("file", file)->required();

    CLI::App* sup = app.add_subcommand("sup", "equivalence-class representative");
    sup->add_option("file", file)->required();
    sup->add_flag("--oracle", oracle, "assert equality with the brute-force representative");

    CLI::App* essential = app.add_subcommand("essential", "essential graph of a DAG");
    essential->add_option("file", file)->required();

    CLI::App* projectCmd = app.add_subcommand("project", "latent projection of a DAG");
    projectCmd->add_option("file", file)->required();
    projectCmd->add_option("--latent", latent, "comma-separated latent vertices");
    projectCmd->add_option("--selection", selection, "comma-separated selection vertices");

    CLI::App* maximalizeCmd = app.add_subcommand("maximalize", "complete to a maximal graph");
    maximalizeCmd->add_option("file", file)->required();

    CLI::App* classCmd = app.add_subcommand("class", "enumerate the equivalence class");
    classCmd->add_option("file", file)->required();

    CLI::App* dot = app.add_subcommand("dot", "DOT export");
    dot->add_option("file", file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitTrue;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmdValidate(file, out);
        if (msep->parsed()) return cmdMsep(file, a, b, given, out);
        if (model->parsed()) return cmdModel(file, out);
        if (equiv->parsed()) return cmdEquiv(file, file2, bruteforce, out);
        if (orders->parsed()) return cmdOrders(file, out);
        if (sup->parsed()) return cmdSup(file, oracle, out);
        if (essential->parsed()) return cmdEssential(file, out);
        if (projectCmd->parsed()) return cmdProject(file, latent, selection, out);
        if (maximalizeCmd->parsed()) return cmdMaximalize(file, out);
        if (classCmd->parsed()) return cmdClass(file, out);
        if (dot->parsed()) return cmdDot(file, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

} // namespace mag
