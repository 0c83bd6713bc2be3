#include "mvcrys/acceptance.hpp"
#include "mvcrys/export.hpp"
#include "mvcrys/looplab.hpp"
#include "mvcrys/trails.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace mvcrys;

namespace {

struct Common {
    std::string type = "A";
    int rank = 2;
    std::string lambda;
    std::string word;
    std::uint64_t seed = 7;
    int trials = 10;
    int prec = 0;
    bool serial = false;
};

void add_datum(CLI::App* sub, Common& c) {
    sub->add_option("--type", c.type, "A, B, C, D or G")->check(CLI::IsMember({"A", "B", "C", "D", "G"}));
    sub->add_option("--rank", c.rank)->check(CLI::Range(1, 8));
}

DatumPtr datum(const Common& c) { return RootDatum::build(parse_series(c.type), c.rank); }

Word parse_word(const std::string& s) {
    Word w;
    for (auto x : parse_int_list(s)) w.push_back(static_cast<int>(x));
    return w;
}

Word word_or_default(const DatumPtr& d, const Common& c) {
    if (!c.word.empty()) return parse_word(c.word);
    return d->reduced_word(d->longest_element());
}

RatVec lambda_of(const DatumPtr& d, const Common& c) {
    RatVec lam = parse_rat_list(c.lambda);
    if (static_cast<int>(lam.size()) != d->rank())
        throw CLI::ValidationError("--lambda", "expected " + std::to_string(d->rank()) + " coroot coordinates");
    if (!d->is_dominant(lam)) throw CLI::ValidationError("--lambda", "not dominant");
    return lam;
}

void require_type_a(const DatumPtr& d, const std::string& what) {
    if (d->series() != Series::A) throw CLI::ValidationError("--type", what + " is implemented for type A only");
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_point(std::ostream& os, int k, const PointReport& p) {
    os << "trial " << k << "  mu+ " << to_string(p.mu_plus) << "  mu- " << to_string(p.mu_minus) << "  orbit "
       << to_string(p.orbit);
    if (!p.error.empty()) os << "  error " << p.error;
    os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MV cycles, LS galleries and string cones at desk scale"};
    app.require_subcommand(1);
    Common c;
    std::string json_path, dot_path;

    auto* crystal = app.add_subcommand("crystal", "enumerate B(lambda) from LS galleries");
    add_datum(crystal, c);
    crystal->add_option("--lambda", c.lambda, "dominant coweight, coroot coordinates")->required();
    crystal->add_option("--word", c.word, "reduced word for w_lambda");
    crystal->add_option("--json", json_path, "write the graph as JSON");
    crystal->add_option("--dot", dot_path, "write the graph in dot format");

    auto* string = app.add_subcommand("string", "string parameters of every node");
    add_datum(string, c);
    string->add_option("--lambda", c.lambda)->required();
    string->add_option("--word", c.word, "reduced word for w0");

    auto* cone = app.add_subcommand("cone", "string cone inequalities from i-trails");
    add_datum(cone, c);
    cone->add_option("--word", c.word, "reduced word for w0");
    bool raw = false;
    cone->add_flag("--raw", raw, "one row per trail, before deduplication");

    auto* sample = app.add_subcommand("mv-sample", "sample Y~ cells or gallery cells and report mu+, mu-, orbit");
    add_datum(sample, c);
    std::string cvec;
    int node = -1;
    sample->add_option("--word", c.word);
    sample->add_option("--c", cvec, "string parameters; samples Y~_c");
    sample->add_option("--lambda", c.lambda, "with --node, samples the cell of that gallery");
    sample->add_option("--node", node);
    sample->add_option("--trials", c.trials)->check(CLI::Range(1, 100000));
    sample->add_option("--seed", c.seed);
    sample->add_option("--prec", c.prec)->check(CLI::Range(1, kMaxPrecision));
    sample->add_flag("--serial", c.serial);

    auto* trop = app.add_subcommand("trop", "tropical transition maps between y- and z-coordinates");
    add_datum(trop, c);
    std::string mvec, map_name = "f";
    trop->add_option("--word", c.word);
    trop->add_option("--m", mvec, "valuations of the inputs")->required();
    trop->add_option("--map", map_name, "f: y to z, g: z to y")->check(CLI::IsMember({"f", "g"}));
    trop->add_option("--trials", c.trials)->check(CLI::Range(1, 1000));
    trop->add_option("--seed", c.seed);
    trop->add_option("--prec", c.prec)->check(CLI::Range(1, kMaxPrecision));

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    std::string suite = "desk";
    std::vector<int> only;
    verify->add_option("--suite", suite)->check(CLI::IsMember({"desk"}));
    verify->add_option("--only", only, "criterion ids")->delimiter(',')->check(CLI::Range(1, kCriteria));
    verify->add_option("--seed", c.seed);
    verify->add_option("--json", json_path, "one JSON object per criterion");
    verify->add_flag("--serial", c.serial);

    CLI11_PARSE(app, argc, argv);
    if (c.prec > 0) setenv("MVCRYS_PRECISION", std::to_string(c.prec).c_str(), 1);
    const Exec exec = c.serial ? Exec::serial : Exec::parallel;

    try {
        if (crystal->parsed()) {
            auto d = datum(c);
            RatVec lam = lambda_of(d, c);
            auto t = c.word.empty() ? make_type(d, lam) : make_type(d, lam, parse_word(c.word));
            auto cr = enumerate_LS(t);
            std::cout << d->name() << " lambda " << to_string(lam) << "  word " << to_string(IntVec(t->word.begin(), t->word.end()))
                      << "  nodes " << cr.graph.size() << "\n";
            for (std::size_t v = 0; v < cr.graph.size(); ++v) {
                std::cout << v << "  weight " << weight_label(cr.graph.weight[v]) << "  folds";
                for (int x : cr.galleries[v].key()) std::cout << ' ' << x;
                std::cout << "  f";
                for (int to : cr.graph.f[v]) std::cout << ' ' << to;
                std::cout << "\n";
            }
            auto bad = validate_axioms(cr.graph);
            std::cout << "axiom violations " << bad.size() << "\n";
            write_file(json_path, crystal_to_json(cr.graph).dump(2) + "\n");
            write_file(dot_path, crystal_to_dot(cr.graph));
            return bad.empty() ? 0 : 1;
        }
        if (string->parsed()) {
            auto d = datum(c);
            auto cr = enumerate_LS(make_type(d, lambda_of(d, c)));
            Word w = word_or_default(d, c);
            std::cout << "node  weight  c  c~  e-string\n";
            for (std::size_t v = 0; v < cr.graph.size(); ++v) {
                auto sp = string_parameters(cr.graph, static_cast<int>(v), w);
                std::cout << v << "  " << weight_label(cr.graph.weight[v]) << "  " << to_string(sp.c) << "  "
                          << to_string(sp.c_tilde) << "  " << to_string(e_string(cr.graph, static_cast<int>(v), w))
                          << "\n";
            }
            return 0;
        }
        if (cone->parsed()) {
            auto d = datum(c);
            require_type_a(d, "cone");
            Word w = word_or_default(d, c);
            auto sc = string_cone_inequalities(d->rank() + 1, w, exec);
            for (const auto& row : raw ? sc.raw : sc.rows) {
                for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
                std::cout << "\n";
            }
            return 0;
        }
        if (sample->parsed()) {
            auto d = datum(c);
            require_type_a(d, "mv-sample");
            if (!cvec.empty()) {
                Word w = word_or_default(d, c);
                IntVec cv = parse_int_list(cvec);
                if (cv.size() != w.size()) throw CLI::ValidationError("--c", "length must match the word");
                auto rep = sample_ytilde(d, w, cv, c.trials, c.seed, exec);
                auto rows = string_cone_inequalities(d->rank() + 1, w, exec).rows;
                std::cout << "c " << to_string(rep.c) << "  c~ " << to_string(rep.c_tilde) << "  in cone "
                          << (in_string_cone(cv, rows) ? "yes" : "no") << "  expected mu+ " << to_string(rep.expected)
                          << "\n";
                for (std::size_t k = 0; k < rep.trials.size(); ++k) print_point(std::cout, static_cast<int>(k), rep.trials[k]);
                return 0;
            }
            if (node < 0 || c.lambda.empty()) throw CLI::ValidationError("mv-sample", "give --c, or --lambda with --node");
            auto cr = enumerate_LS(make_type(d, lambda_of(d, c)));
            if (node >= static_cast<int>(cr.galleries.size())) throw CLI::ValidationError("--node", "out of range");
            auto rep = sample_cell(cr.galleries[node], c.trials, c.seed, exec);
            std::cout << "gallery " << node << "  weight " << to_string(rep.weight) << "\n";
            for (std::size_t k = 0; k < rep.trials.size(); ++k) print_point(std::cout, static_cast<int>(k), rep.trials[k]);
            return 0;
        }
        if (trop->parsed()) {
            auto d = datum(c);
            require_type_a(d, "trop");
            Word w = word_or_default(d, c);
            IntVec m = parse_int_list(mvec);
            if (m.size() != w.size()) throw CLI::ValidationError("--m", "length must match the word");
            const int n = d->rank() + 1;
            SeriesMap fn = map_name == "f" ? SeriesMap([&](const std::vector<LaurentSeries>& p) { return f_map(n, w, p); })
                                           : SeriesMap([&](const std::vector<LaurentSeries>& q) { return g_map(n, w, q); });
            auto res = trop_eval(fn, m, c.trials, c.seed);
            if (!res.ok) {
                std::cout << "no agreement after " << res.attempts << " attempts: " << res.failure << "\n";
                return 1;
            }
            std::cout << map_name << "^trop " << to_string(m) << " = " << to_string(res.value) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            AcceptanceOptions opt;
            opt.seed = c.seed;
            opt.exec = exec;
            auto results = run_acceptance(opt, only);
            std::string lines;
            int failed = 0;
            for (const auto& r : results) {
                std::cout << human_line(r) << std::endl;
                lines += to_json(r).dump() + "\n";
                failed += !r.pass;
            }
            std::cout << results.size() - failed << "/" << results.size() << " criteria pass\n";
            write_file(json_path, lines);
            return failed == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
