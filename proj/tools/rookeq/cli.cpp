#include "cli.hpp"

#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ferrers/oracles.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/rook.hpp"
#include "ferrers/salient.hpp"
#include "ferrers/transforms.hpp"
#include "ferrers/wilf.hpp"

namespace rookeq {

namespace {

using json = nlohmann::json;
using namespace ferrers;

constexpr const char* kVersion = "0.1.0";

std::string join(const std::vector<long long>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

json class_table(int n)
{
    json table = json::array();
    for (const RookClass& cls : rook_classes(n)) {
        json members = json::array();
        for (const Partition& p : cls.members) members.push_back(p.str());
        table.push_back({{"n", n},
                         {"strict_rep", cls.strict_rep.str()},
                         {"members", members},
                         {"m_signature_entries", m_signature(cls.strict_rep).entries}});
    }
    return table;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact rook-equivalence toolkit for Ferrers boards", "rookeq"};
    app.require_subcommand(1);

    bool json_out = false;
    bool oracle = false;
    int max_bound = 30;
    app.add_flag("--json", json_out, "structured JSON output");
    app.add_flag("--oracle", oracle, "force brute-force paths");
    app.add_option("--max", max_bound, "bound for class/oracle commands");

    std::string a_text, b_text, cols_text, rows_text, export_file;
    int n = 0, row = 0, col = 0, k = -1;
    int status = kOk;

    auto emit = [&](const std::string& cmd, json inputs, json result, const std::string& plain) {
        if (json_out) {
            json doc{{"command", cmd},
                     {"inputs", std::move(inputs)},
                     {"result", std::move(result)},
                     {"meta", {{"version", kVersion}, {"bounds", {{"max", max_bound}}}}}};
            out << doc.dump(2) << "\n";
        } else if (!plain.empty()) {
            out << plain << "\n";
        }
    };

    auto* eq = app.add_subcommand("eq", "rook equivalence of two boards");
    eq->add_option("A", a_text)->required();
    eq->add_option("B", b_text)->required();
    eq->callback([&] {
        Partition a = Partition::parse(a_text), b = Partition::parse(b_text);
        bool equiv = oracle ? rook_numbers_by_placement(a) == rook_numbers_by_placement(b)
                            : rook_equivalent(a, b);
        json result{{"equivalent", equiv}};
        std::string plain = "not equivalent";
        if (equiv) {
            result["strict_form"] = strict_normal_form(a).str();
            plain = "equivalent (strict form " + strict_normal_form(a).str() + ")";
        }
        emit("eq", {{"A", a.str()}, {"B", b.str()}}, result, plain);
        status = equiv ? kOk : kPropertyFalse;
    });

    auto* normalize = app.add_subcommand("normalize", "strict normal form");
    normalize->add_option("A", a_text)->required();
    normalize->callback([&] {
        Partition a = Partition::parse(a_text);
        std::string s = strict_normal_form(a).str();
        emit("normalize", {{"A", a.str()}}, {{"strict_form", s}}, s);
    });

    auto* rook = app.add_subcommand("rook", "rook-number vector");
    rook->add_option("A", a_text)->required();
    rook->callback([&] {
        Partition a = Partition::parse(a_text);
        RookVector v = oracle ? rook_numbers_by_placement(a) : rook_numbers(a);
        emit("rook", {{"A", a.str()}}, {{"counts", v.counts}}, join(v.counts));
    });

    auto* classes = app.add_subcommand("classes", "rook-equivalence classes of partitions of N");
    classes->add_option("N", n)->required();
    classes->add_option("--export", export_file, "write the class table to FILE as JSON");
    classes->callback([&] {
        if (n < 0 || n > max_bound)
            throw std::invalid_argument("classes: N out of bounds (see --max)");
        json table = class_table(n);
        if (!export_file.empty()) {
            std::ofstream f(export_file);
            if (!f) throw std::invalid_argument("classes: cannot open export file");
            f << table.dump(2) << "\n";
        }
        std::string plain;
        for (const auto& rec : table) {
            plain += rec["strict_rep"].get<std::string>() + " :";
            for (const auto& m : rec["members"]) plain += " " + m.get<std::string>();
            plain += "\n";
        }
        if (!plain.empty()) plain.pop_back();
        emit("classes", {{"N", n}}, {{"classes", table}}, plain);
    });

    auto* salient = app.add_subcommand("salient", "salient rows, S multiset, staircase rank");
    salient->add_option("A", a_text)->required();
    salient->callback([&] {
        Partition a = Partition::parse(a_text);
        auto salient_set = salient_rows(a);
        std::vector<int> rows(salient_set.begin(), salient_set.end());
        std::vector<int> sig = s_signature(a);
        int rank = staircase_rank(a);
        emit("salient", {{"A", a.str()}},
             {{"salient_rows", rows}, {"s_signature", sig}, {"staircase_rank", rank}},
             "salient rows: " + join(rows) + "\nS: " + join(sig) +
                 "\nstaircase rank: " + std::to_string(rank));
    });

    auto* wk = app.add_subcommand("wk", "maximum nested-L weights");
    wk->add_option("A", a_text)->required();
    wk->add_option("K", k);
    wk->callback([&] {
        Partition a = Partition::parse(a_text);
        auto weight_at = [&](int kk) {
            return oracle ? max_nested_weight_by_search(a, kk) : max_nested_weight(a, kk);
        };
        json inputs{{"A", a.str()}};
        if (k >= 0) {
            inputs["K"] = k;
            auto w = weight_at(k);
            emit("wk", inputs, {{"w", w ? json(*w) : json(nullptr)}},
                 w ? std::to_string(*w) : "undefined");
        } else {
            std::vector<int> w;
            for (int kk = 1; kk <= staircase_rank(a); ++kk) w.push_back(*weight_at(kk));
            emit("wk", inputs, {{"w_vector", w}}, join(w));
        }
    });

    auto* transform = app.add_subcommand("transform", "(i,j)-transform");
    transform->add_option("A", a_text)->required();
    transform->add_option("I", row)->required();
    transform->add_option("J", col)->required();
    transform->callback([&] {
        Partition a = Partition::parse(a_text);
        Partition t = ij_transform(a, row, col);
        emit("transform", {{"A", a.str()}, {"I", row}, {"J", col}}, {{"partition", t.str()}},
             t.str());
    });

    auto* path = app.add_subcommand("path", "shortest (i,1)-transform path");
    path->add_option("A", a_text)->required();
    path->add_option("B", b_text)->required();
    path->callback([&] {
        Partition a = Partition::parse(a_text), b = Partition::parse(b_text);
        auto steps = i1_path(a, b);
        json inputs{{"A", a.str()}, {"B", b.str()}};
        if (!steps) {
            emit("path", inputs, {{"found", false}}, "not rook equivalent");
            status = kPropertyFalse;
            return;
        }
        json list = json::array();
        std::string plain;
        Partition cur = a;
        for (TransformStep s : *steps) {
            Partition next = ij_transform(cur, s.i, s.j);
            list.push_back({{"i", s.i}, {"j", s.j}, {"before", cur.str()}, {"after", next.str()}});
            plain += "(" + std::to_string(s.i) + ",1) " + cur.str() + " -> " + next.str() + "\n";
            cur = next;
        }
        if (!plain.empty()) plain.pop_back();
        emit("path", inputs, {{"found", true}, {"steps", list}}, plain);
    });

    auto* cont = app.add_subcommand("contains", "pattern containment");
    cont->add_option("A", a_text)->required();
    cont->add_option("B", b_text)->required();
    cont->callback([&] {
        Partition host = Partition::parse(a_text), pattern = Partition::parse(b_text);
        bool held = oracle ? contains_by_deletion(host, pattern) : contains(host, pattern);
        json result{{"contains", held}};
        std::string plain = held ? "contains" : "does not contain";
        if (held) {
            if (auto w = containment_witness(host, pattern)) {
                result["kept_rows"] = w->kept_rows;
                result["kept_columns"] = w->kept_columns;
                plain += " (rows " + join(w->kept_rows) + "; columns " + join(w->kept_columns) + ")";
            }
        }
        emit("contains", {{"A", host.str()}, {"B", pattern.str()}}, result, plain);
        status = held ? kOk : kPropertyFalse;
    });

    auto* count = app.add_subcommand("count", "|P_N(A)|: partitions of N containing A");
    count->add_option("N", n)->required();
    count->add_option("A", a_text)->required();
    count->callback([&] {
        Partition a = Partition::parse(a_text);
        if (n < 0 || n > max_bound)
            throw std::invalid_argument("count: N out of bounds (see --max)");
        long long c = count_containing(n, a);
        emit("count", {{"N", n}, {"A", a.str()}}, {{"count", c}}, std::to_string(c));
    });

    auto* count_top = app.add_subcommand("count-top", "|P_N(A,K)|: first part A_1 + K");
    count_top->add_option("N", n)->required();
    count_top->add_option("A", a_text)->required();
    count_top->add_option("K", k)->required();
    count_top->callback([&] {
        Partition a = Partition::parse(a_text);
        if (n < 0 || n > max_bound)
            throw std::invalid_argument("count-top: N out of bounds (see --max)");
        if (k < 0) throw std::invalid_argument("count-top: K must be nonnegative");
        long long c = count_containing_top(n, a, k);
        emit("count-top", {{"N", n}, {"A", a.str()}, {"K", k}}, {{"count", c}},
             std::to_string(c));
    });

    auto* ext = app.add_subcommand("extend", "extend A by column partition C and row partition R");
    ext->add_option("A", a_text)->required();
    ext->add_option("--cols", cols_text);
    ext->add_option("--rows", rows_text);
    ext->callback([&] {
        Partition a = Partition::parse(a_text);
        ExtensionPair pair{Partition::parse(cols_text), Partition::parse(rows_text)};
        Partition e = extend(a, pair);
        emit("extend",
             {{"A", a.str()}, {"cols", pair.alpha.str()}, {"rows", pair.beta.str()}},
             {{"partition", e.str()}}, e.str());
    });

    auto* dist = app.add_subcommand("distinguish", "distinguishing weight of two strict boards");
    dist->add_option("A", a_text)->required();
    dist->add_option("B", b_text)->required();
    dist->callback([&] {
        Partition a = Partition::parse(a_text), b = Partition::parse(b_text);
        DistinguishingWeight d = distinguishing_weight(a, b);
        std::string larger = (d.larger_side == 0 ? a : b).str();
        emit("distinguish", {{"A", a.str()}, {"B", b.str()}},
             {{"r", d.r}, {"m", d.m}, {"weight", d.weight}, {"larger_side", larger}},
             "weight " + std::to_string(d.weight) + ", larger side " + larger);
    });

    auto* diagram = app.add_subcommand("diagram", "monospace Ferrers diagram");
    diagram->add_option("A", a_text)->required();
    diagram->callback([&] {
        Partition a = Partition::parse(a_text);
        std::string d = render_diagram(a);
        if (!d.empty() && d.back() == '\n') d.pop_back();
        emit("diagram", {{"A", a.str()}}, {{"diagram", render_diagram(a)}}, d);
    });

    for (auto* sub : app.get_subcommands(std::function<bool(CLI::App*)>{}))
        sub->fallthrough();

    try {
        // CLI11's vector overload consumes arguments from the back.
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return status;
}

}  // namespace rookeq
