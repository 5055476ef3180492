#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ferrers/partition.hpp"

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = rookeq::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli eq")
{
    auto r = cli({"eq", "2,2", "3,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "equivalent (strict form 3,1)\n");

    CHECK(cli({"eq", "4", "3,1"}).code == 1);
    CHECK(cli({"eq", "4", "3,1"}).out == "not equivalent\n");
    CHECK(cli({"--oracle", "eq", "2,2", "3,1"}).code == 0);
}

TEST_CASE("cli normalize and rook")
{
    CHECK(cli({"normalize", "4,3,3,2,2,2"}).out == "7,5,3,1\n");
    CHECK(cli({"rook", "3,1"}).out == "1,4,2\n");
    CHECK(cli({"rook", "--oracle", "3,1"}).out == "1,4,2\n");
}

TEST_CASE("cli transform and path")
{
    auto r = cli({"transform", "6,5,5,5,4,2", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "6,6,6,5,2,2\n");

    CHECK(cli({"transform", "1,1,1", "2", "1"}).code == 2);

    auto p = cli({"path", "2,2", "3,1"});
    CHECK(p.code == 0);
    CHECK(p.out == "(2,1) 2,2 -> 2,1,1\n(1,1) 2,1,1 -> 3,1\n");
    CHECK(cli({"path", "4", "3,1"}).code == 1);
}

TEST_CASE("cli wk and salient")
{
    CHECK(cli({"wk", "6,5,5,5,4,2"}).out == "8,15,20,24,26,27\n");
    CHECK(cli({"wk", "6,5,5,5,4,2", "2"}).out == "15\n");
    CHECK(cli({"--oracle", "wk", "6,5,5,5,4,2", "3"}).out == "20\n");
    CHECK(cli({"wk", "1", "2"}).out == "undefined\n");

    auto s = cli({"salient", "4,3,3,2,2,2"});
    CHECK(s.out == "salient rows: 1,3,5,6\nS: 5,6,7,8\nstaircase rank: 4\n");
}

TEST_CASE("cli contains and counting")
{
    auto r = cli({"contains", "6,5,5,5,4,4,2,2", "4,3,3,2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("contains"));
    CHECK(cli({"contains", "2,2", "2,1"}).code == 1);
    CHECK(cli({"--oracle", "contains", "2,2", "2,1"}).code == 1);

    CHECK(cli({"count", "4", "2,1"}).out == "2\n");
    CHECK(cli({"count-top", "4", "2,1", "1"}).out == "1\n");
    CHECK(cli({"count", "99", "2,1"}).code == 2);  // beyond --max
}

TEST_CASE("cli extend and distinguish")
{
    CHECK(cli({"extend", "10,7,1", "--cols", "1,1,1", "--rows", "3,1"}).out == "11,8,3,2,1\n");
    auto d = cli({"distinguish", "3", "2,1"});
    CHECK(d.code == 0);
    CHECK(d.out == "weight 5, larger side 2,1\n");
    CHECK(cli({"distinguish", "2,2", "3,1"}).code == 2);
}

TEST_CASE("cli diagram")
{
    CHECK(cli({"diagram", "2,1"}).out == "##\n#\n");
}

TEST_CASE("cli invalid input")
{
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"eq", "2,3", "1"}).code == 2);
    CHECK(cli({"eq", "1"}).code == 2);
}

TEST_CASE("cli json output mirrors plain output")
{
    auto r = cli({"--json", "eq", "2,2", "3,1"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "eq");
    CHECK(doc["inputs"]["A"] == "2,2");
    CHECK(doc["inputs"]["B"] == "3,1");
    CHECK(doc["result"]["equivalent"] == true);
    CHECK(doc["result"]["strict_form"] == "3,1");
    CHECK(doc["meta"].contains("version"));
    CHECK(doc["meta"]["bounds"].contains("max"));

    json t = json::parse(cli({"--json", "transform", "6,5,5,5,4,2", "2", "3"}).out);
    CHECK(t["result"]["partition"] == "6,6,6,5,2,2");

    json w = json::parse(cli({"--json", "wk", "1", "2"}).out);
    CHECK(w["result"]["w"].is_null());

    // Printed partitions reparse to equal values.
    std::string text = t["result"]["partition"].get<std::string>();
    CHECK(ferrers::Partition::parse(text) == ferrers::Partition::parse("6,6,6,5,2,2"));
}

TEST_CASE("cli classes export")
{
    std::string file = "classes4_export_test.json";
    auto r = cli({"--json", "classes", "4", "--export", file});
    CHECK(r.code == 0);

    std::ifstream in(file);
    REQUIRE(in.good());
    json table = json::parse(in);
    REQUIRE(table.size() == 2);
    CHECK(table[0]["n"] == 4);
    CHECK(table[0]["strict_rep"] == "4");
    CHECK(table[1]["strict_rep"] == "3,1");
    CHECK(table[1]["members"] == json::array({"3,1", "2,2", "2,1,1"}));
    CHECK(table[1]["m_signature_entries"] == json::array({3, 4}));
    std::remove(file.c_str());
}
