// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "qalg/qalg.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    qalg_string_free(s);
    return out;
}

struct Handle {
    qalg_algebra* a = nullptr;
    ~Handle() { qalg_algebra_destroy(a); }
};

}  // namespace

TEST_CASE("version string")
{
    CHECK(std::string(qalg_version()).size() > 0);
}

TEST_CASE("families and counts")
{
    Handle c;
    REQUIRE(qalg_algebra_family("C", 5, nullptr, &c.a) == QALG_OK);
    CHECK(qalg_num_generators(c.a) == 15);
    CHECK(qalg_num_relations(c.a) == 19);
    Handle b;
    REQUIRE(qalg_algebra_family("B", 0, "p:32003", &b.a) == QALG_OK);
    CHECK(qalg_num_relations(b.a) == 14);
    Handle b11;
    REQUIRE(qalg_algebra_family("B11", 0, nullptr, &b11.a) == QALG_OK);
    CHECK(qalg_num_relations(b11.a) == 11);

    Handle bad;
    CHECK(qalg_algebra_family("C", 4, nullptr, &bad.a) == QALG_USAGE);
    CHECK(bad.a == nullptr);
    CHECK(std::string(qalg_last_error()).find("m >= 5") != std::string::npos);
    CHECK(qalg_algebra_family("D", 5, nullptr, &bad.a) == QALG_USAGE);
    CHECK(qalg_algebra_family("C", 5, "p:100", &bad.a) == QALG_USAGE);
    CHECK(qalg_algebra_family(nullptr, 5, nullptr, &bad.a) == QALG_USAGE);
}

TEST_CASE("parse errors carry a position")
{
    Handle h;
    CHECK(qalg_algebra_parse("gens x y;\nrel x*y - y;", nullptr, &h.a) == QALG_PARSE);
    CHECK(h.a == nullptr);
    std::string msg = qalg_last_error();
    CHECK(msg.find("2") != std::string::npos);
    REQUIRE(qalg_algebra_parse("gens x y; rel x*y - y*x;", nullptr, &h.a) == QALG_OK);
    CHECK(qalg_num_relations(h.a) == 1);
    char* text = nullptr;
    REQUIRE(qalg_presentation_text(h.a, &text) == QALG_OK);
    Handle again;
    CHECK(qalg_algebra_parse(take(text).c_str(), nullptr, &again.a) == QALG_OK);
}

TEST_CASE("Hilbert dims and Betti numbers of B")
{
    Handle b;
    REQUIRE(qalg_algebra_family("B", 0, nullptr, &b.a) == QALG_OK);
    std::vector<long long> dims(6);
    REQUIRE(qalg_hilbert_dims(b.a, 5, dims.data()) == QALG_OK);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 13);
    CHECK(dims[2] == 155);
    CHECK(dims[3] == 1840);
    const int I = 5, J = 6;
    std::vector<long long> t((I + 1) * (J + 1));
    REQUIRE(qalg_betti(b.a, I, J, t.data()) == QALG_OK);
    auto at = [&](int i, int j) { return t[i * (J + 1) + j]; };
    CHECK(at(0, 0) == 1);
    CHECK(at(1, 1) == 13);
    CHECK(at(2, 2) == 14);
    CHECK(at(3, 3) == 7);
    CHECK(at(4, 5) == 1);
    CHECK(at(4, 4) == 0);
    CHECK(qalg_betti(b.a, -1, 3, t.data()) == QALG_USAGE);
}

TEST_CASE("reports in every format")
{
    Handle c;
    REQUIRE(qalg_algebra_family("C", 5, nullptr, &c.a) == QALG_OK);
    char* out = nullptr;
    REQUIRE(qalg_resolve(c.a, 6, 7, QALG_JSON, &out) == QALG_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j.contains("meta"));
    REQUIRE(qalg_resolve(c.a, 6, 7, QALG_TEXT, &out) == QALG_OK);
    CHECK_FALSE(take(out).empty());
    REQUIRE(qalg_hilbert(c.a, 4, QALG_CSV, &out) == QALG_OK);
    CHECK(take(out).find(',') != std::string::npos);
    REQUIRE(qalg_gb(c.a, 4, QALG_TEXT, &out) == QALG_OK);
    CHECK(take(out).find("rel") != std::string::npos);
    CHECK(qalg_resolve(c.a, 6, 7, QALG_JSON, nullptr) == QALG_USAGE);
}

TEST_CASE("verify a built-in complex and a broken one")
{
    Handle c;
    REQUIRE(qalg_algebra_family("C", 5, nullptr, &c.a) == QALG_OK);
    char* maps = nullptr;
    REQUIRE(qalg_make_complex("C", 5, &maps) == QALG_OK);
    std::string text = take(maps);
    char* out = nullptr;
    CHECK(qalg_verify_complex(c.a, text.c_str(), 8, 1, QALG_JSON, &out) == QALG_OK);
    take(out);
    CHECK(qalg_verify_complex(c.a, "this is not a complex", 8, 1, QALG_JSON, &out) == QALG_PARSE);
    CHECK(qalg_make_complex("C", 3, &maps) == QALG_USAGE);
}

TEST_CASE("ext generators")
{
    Handle c;
    REQUIRE(qalg_algebra_family("C", 5, nullptr, &c.a) == QALG_OK);
    char* out = nullptr;
    REQUIRE(qalg_ext_gens(c.a, 6, 7, QALG_JSON, &out) == QALG_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j.contains("new_generators"));
    CHECK(j.contains("decomposable"));
}

TEST_CASE("statuses of the full check")
{
    int ms[] = {5, 6};
    char* out = nullptr;
    CHECK(qalg_paper_check(ms, 2, 0, nullptr, QALG_JSON, &out) == QALG_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j.value("pass", false));
    // the eleven-relation B fails its table claim
    CHECK(qalg_paper_check(ms, 1, 1, nullptr, QALG_JSON, &out) == QALG_CLAIM_FAILED);
    take(out);
    int low[] = {4};
    CHECK(qalg_paper_check(low, 1, 0, nullptr, QALG_JSON, &out) == QALG_USAGE);
}
