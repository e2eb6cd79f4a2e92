// Exercises the shared-library C interface end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "bmac.h"

namespace {

struct Session {
    bmac_session* s = bmac_session_new();
    ~Session() { bmac_session_free(s); }
};

std::string take(char* p) {
    std::string out = p ? p : "";
    bmac_free_string(p);
    return out;
}

}  // namespace

TEST_CASE("expand through the C API") {
    Session ses;
    char* out = nullptr;
    CHECK(bmac_expand(ses.s, "|2", "P", "SM", "json", &out) == BMAC_OK);
    std::string doc = take(out);
    CHECK(doc.find("\"basis\": \"SM\"") != std::string::npos);
    CHECK(doc.find("1,1") != std::string::npos);

    // the non-stable superpartition expansion
    CHECK(bmac_expand(ses.s, "0;2", "P", "SM", "json", &out) == BMAC_OK);
    std::string super_doc = take(out);
    bool has_mixing = super_doc.find("(-1+t)/(-1+q*t)") != std::string::npos;
    CHECK(has_mixing);
    CHECK(super_doc != doc);

    // empty label
    CHECK(bmac_expand(ses.s, "|", "P", "SM", "json", &out) == BMAC_OK);
    std::string trivial = take(out);
    CHECK(trivial.find("\"coeff\": \"1\"") != std::string::npos);
}

TEST_CASE("errors are reported with codes") {
    Session ses;
    char* out = nullptr;
    CHECK(bmac_expand(ses.s, "not a label", "P", "SM", "json", &out) == BMAC_EPARSE);
    CHECK(std::string(bmac_last_error(ses.s)).size() > 0);
    CHECK(bmac_expand(ses.s, "|2", "Z", "SM", "json", &out) == BMAC_EPARSE);
    CHECK(bmac_kostka(ses.s, 2, -1, "super", "json", &out) == BMAC_EPARSE);
    CHECK(bmac_expand(ses.s, "1,1|", "P", "SM", "json", &out) == BMAC_OK);
    take(out);
    CHECK(std::string(bmac_last_error(ses.s)).empty());
}

TEST_CASE("kostka table") {
    Session ses;
    char* out = nullptr;
    CHECK(bmac_kostka(ses.s, 1, -1, "double", "json", &out) == BMAC_OK);
    std::string doc = take(out);
    CHECK(doc.find("\"entries\"") != std::string::npos);

    CHECK(bmac_kostka(ses.s, 2, 1, "super", "csv", &out) == BMAC_OK);
    std::string csv = take(out);
    CHECK(csv.find("0;2") != std::string::npos);
}

TEST_CASE("nabla document") {
    Session ses;
    char* out = nullptr;
    CHECK(bmac_nabla(ses.s, 1, "B", "json", &out) == BMAC_OK);
    std::string doc = take(out);
    CHECK(doc.find("\"catalan\": \"q+t\"") != std::string::npos);
    CHECK(doc.find("\"dimension_at_q1_t1\": \"3\"") != std::string::npos);
    CHECK(doc.find("\"sign_coefficient\": \"1\"") != std::string::npos);
}

TEST_CASE("evaluate document") {
    Session ses;
    char* out = nullptr;
    CHECK(bmac_evaluate(ses.s, "|1", 5, 2, &out) == BMAC_OK);
    std::string doc = take(out);
    CHECK(doc.find("\"agree\": true") != std::string::npos);
}

TEST_CASE("verify returns check status") {
    Session ses;
    char* out = nullptr;
    CHECK(bmac_verify(ses.s, "orderings", 2, -1, -1, 1, &out) == BMAC_OK);
    std::string doc = take(out);
    CHECK(doc.find("\"ok\": true") != std::string::npos);
    CHECK(bmac_verify(ses.s, "no-such-suite", 2, -1, -1, 1, &out) == BMAC_EPARSE);
}

TEST_CASE("sweep document") {
    Session ses;
    char* out = nullptr;
    int ms[] = {1, 2, 3};
    CHECK(bmac_sweep(ses.s, "|2", ms, 3, &out) == BMAC_OK);
    std::string doc = take(out);
    CHECK(doc.find("\"stable_sector_equal\": true") != std::string::npos);
}

TEST_CASE("deterministic outputs") {
    Session ses;
    char* a = nullptr;
    char* b = nullptr;
    CHECK(bmac_kostka(ses.s, 2, -1, "double", "json", &a) == BMAC_OK);
    CHECK(bmac_kostka(ses.s, 2, -1, "double", "json", &b) == BMAC_OK);
    CHECK(take(a) == take(b));
}
