// Exercises the shared-library surface exactly as an external client would:
// through pytuple/pytuple.h only, no engine headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <pytuple/pytuple.h>

#include <memory>
#include <string>
#include <vector>

namespace {

struct ResultDeleter {
    void operator()(pytuple_result* r) const { pytuple_result_free(r); }
};
using ResultPtr = std::unique_ptr<pytuple_result, ResultDeleter>;

std::string cell(const pytuple_result* r, size_t row, size_t col) {
    const char* v = pytuple_result_cell(r, row, col);
    return v ? v : "<null>";
}

std::string meta(const pytuple_result* r, const char* key) {
    const char* v = pytuple_result_meta(r, key);
    return v ? v : "<null>";
}

} // namespace

TEST_CASE("triples over the C API") {
    pytuple_result* raw = nullptr;
    REQUIRE(pytuple_triples("792", PYTUPLE_CLASS_PRIMITIVE, 0, &raw) == PYTUPLE_OK);
    ResultPtr r(raw);
    REQUIRE(pytuple_result_row_count(r.get()) == 4);
    CHECK(pytuple_result_column_count(r.get()) == 4);
    CHECK(std::string(pytuple_result_column_name(r.get(), 0)) == "delta");
    CHECK(cell(r.get(), 0, 0) == "2");
    CHECK(cell(r.get(), 0, 1) == "156815");
    CHECK(cell(r.get(), 0, 2) == "156817");
    CHECK(cell(r.get(), 0, 3) == "true");
    CHECK(cell(r.get(), 3, 0) == "242");
    CHECK(meta(r.get(), "input") == "792");
    // out-of-range accessors answer NULL, not garbage
    CHECK(pytuple_result_cell(r.get(), 4, 0) == nullptr);
    CHECK(pytuple_result_cell(r.get(), 0, 9) == nullptr);
    CHECK(pytuple_result_column_name(r.get(), 9) == nullptr);
    CHECK(pytuple_result_meta(r.get(), "missing") == nullptr);
}

TEST_CASE("forecast over the C API") {
    pytuple_result* raw = nullptr;
    REQUIRE(pytuple_forecast("60", 0, &raw) == PYTUPLE_OK);
    ResultPtr r(raw);
    CHECK(meta(r.get(), "total") == "13");
    CHECK(meta(r.get(), "primitive") == "4");
    CHECK(meta(r.get(), "non_primitive") == "9");
    REQUIRE(pytuple_result_row_count(r.get()) == 4);
    CHECK(cell(r.get(), 0, 0) == "2");
    CHECK(cell(r.get(), 3, 0) == "50");
}

TEST_CASE("completions over the C API") {
    const char* legs[] = {"3", "5"};
    pytuple_result* raw = nullptr;
    REQUIRE(pytuple_completions(legs, 2, PYTUPLE_CLASS_ALL, 0, &raw) == PYTUPLE_OK);
    ResultPtr r(raw);
    CHECK(pytuple_result_row_count(r.get()) == 0);
    CHECK(meta(r.get(), "k") == "34");
    CHECK(meta(r.get(), "feasible") == "false");
    CHECK(meta(r.get(), "reason") == "k_congruent_2_mod_4");

    const char* legs2[] = {"210", "135"};
    pytuple_result* raw2 = nullptr;
    REQUIRE(pytuple_completions(legs2, 2, PYTUPLE_CLASS_PRIMITIVE, 0, &raw2) == PYTUPLE_OK);
    ResultPtr r2(raw2);
    REQUIRE(pytuple_result_row_count(r2.get()) == 4);
    CHECK(cell(r2.get(), 3, 0) == "225");
    CHECK(cell(r2.get(), 3, 1) == "26");
    CHECK(cell(r2.get(), 3, 2) == "251");
    CHECK(meta(r2.get(), "reason") == "none");
}

TEST_CASE("chains over the C API") {
    pytuple_chain_options options{};
    options.depth = 3;
    options.strategy = PYTUPLE_CHAIN_ALL_BRANCHES;
    pytuple_result* raw = nullptr;
    REQUIRE(pytuple_chains("15", &options, &raw) == PYTUPLE_OK);
    ResultPtr r(raw);
    CHECK(meta(r.get(), "truncated") == "false");
    bool found = false;
    for (size_t row = 0; row < pytuple_result_row_count(r.get()); ++row)
        found |= cell(r.get(), row, 0) == "15 36 760 289560" && cell(r.get(), row, 1) == "289561";
    CHECK(found);

    options.strategy = PYTUPLE_CHAIN_MIN_DELTA;
    options.depth = 2;
    pytuple_result* raw2 = nullptr;
    REQUIRE(pytuple_chains("3", &options, &raw2) == PYTUPLE_OK);
    ResultPtr r2(raw2);
    REQUIRE(pytuple_result_row_count(r2.get()) == 1);
    CHECK(cell(r2.get(), 0, 0) == "3 4 12");
    CHECK(cell(r2.get(), 0, 1) == "13");
    CHECK(cell(r2.get(), 0, 2) == "1 1");
    CHECK(cell(r2.get(), 0, 3) == "true");
    CHECK(cell(r2.get(), 0, 4) == "false");
}

TEST_CASE("verify over the C API") {
    pytuple_verify_options options{};
    options.max_leg = 60;
    pytuple_result* raw = nullptr;
    REQUIRE(pytuple_verify("triples-oracle", &options, &raw) == PYTUPLE_OK);
    ResultPtr r(raw);
    CHECK(pytuple_result_row_count(r.get()) == 0);
    CHECK(meta(r.get(), "checked") == "60");
    CHECK(meta(r.get(), "discrepancies") == "0");
}

TEST_CASE("error statuses and messages") {
    pytuple_result* raw = nullptr;

    CHECK(pytuple_triples("abc", PYTUPLE_CLASS_ALL, 0, &raw) == PYTUPLE_ERROR_DOMAIN);
    CHECK(raw == nullptr);
    CHECK(std::string(pytuple_last_error()).find("abc") != std::string::npos);

    CHECK(pytuple_triples(nullptr, PYTUPLE_CLASS_ALL, 0, &raw) == PYTUPLE_ERROR_ARGUMENT);

    // 1000003 * 1000033: two six-digit primes cannot be split in 3 steps
    CHECK(pytuple_triples("1000036000099", PYTUPLE_CLASS_ALL, 3, &raw) ==
          PYTUPLE_ERROR_BUDGET_EXCEEDED);

    CHECK(pytuple_verify("everything", nullptr, &raw) == PYTUPLE_ERROR_DOMAIN);

    const char* zero_leg[] = {"0"};
    CHECK(pytuple_completions(zero_leg, 1, PYTUPLE_CLASS_ALL, 0, &raw) == PYTUPLE_ERROR_DOMAIN);

    pytuple_chain_options options{};
    options.depth = 1;
    options.max_magnitude = "10";
    CHECK(pytuple_chains("15", &options, &raw) == PYTUPLE_ERROR_MAGNITUDE_EXCEEDED);

    CHECK(std::string(pytuple_status_name(PYTUPLE_ERROR_BUDGET_EXCEEDED)) == "budget-exceeded");
    CHECK(pytuple_version() != nullptr);
}
