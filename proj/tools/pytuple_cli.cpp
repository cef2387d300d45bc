// pytuple command line tool. Everything below talks to the shared library
// through the C API in pytuple/pytuple.h; no engine internals are linked.

#include <pytuple/pytuple.h>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct ResultDeleter {
    void operator()(pytuple_result* r) const { pytuple_result_free(r); }
};
using ResultPtr = std::unique_ptr<pytuple_result, ResultDeleter>;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerifyFailed = 4;

int exit_code_for(pytuple_status status) {
    switch (status) {
    case PYTUPLE_OK:
        return kExitOk;
    case PYTUPLE_ERROR_BUDGET_EXCEEDED:
    case PYTUPLE_ERROR_ORACLE_CAP_EXCEEDED:
        return kExitBudget;
    default:
        return kExitUsage;
    }
}

[[nodiscard]] int fail(pytuple_status status) {
    std::cerr << "pytuple: " << pytuple_status_name(status) << ": " << pytuple_last_error() << "\n";
    return exit_code_for(status);
}

std::vector<std::string> split_space(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t end = s.find(' ', start);
        if (end == std::string::npos)
            end = s.size();
        if (end > start)
            out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string meta(const pytuple_result* r, const char* key) {
    const char* v = pytuple_result_meta(r, key);
    return v ? v : "";
}

// ---------------------------------------------------------------- rendering

void print_csv(const pytuple_result* r, const std::vector<std::string>& comments = {}) {
    const std::size_t cols = pytuple_result_column_count(r);
    for (std::size_t c = 0; c < cols; ++c)
        std::cout << (c ? "," : "") << pytuple_result_column_name(r, c);
    std::cout << "\n";
    for (const std::string& comment : comments)
        std::cout << "# " << comment << "\n";
    for (std::size_t row = 0; row < pytuple_result_row_count(r); ++row) {
        for (std::size_t c = 0; c < cols; ++c)
            std::cout << (c ? "," : "") << pytuple_result_cell(r, row, c);
        std::cout << "\n";
    }
}

void print_table(const pytuple_result* r, const std::vector<std::string>& header_lines,
                 const std::string& footer) {
    for (const std::string& line : header_lines)
        std::cout << line << "\n";
    const std::size_t cols = pytuple_result_column_count(r);
    const std::size_t rows = pytuple_result_row_count(r);
    if (rows > 0) {
        std::vector<std::size_t> width(cols);
        for (std::size_t c = 0; c < cols; ++c)
            width[c] = std::string(pytuple_result_column_name(r, c)).size();
        for (std::size_t row = 0; row < rows; ++row)
            for (std::size_t c = 0; c < cols; ++c)
                width[c] = std::max(width[c], std::string(pytuple_result_cell(r, row, c)).size());
        const auto pad = [&](const std::string& s, std::size_t c) {
            std::string out(width[c] - s.size(), ' ');
            return out + s;
        };
        for (std::size_t c = 0; c < cols; ++c)
            std::cout << (c ? "  " : "") << pad(pytuple_result_column_name(r, c), c);
        std::cout << "\n";
        for (std::size_t row = 0; row < rows; ++row) {
            for (std::size_t c = 0; c < cols; ++c)
                std::cout << (c ? "  " : "") << pad(pytuple_result_cell(r, row, c), c);
            std::cout << "\n";
        }
    }
    if (!footer.empty())
        std::cout << footer << "\n";
}

ordered_json rows_as_json(const pytuple_result* r,
                          const std::vector<std::string>& list_columns = {},
                          const std::vector<std::string>& bool_columns = {}) {
    ordered_json rows = ordered_json::array();
    const std::size_t cols = pytuple_result_column_count(r);
    for (std::size_t row = 0; row < pytuple_result_row_count(r); ++row) {
        ordered_json obj;
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string name = pytuple_result_column_name(r, c);
            const std::string cell = pytuple_result_cell(r, row, c);
            if (std::find(list_columns.begin(), list_columns.end(), name) != list_columns.end())
                obj[name] = split_space(cell);
            else if (std::find(bool_columns.begin(), bool_columns.end(), name) != bool_columns.end())
                obj[name] = cell == "true";
            else
                obj[name] = cell;
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- commands

struct CommonOptions {
    std::string format = "table";
    std::string cls = "all";
    uint64_t factor_budget = 0; // 0 = library default, overridden by env
};

pytuple_class_filter filter_of(const std::string& cls) {
    if (cls == "primitive")
        return PYTUPLE_CLASS_PRIMITIVE;
    if (cls == "non-primitive")
        return PYTUPLE_CLASS_NON_PRIMITIVE;
    return PYTUPLE_CLASS_ALL;
}

int run_triples(const std::string& leg, const CommonOptions& opt) {
    pytuple_result* raw = nullptr;
    const pytuple_status status =
        pytuple_triples(leg.c_str(), filter_of(opt.cls), opt.factor_budget, &raw);
    if (status != PYTUPLE_OK)
        return fail(status);
    ResultPtr r(raw);
    if (opt.format == "csv") {
        print_csv(r.get());
    } else if (opt.format == "json") {
        ordered_json j;
        j["input"] = meta(r.get(), "input");
        j["solutions"] = rows_as_json(r.get(), {}, {"primitive"});
        print_json(j);
    } else {
        const std::size_t n = pytuple_result_row_count(r.get());
        print_table(r.get(), {}, std::to_string(n) + (n == 1 ? " triple for leg " : " triples for leg ") +
                                     meta(r.get(), "input"));
    }
    return kExitOk;
}

int run_count(const std::string& leg, const CommonOptions& opt) {
    pytuple_result* raw = nullptr;
    const pytuple_status status = pytuple_forecast(leg.c_str(), opt.factor_budget, &raw);
    if (status != PYTUPLE_OK)
        return fail(status);
    ResultPtr r(raw);
    std::string deltas;
    for (std::size_t row = 0; row < pytuple_result_row_count(r.get()); ++row) {
        if (row)
            deltas += ' ';
        deltas += pytuple_result_cell(r.get(), row, 0);
    }
    if (opt.format == "csv") {
        std::cout << "leg,total,primitive,non_primitive,primitive_deltas\n"
                  << meta(r.get(), "input") << ',' << meta(r.get(), "total") << ','
                  << meta(r.get(), "primitive") << ',' << meta(r.get(), "non_primitive") << ','
                  << deltas << "\n";
    } else if (opt.format == "json") {
        ordered_json j;
        j["input"] = meta(r.get(), "input");
        j["total"] = meta(r.get(), "total");
        j["primitive"] = meta(r.get(), "primitive");
        j["non_primitive"] = meta(r.get(), "non_primitive");
        ordered_json list = ordered_json::array();
        for (const std::string& d : split_space(deltas))
            list.push_back(d);
        j["primitive_deltas"] = list;
        print_json(j);
    } else {
        std::cout << "leg              " << meta(r.get(), "input") << "\n"
                  << "total            " << meta(r.get(), "total") << "\n"
                  << "primitive        " << meta(r.get(), "primitive") << "\n"
                  << "non-primitive    " << meta(r.get(), "non_primitive") << "\n"
                  << "primitive deltas " << deltas << "\n";
    }
    return kExitOk;
}

int run_complete(const std::vector<std::string>& legs, const CommonOptions& opt) {
    std::vector<const char*> raw_legs;
    raw_legs.reserve(legs.size());
    for (const std::string& leg : legs)
        raw_legs.push_back(leg.c_str());
    pytuple_result* raw = nullptr;
    const pytuple_status status = pytuple_completions(raw_legs.data(), raw_legs.size(),
                                                      filter_of(opt.cls), opt.factor_budget, &raw);
    if (status != PYTUPLE_OK)
        return fail(status);
    ResultPtr r(raw);
    const bool feasible = meta(r.get(), "feasible") == "true";
    if (opt.format == "csv") {
        std::vector<std::string> comments;
        if (!feasible)
            comments.push_back("reason: " + meta(r.get(), "reason"));
        print_csv(r.get(), comments);
    } else if (opt.format == "json") {
        ordered_json j;
        ordered_json input = ordered_json::array();
        for (const std::string& leg : split_space(meta(r.get(), "input")))
            input.push_back(leg);
        j["input"] = input;
        j["k"] = meta(r.get(), "k");
        j["feasible"] = feasible;
        j["reason"] = meta(r.get(), "reason");
        j["solutions"] = rows_as_json(r.get(), {}, {"primitive"});
        print_json(j);
    } else {
        std::vector<std::string> header{"k        " + meta(r.get(), "k")};
        if (!feasible)
            header.push_back("feasible no: k = 2 (mod 4)");
        const std::size_t n = pytuple_result_row_count(r.get());
        print_table(r.get(), header,
                    std::to_string(n) + (n == 1 ? " completion" : " completions"));
    }
    return kExitOk;
}

int run_chain(const std::string& seed, uint32_t depth, const std::string& strategy,
              uint64_t max_branches, const std::string& max_magnitude, const CommonOptions& opt) {
    pytuple_chain_options options{};
    options.depth = depth;
    options.strategy = PYTUPLE_CHAIN_ALL_BRANCHES;
    if (strategy == "min-delta")
        options.strategy = PYTUPLE_CHAIN_MIN_DELTA;
    else if (strategy == "primitive")
        options.strategy = PYTUPLE_CHAIN_PRIMITIVE_ONLY;
    options.max_branches = max_branches;
    options.max_magnitude = max_magnitude.empty() ? nullptr : max_magnitude.c_str();
    options.factor_budget = opt.factor_budget;

    pytuple_result* raw = nullptr;
    const pytuple_status status = pytuple_chains(seed.c_str(), &options, &raw);
    if (status != PYTUPLE_OK)
        return fail(status);
    ResultPtr r(raw);
    if (opt.format == "csv") {
        print_csv(r.get());
    } else if (opt.format == "json") {
        ordered_json j;
        j["input"] = meta(r.get(), "input");
        j["depth"] = meta(r.get(), "depth");
        j["strategy"] = meta(r.get(), "strategy");
        j["truncated"] = meta(r.get(), "truncated") == "true";
        j["solutions"] = rows_as_json(r.get(), {"legs", "deltas"}, {"primitive_branch", "capped"});
        print_json(j);
    } else {
        const std::size_t n = pytuple_result_row_count(r.get());
        std::string footer = std::to_string(n) + (n == 1 ? " chain" : " chains");
        if (meta(r.get(), "truncated") == "true")
            footer += " (truncated by max-branches)";
        print_table(r.get(), {}, footer);
    }
    return kExitOk;
}

int run_verify(const std::string& mode, const pytuple_verify_options& options,
               const CommonOptions& opt) {
    pytuple_result* raw = nullptr;
    const pytuple_status status = pytuple_verify(mode.c_str(), &options, &raw);
    if (status != PYTUPLE_OK)
        return fail(status);
    ResultPtr r(raw);
    const std::size_t discrepancies = pytuple_result_row_count(r.get());
    if (opt.format == "csv") {
        print_csv(r.get());
    } else if (opt.format == "json") {
        ordered_json j;
        j["mode"] = meta(r.get(), "mode");
        j["checked"] = meta(r.get(), "checked");
        j["discrepancies"] = rows_as_json(r.get());
        print_json(j);
    } else {
        print_table(r.get(),
                    {"mode          " + meta(r.get(), "mode"),
                     "checked       " + meta(r.get(), "checked"),
                     "discrepancies " + std::to_string(discrepancies)},
                    "");
    }
    return discrepancies == 0 ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_class) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    if (with_class)
        cmd->add_option("--class", opt.cls, "classification filter")
            ->check(CLI::IsMember({"all", "primitive", "non-primitive"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pythagorean triples, n-tuple completions and chains by gap enumeration"};
    app.require_subcommand(1);

    CommonOptions opt;
    if (const char* env = std::getenv("PYTUPLE_FACTOR_BUDGET")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || parsed == 0) {
            std::cerr << "pytuple: PYTUPLE_FACTOR_BUDGET must be a positive integer\n";
            return kExitUsage;
        }
        opt.factor_budget = parsed;
    }

    std::string leg, seed, verify_mode;
    std::vector<std::string> legs;
    uint32_t depth = 0;
    std::string strategy = "all", max_magnitude;
    uint64_t max_branches = 0;
    pytuple_verify_options verify_options{};

    auto* triples = app.add_subcommand("triples", "all triples with the given leg");
    triples->add_option("a", leg, "the given leg")->required();
    add_common(triples, opt, true);

    auto* count = app.add_subcommand("count", "forecast triple counts for a leg");
    count->add_option("a", leg, "the given leg")->required();
    add_common(count, opt, false);

    auto* complete = app.add_subcommand("complete", "all n-tuple completions of the given legs");
    complete->add_option("legs", legs, "the given legs")->required()->expected(-1);
    add_common(complete, opt, true);

    auto* chain = app.add_subcommand("chain", "grow tuple chains from a seed");
    chain->add_option("seed", seed, "starting number (>= 3)")->required();
    chain->add_option("--depth", depth, "number of extensions")->required()->check(CLI::PositiveNumber);
    chain->add_option("--strategy", strategy, "branch choice at each level")
        ->check(CLI::IsMember({"all", "min-delta", "primitive"}));
    chain->add_option("--max-branches", max_branches, "per-level width limit");
    chain->add_option("--max-magnitude", max_magnitude, "hypotenuse cutoff");
    add_common(chain, opt, false);

    auto* verify = app.add_subcommand("verify", "differential verification suites");
    verify->add_option("mode", verify_mode, "suite to run")
        ->required()
        ->check(CLI::IsMember({"triples-oracle", "tuples-oracle", "predictor", "euclid-coverage",
                               "counts"}));
    verify->add_option("--max-leg", verify_options.max_leg, "leg sweep bound");
    verify->add_option("--max-m", verify_options.max_m, "euclid parameter bound");
    verify->add_option("--max-k", verify_options.max_k, "corpus sum-of-squares bound");
    verify->add_option("--corpus-size", verify_options.corpus_size, "random corpus size");
    add_common(verify, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    verify_options.factor_budget = opt.factor_budget;

    if (triples->parsed())
        return run_triples(leg, opt);
    if (count->parsed())
        return run_count(leg, opt);
    if (complete->parsed())
        return run_complete(legs, opt);
    if (chain->parsed())
        return run_chain(seed, depth, strategy, max_branches, max_magnitude, opt);
    if (verify->parsed())
        return run_verify(verify_mode, verify_options, opt);
    return kExitUsage;
}
