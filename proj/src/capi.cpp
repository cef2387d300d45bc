#include "pytuple/pytuple.h"

#include <iterator>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chains.hpp"
#include "natural.hpp"
#include "triples.hpp"
#include "tuples.hpp"
#include "verify.hpp"

using namespace pytuple;

struct pytuple_result {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, std::string> meta;
};

namespace {

thread_local std::string g_last_error;

const char* kTrue = "true";
const char* kFalse = "false";

std::string join_space(const std::vector<Natural>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ' ';
        out += to_decimal(values[i]);
    }
    return out;
}

pytuple_status status_of(const Error& e) {
    switch (e.code()) {
    case ErrorCode::Domain: return PYTUPLE_ERROR_DOMAIN;
    case ErrorCode::InvalidDelta: return PYTUPLE_ERROR_INVALID_DELTA;
    case ErrorCode::BudgetExceeded: return PYTUPLE_ERROR_BUDGET_EXCEEDED;
    case ErrorCode::OracleCapExceeded: return PYTUPLE_ERROR_ORACLE_CAP_EXCEEDED;
    case ErrorCode::MagnitudeExceeded: return PYTUPLE_ERROR_MAGNITUDE_EXCEEDED;
    }
    return PYTUPLE_ERROR_INTERNAL;
}

template <typename Fn>
pytuple_status guarded(pytuple_result** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "output pointer is null";
        return PYTUPLE_ERROR_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto result = std::make_unique<pytuple_result>();
        fn(*result);
        *out = result.release();
        g_last_error.clear();
        return PYTUPLE_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PYTUPLE_ERROR_INTERNAL;
    }
}

ClassFilter to_filter(pytuple_class_filter filter) {
    switch (filter) {
    case PYTUPLE_CLASS_PRIMITIVE: return ClassFilter::PrimitiveOnly;
    case PYTUPLE_CLASS_NON_PRIMITIVE: return ClassFilter::NonPrimitiveOnly;
    default: return ClassFilter::All;
    }
}

std::uint64_t budget_or_default(std::uint64_t budget) {
    return budget == 0 ? kDefaultFactorBudget : budget;
}

} // namespace

extern "C" {

const char* pytuple_status_name(pytuple_status status) {
    switch (status) {
    case PYTUPLE_OK: return "ok";
    case PYTUPLE_ERROR_ARGUMENT: return "argument";
    case PYTUPLE_ERROR_DOMAIN: return "domain";
    case PYTUPLE_ERROR_INVALID_DELTA: return "invalid-delta";
    case PYTUPLE_ERROR_BUDGET_EXCEEDED: return "budget-exceeded";
    case PYTUPLE_ERROR_ORACLE_CAP_EXCEEDED: return "oracle-cap-exceeded";
    case PYTUPLE_ERROR_MAGNITUDE_EXCEEDED: return "magnitude-exceeded";
    case PYTUPLE_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* pytuple_last_error(void) { return g_last_error.c_str(); }

const char* pytuple_version(void) { return "1.0.0"; }

void pytuple_result_free(pytuple_result* result) { delete result; }

size_t pytuple_result_row_count(const pytuple_result* result) {
    return result ? result->rows.size() : 0;
}

size_t pytuple_result_column_count(const pytuple_result* result) {
    return result ? result->columns.size() : 0;
}

const char* pytuple_result_column_name(const pytuple_result* result, size_t column) {
    if (!result || column >= result->columns.size())
        return nullptr;
    return result->columns[column].c_str();
}

const char* pytuple_result_cell(const pytuple_result* result, size_t row, size_t column) {
    if (!result || row >= result->rows.size() || column >= result->rows[row].size())
        return nullptr;
    return result->rows[row][column].c_str();
}

const char* pytuple_result_meta(const pytuple_result* result, const char* key) {
    if (!result || !key)
        return nullptr;
    auto it = result->meta.find(key);
    return it == result->meta.end() ? nullptr : it->second.c_str();
}

size_t pytuple_result_meta_count(const pytuple_result* result) {
    return result ? result->meta.size() : 0;
}

const char* pytuple_result_meta_key(const pytuple_result* result, size_t index) {
    if (!result || index >= result->meta.size())
        return nullptr;
    auto it = result->meta.begin();
    std::advance(it, index);
    return it->first.c_str();
}

pytuple_status pytuple_triples(const char* leg, pytuple_class_filter filter,
                               uint64_t factor_budget, pytuple_result** out) {
    if (leg == nullptr) {
        g_last_error = "leg is null";
        return PYTUPLE_ERROR_ARGUMENT;
    }
    return guarded(out, [&](pytuple_result& r) {
        const Natural a = parse_natural(leg);
        r.columns = {"delta", "b", "c", "primitive"};
        for (const Triple& t : all_triples(a, to_filter(filter), budget_or_default(factor_budget)))
            r.rows.push_back({to_decimal(t.delta), to_decimal(t.b), to_decimal(t.c),
                              t.primitive() ? kTrue : kFalse});
        r.meta["input"] = to_decimal(a);
    });
}

pytuple_status pytuple_forecast(const char* leg, uint64_t factor_budget, pytuple_result** out) {
    if (leg == nullptr) {
        g_last_error = "leg is null";
        return PYTUPLE_ERROR_ARGUMENT;
    }
    return guarded(out, [&](pytuple_result& r) {
        const Natural a = parse_natural(leg);
        const TripleForecast fc = forecast_counts(a, budget_or_default(factor_budget));
        r.columns = {"delta"};
        for (const Natural& d : fc.primitive_deltas)
            r.rows.push_back({to_decimal(d)});
        r.meta["input"] = to_decimal(a);
        r.meta["total"] = std::to_string(fc.total);
        r.meta["primitive"] = std::to_string(fc.primitive);
        r.meta["non_primitive"] = std::to_string(fc.non_primitive);
    });
}

pytuple_status pytuple_completions(const char* const* legs, size_t leg_count,
                                   pytuple_class_filter filter, uint64_t factor_budget,
                                   pytuple_result** out) {
    if (legs == nullptr || leg_count == 0) {
        g_last_error = "at least one leg is required";
        return PYTUPLE_ERROR_ARGUMENT;
    }
    return guarded(out, [&](pytuple_result& r) {
        std::vector<Natural> parsed;
        parsed.reserve(leg_count);
        for (size_t i = 0; i < leg_count; ++i) {
            if (legs[i] == nullptr)
                throw DomainError("leg " + std::to_string(i) + " is null");
            parsed.push_back(parse_natural(legs[i]));
        }
        const FeasibilityReport report = feasibility(parsed);
        r.columns = {"delta", "completion", "hypotenuse", "primitive"};
        for (const TupleSolution& s :
             all_completions(parsed, to_filter(filter), budget_or_default(factor_budget)))
            r.rows.push_back({to_decimal(s.delta), to_decimal(s.completion),
                              to_decimal(s.hypotenuse), s.primitive() ? kTrue : kFalse});
        r.meta["input"] = join_space(parsed);
        r.meta["k"] = to_decimal(report.k);
        r.meta["feasible"] = report.feasible ? kTrue : kFalse;
        r.meta["reason"] = report.feasible ? "none" : "k_congruent_2_mod_4";
    });
}

pytuple_status pytuple_chains(const char* seed, const pytuple_chain_options* options,
                              pytuple_result** out) {
    if (seed == nullptr || options == nullptr) {
        g_last_error = seed == nullptr ? "seed is null" : "options is null";
        return PYTUPLE_ERROR_ARGUMENT;
    }
    return guarded(out, [&](pytuple_result& r) {
        const Natural seed_value = parse_natural(seed);
        ChainStrategy strategy;
        const char* strategy_name = "all";
        switch (options->strategy) {
        case PYTUPLE_CHAIN_ALL_BRANCHES:
            strategy.mode = ChainMode::AllBranches;
            break;
        case PYTUPLE_CHAIN_PRIMITIVE_ONLY:
            strategy.mode = ChainMode::PrimitiveTriplesOnly;
            strategy_name = "primitive";
            break;
        case PYTUPLE_CHAIN_MIN_DELTA:
            strategy.mode = ChainMode::MinDelta;
            strategy_name = "min-delta";
            break;
        default:
            throw DomainError("unknown chain strategy");
        }
        if (options->max_branches)
            strategy.max_branches = options->max_branches;
        if (options->max_magnitude && options->max_magnitude[0] != '\0')
            strategy.max_magnitude = parse_natural(options->max_magnitude);
        strategy.factor_budget = budget_or_default(options->factor_budget);

        const ChainSet set = build_chains(seed_value, options->depth, strategy);
        r.columns = {"legs", "hypotenuse", "deltas", "primitive_branch", "capped"};
        for (const Chain& chain : set.chains) {
            const bool primitive = classify_chain(chain) == BranchClass::PrimitiveBranch;
            r.rows.push_back({join_space(chain.legs), to_decimal(chain.hypotenuse),
                              join_space(chain.deltas), primitive ? kTrue : kFalse,
                              chain.capped ? kTrue : kFalse});
        }
        r.meta["input"] = to_decimal(seed_value);
        r.meta["depth"] = std::to_string(options->depth);
        r.meta["strategy"] = strategy_name;
        r.meta["truncated"] = set.truncated ? kTrue : kFalse;
    });
}

pytuple_status pytuple_verify(const char* mode, const pytuple_verify_options* options,
                              pytuple_result** out) {
    if (mode == nullptr) {
        g_last_error = "mode is null";
        return PYTUPLE_ERROR_ARGUMENT;
    }
    return guarded(out, [&](pytuple_result& r) {
        VerifyBounds bounds;
        if (options) {
            bounds.max_leg = options->max_leg;
            bounds.max_m = options->max_m;
            bounds.max_k = options->max_k;
            bounds.corpus_size = options->corpus_size;
            if (options->factor_budget)
                bounds.factor_budget = options->factor_budget;
        }
        const VerifyReport report = run_verify(mode, bounds);
        r.columns = {"input", "detail"};
        for (const Discrepancy& d : report.discrepancies)
            r.rows.push_back({d.input, d.detail});
        r.meta["mode"] = report.mode;
        r.meta["checked"] = std::to_string(report.checked);
        r.meta["discrepancies"] = std::to_string(report.discrepancies.size());
    });
}

} // extern "C"
