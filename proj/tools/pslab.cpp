// pslab: enumerate pattern-avoiding set partitions, print statistic
// distributions and their closed forms, run bijections, and certify every
// closed form against exhaustive enumeration.

#include <atomic>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pslab/bijections.hpp"
#include "pslab/formulas.hpp"
#include "pslab/patterns.hpp"
#include "pslab/poly.hpp"
#include "pslab/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kUsageError = 2;

struct GlobalOpts {
    int limit = pslab::kDefaultEnumLimit;
    int jobs = 0;  // 0 = available parallelism
};

int effective_jobs(const GlobalOpts& g) {
    if (g.jobs > 0) return g.jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits the enumeration tree below depth-d prefixes, processes the shards
// on a small pool, and hands the per-shard results back in lexicographic
// shard order, so output is identical for every worker count.
template <typename ShardResult, typename RunShard>
std::vector<ShardResult> run_sharded(int n, const pslab::PatternSet* pats, bool prune, int limit,
                                     int jobs, RunShard&& run_shard) {
    if (n < 0) throw std::invalid_argument("negative length");
    if (n > limit || n > pslab::kMaxN)
        throw pslab::capacity_error("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                                    std::to_string(std::min(limit, pslab::kMaxN)));
    const int depth = std::min(n, 6);
    std::vector<pslab::Letters> seeds;
    auto collect = [&](std::span<const std::uint8_t> w) {
        seeds.emplace_back(w.begin(), w.end());
    };
    if (pats)
        pslab::for_each_avoiding(depth, *pats, collect, prune, limit);
    else
        pslab::for_each_rgf(depth, collect, limit);

    std::vector<ShardResult> results(seeds.size());
    if (jobs <= 1 || seeds.size() <= 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) run_shard(seeds[i], results[i]);
        return results;
    }
    std::vector<std::exception_ptr> errors(seeds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) return;
            try {
                run_shard(seeds[i], results[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(seeds.size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return results;
}

struct EnumerateOpts {
    int n = 0;
    std::string avoid;
    std::string format = "text";
    bool no_prune = false;
    bool blocks = false;
};

int cmd_enumerate(const GlobalOpts& g, const EnumerateOpts& o) {
    std::optional<pslab::PatternSet> pats;
    if (!o.avoid.empty()) pats = pslab::PatternSet::parse(o.avoid);

    // Line formats stream straight from the single-worker enumeration; only
    // the JSON document and multi-worker runs buffer words.
    if (o.format != "json" && effective_jobs(g) <= 1) {
        if (o.n < 0) throw std::invalid_argument("negative length");
        if (o.format == "csv") std::cout << (o.blocks ? "partition" : "rgf") << "\n";
        std::size_t count = 0;
        auto emit = [&](std::span<const std::uint8_t> w) {
            ++count;
            pslab::Rgf word = pslab::Rgf::unchecked(pslab::Letters(w.begin(), w.end()));
            std::cout << (o.blocks ? pslab::to_string(pslab::from_rgf(word)) : pslab::to_string(word))
                      << "\n";
        };
        if (pats)
            pslab::for_each_avoiding(o.n, *pats, emit, !o.no_prune, g.limit);
        else
            pslab::for_each_rgf(o.n, emit, g.limit);
        if (o.format != "csv") std::cout << "count: " << count << "\n";
        return 0;
    }

    using Shard = std::vector<pslab::Letters>;
    auto shards = run_sharded<Shard>(
        o.n, pats ? &*pats : nullptr, !o.no_prune, g.limit, effective_jobs(g),
        [&](const pslab::Letters& seed, Shard& out) {
            auto take = [&](std::span<const std::uint8_t> w) { out.emplace_back(w.begin(), w.end()); };
            if (pats)
                pslab::for_each_avoiding_extending(seed, o.n, *pats, take, !o.no_prune, g.limit);
            else
                pslab::for_each_rgf_extending(
                    seed, o.n, take, [](std::span<const std::uint8_t>) { return true; }, g.limit);
        });

    std::size_t count = 0;
    for (const auto& shard : shards) count += shard.size();
    auto render = [&](const pslab::Letters& w) {
        pslab::Rgf word = pslab::Rgf::unchecked(w);
        return o.blocks ? pslab::to_string(pslab::from_rgf(word)) : pslab::to_string(word);
    };

    if (o.format == "json") {
        ordered_json doc;
        doc["n"] = o.n;
        doc["avoid"] = ordered_json::array();
        if (pats)
            for (const auto& p : pats->patterns()) doc["avoid"].push_back(pslab::to_string(p));
        doc["words"] = ordered_json::array();
        for (const auto& shard : shards)
            for (const auto& w : shard) doc["words"].push_back(render(w));
        doc["count"] = count;
        std::cout << doc.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << (o.blocks ? "partition" : "rgf") << "\n";
        for (const auto& shard : shards)
            for (const auto& w : shard) std::cout << render(w) << "\n";
    } else {
        for (const auto& shard : shards)
            for (const auto& w : shard) std::cout << render(w) << "\n";
        std::cout << "count: " << count << "\n";
    }
    return 0;
}

struct DistributionOpts {
    int n = 0;
    std::string avoid;
    std::string stat;
    std::string format = "text";
    bool no_prune = false;
};

int cmd_distribution(const GlobalOpts& g, const DistributionOpts& o) {
    std::optional<pslab::PatternSet> pats;
    if (!o.avoid.empty()) pats = pslab::PatternSet::parse(o.avoid);

    auto shards = run_sharded<pslab::DistributionAccumulator>(
        o.n, pats ? &*pats : nullptr, !o.no_prune, g.limit, effective_jobs(g),
        [&](const pslab::Letters& seed, pslab::DistributionAccumulator& acc) {
            auto take = [&](std::span<const std::uint8_t> w) { acc.add(w); };
            if (pats)
                pslab::for_each_avoiding_extending(seed, o.n, *pats, take, !o.no_prune, g.limit);
            else
                pslab::for_each_rgf_extending(
                    seed, o.n, take, [](std::span<const std::uint8_t>) { return true; }, g.limit);
        });
    pslab::DistributionAccumulator total;
    for (const auto& acc : shards) total.merge(acc);
    pslab::Poly4 poly = total.take();

    if (!o.stat.empty()) {
        pslab::Poly1 p = poly.specialize(pslab::parse_stat_kind(o.stat)).with_var('q');
        if (o.format == "json") std::cout << p.to_json() << "\n";
        else if (o.format == "csv") std::cout << p.to_csv();
        else std::cout << p.to_text() << "\n";
    } else {
        if (o.format == "json") std::cout << poly.to_json() << "\n";
        else if (o.format == "csv") std::cout << poly.to_csv();
        else std::cout << poly.to_text() << "\n";
    }
    return 0;
}

struct FormulaOpts {
    std::string id;
    int n = 0;
    std::optional<int> t;
    std::string format = "text";
};

int cmd_formula(const FormulaOpts& o) {
    pslab::FormulaOutput out = pslab::evaluate_formula(o.id, o.n, o.t);
    if (o.format == "json") {
        ordered_json doc;
        doc["id"] = o.id;
        doc["n"] = o.n;
        if (o.t) doc["t"] = *o.t;
        doc["corrected"] = out.corrected;
        if (!out.note.empty()) doc["note"] = out.note;
        if (out.poly4) doc["poly"] = ordered_json::parse(out.poly4->to_json());
        if (out.poly1) doc["poly"] = ordered_json::parse(out.poly1->to_json());
        if (out.facts) {
            ordered_json f;
            if (out.facts->degree) f["degree"] = *out.facts->degree;
            if (out.facts->leading) f["leading"] = out.facts->leading->get_str();
            if (out.facts->constant) f["constant"] = out.facts->constant->get_str();
            if (out.facts->linear) f["linear"] = out.facts->linear->get_str();
            doc["facts"] = f;
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (o.format == "csv") {
        if (out.poly4) std::cout << out.poly4->to_csv();
        else if (out.poly1) std::cout << out.poly1->to_csv();
        else std::cout << out.facts->to_text() << "\n";
        return 0;
    }
    if (out.poly4) std::cout << out.poly4->to_text() << "\n";
    else if (out.poly1) std::cout << out.poly1->to_text() << "\n";
    else std::cout << out.facts->to_text() << "\n";
    if (out.corrected) std::cout << "# corrected: " << out.note << "\n";
    return 0;
}

struct BijectionOpts {
    std::string id;
    std::optional<int> n;
    std::string word;
    std::string format = "text";
};

int cmd_bijection(const BijectionOpts& o) {
    if (!o.word.empty()) {
        pslab::Rgf w = pslab::parse_rgf(o.word);
        std::string image;
        if (o.id == "bij.phi_123") image = pslab::to_string(pslab::phi_123(w));
        else if (o.id == "bij.psi_123") image = pslab::to_string(pslab::psi_123(w));
        else if (o.id == "bij.phi_dale") image = pslab::to_string(pslab::phi_dale(w));
        else if (o.id == "bij.phi_1_23_to_12_3") image = pslab::to_string(pslab::phi_1_23_to_12_3(w));
        else if (o.id == "bij.phi_layered") image = pslab::to_string(pslab::phi_layered(w));
        else throw std::domain_error("unknown bijection id '" + o.id + "'");
        if (o.format == "json") {
            ordered_json doc;
            doc["id"] = o.id;
            doc["word"] = o.word;
            doc["image"] = image;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << image << "\n";
        }
        return 0;
    }
    if (!o.n) throw std::invalid_argument("bijection: provide --word or --n");
    pslab::BijectionReport rep = pslab::verify_bijection(o.id, *o.n);
    if (o.format == "json") {
        ordered_json doc;
        doc["id"] = rep.id;
        doc["n"] = rep.n;
        doc["domain"] = rep.domain_size;
        doc["codomain"] = rep.codomain_size;
        doc["well_defined"] = rep.well_defined;
        doc["injective"] = rep.injective;
        doc["surjective"] = rep.surjective;
        doc["stats_transfer"] = rep.stats_transfer;
        doc["involution"] = rep.involution;
        doc["counterexamples"] = rep.counterexamples;
        doc["success"] = rep.success();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "id: " << rep.id << "\n"
                  << "n: " << rep.n << "\n"
                  << "domain: " << rep.domain_size << "\n"
                  << "codomain: " << rep.codomain_size << "\n"
                  << "status: " << (rep.success() ? "ok" : "FAILED") << "\n";
        for (const auto& ce : rep.counterexamples) std::cout << "counterexample: " << ce << "\n";
    }
    return rep.success() ? 0 : 1;
}

struct VerifyOpts {
    int max_n = 10;
    std::string filter;
    std::string format = "text";
};

int cmd_verify(const VerifyOpts& o) {
    pslab::VerifySuiteResult suite = pslab::run_verify_suite(o.max_n, o.filter);
    if (o.format == "json") {
        ordered_json doc;
        doc["max_n"] = suite.max_n;
        doc["checks"] = ordered_json::array();
        for (const auto& check : suite.checks) {
            ordered_json c;
            c["id"] = check.id;
            c["status"] = pslab::to_string(check.status);
            c["detail"] = check.detail;
            c["failures"] = check.failures;
            c["discrepancies"] = ordered_json::array();
            for (const auto& d : check.discrepancies) {
                ordered_json dd;
                dd["formula"] = d.formula;
                dd["n"] = d.n;
                dd["printed"] = d.printed;
                dd["corrected"] = d.corrected;
                dd["enumerated"] = d.enumerated;
                c["discrepancies"].push_back(dd);
            }
            doc["checks"].push_back(c);
        }
        doc["ok"] = suite.ok();
        std::cout << doc.dump(2) << "\n";
        return suite.ok() ? 0 : 1;
    }
    int passed = 0, corrected = 0, failed = 0;
    for (const auto& check : suite.checks) {
        const char* tag = check.status == pslab::CheckStatus::fail        ? "FAIL"
                          : check.status == pslab::CheckStatus::corrected ? "CORRECTED"
                                                                          : "PASS";
        (check.status == pslab::CheckStatus::fail        ? ++failed
         : check.status == pslab::CheckStatus::corrected ? ++corrected
                                                         : ++passed);
        std::cout << "[" << tag << "] " << check.id << ": " << check.detail << "\n";
        for (const auto& f : check.failures) std::cout << "    failure: " << f << "\n";
    }
    // Corrections always surface, machine-readably, even on success.
    for (const auto& check : suite.checks)
        for (const auto& d : check.discrepancies) {
            ordered_json dd;
            dd["formula"] = d.formula;
            dd["n"] = d.n;
            dd["printed"] = d.printed;
            dd["corrected"] = d.corrected;
            dd["enumerated"] = d.enumerated;
            std::cout << "discrepancy: " << dd.dump() << "\n";
        }
    std::cout << "verify: " << suite.checks.size() << " checks, " << passed << " pass, " << corrected
              << " corrected, " << failed << " fail\n";
    return suite.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-partition pattern avoidance and RGF statistics toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "pslab.toml", "configuration file with default limits");

    GlobalOpts g;
    app.add_option("--limit", g.limit, "full-enumeration size ceiling")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker count (0 = available parallelism)")
        ->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "list R_n or an avoidance class R_n(P)");
    EnumerateOpts eo;
    enumerate->add_option("--n", eo.n, "word length")->required();
    enumerate->add_option("--avoid", eo.avoid, "comma-separated patterns, e.g. \"13/2,12/3\"");
    enumerate->add_option("--format", eo.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    enumerate->add_flag("--no-prune", eo.no_prune, "disable prefix pruning (plain filter)");
    enumerate->add_flag("--blocks", eo.blocks, "print partitions in block form instead of words");

    auto* dist = app.add_subcommand("distribution", "statistic distribution over R_n(P)");
    DistributionOpts dopts;
    dist->add_option("--n", dopts.n, "word length")->required();
    dist->add_option("--avoid", dopts.avoid, "comma-separated patterns");
    dist->add_option("--stat", dopts.stat, "specialize to one statistic")
        ->check(CLI::IsMember({"lb", "ls", "rb", "rs"}));
    dist->add_option("--format", dopts.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    dist->add_flag("--no-prune", dopts.no_prune, "disable prefix pruning (plain filter)");

    auto* formula = app.add_subcommand("formula", "evaluate a closed form by id");
    FormulaOpts fo;
    formula->add_option("--id", fo.id, "formula id, e.g. f.13_2 (see --list)");
    auto* formula_n_opt = formula->add_option("--n", fo.n, "size parameter");
    int t_value = 0;
    auto* t_opt = formula->add_option("--t", t_value, "companion-pattern size for lb.14_2_3+singletons");
    bool list_ids = false;
    formula->add_flag("--list", list_ids, "print every formula id and exit");
    formula->add_option("--format", fo.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* bijection = app.add_subcommand("bijection", "apply or exhaustively verify a bijection");
    BijectionOpts bo;
    auto* bij_id_opt = bijection->add_option("--id", bo.id, "bijection id, e.g. bij.phi_123");
    int bij_n = 0;
    auto* bij_n_opt = bijection->add_option("--n", bij_n, "verify exhaustively at this size");
    bijection->add_option("--word", bo.word, "apply the map to one word");
    bool list_bijections = false;
    bijection->add_flag("--list", list_bijections, "print every bijection id and exit");
    bijection->add_option("--format", bo.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run the full certification suite");
    VerifyOpts vo;
    verify->add_option("--max-n", vo.max_n, "cap every check at this size")->capture_default_str();
    verify->add_option("--filter", vo.filter, "run only checks whose id contains this");
    verify->add_option("--format", vo.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*enumerate) return cmd_enumerate(g, eo);
        if (*dist) return cmd_distribution(g, dopts);
        if (*formula) {
            if (list_ids) {
                for (const auto& id : pslab::formula_ids()) std::cout << id << "\n";
                return 0;
            }
            if (fo.id.empty()) throw std::invalid_argument("formula: --id is required");
            if (formula_n_opt->count() == 0) throw std::invalid_argument("formula: --n is required");
            if (t_opt->count() > 0) fo.t = t_value;
            return cmd_formula(fo);
        }
        if (*bijection) {
            if (list_bijections) {
                for (const auto& id : pslab::bijection_ids()) std::cout << id << "\n";
                return 0;
            }
            if (bij_id_opt->count() == 0) throw std::invalid_argument("bijection: --id is required");
            if (bij_n_opt->count() > 0) bo.n = bij_n;
            return cmd_bijection(bo);
        }
        if (*verify) return cmd_verify(vo);
    } catch (const pslab::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return 0;
}
