#include "pinnacle/cli.hpp"

#include "pinnacle/counting.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/generation.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/q_sum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>

namespace pinnacle {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

struct Request {
    std::optional<int> n;
    std::string pinnacles;
    std::string method;
    bool json = false;
    bool list = false;
    std::string check;
    long limit = -1;
    int max_n = 8;
    int k = 0;
    std::string mode;
    std::string format = "lines";
    std::vector<std::string> presets;
    bool inject_fault = false;
};

PinnacleProblem problem_from(const Request& req, bool n_required) {
    auto values = parse_pinnacle_list(req.pinnacles);
    int top = 0;
    for (int v : values)
        top = std::max(top, v);
    int n = top;
    if (req.n) {
        n = *req.n;
    } else if (n_required) {
        throw std::invalid_argument("-n is required");
    }
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (top > n)
        throw std::invalid_argument("largest pinnacle " + std::to_string(top) + " exceeds n = " + std::to_string(n));
    return PinnacleProblem::from_values(n, values);
}

json pinnacles_json(const PinnacleProblem& prob) {
    return json(std::vector<int>(prob.pinnacles().begin(), prob.pinnacles().end()));
}

void print_value(std::ostream& out, const Request& req, const PinnacleProblem& prob, const std::string& method,
                 const ExactCount& value) {
    if (req.json) {
        json j = {{"n", prob.n()}, {"pinnacles", pinnacles_json(prob)}, {"method", method}, {"count", to_decimal(value)}};
        out << j.dump() << '\n';
    } else {
        out << to_decimal(value) << '\n';
    }
}

int cmd_count(const Request& req, std::ostream& out) {
    const auto prob = problem_from(req, true);
    const std::string method = req.method.empty() ? "rec" : req.method;
    ExactCount value;
    if (method == "rec")
        value = count_pinnacle(prob);
    else if (method == "motzkin-sum")
        value = count_via_motzkin_sum(prob);
    else if (method == "dyck-sum")
        value = count_via_dyck_sum(prob);
    else if (method == "brute")
        value = brute_count(prob.n(), prob.as_set());
    else
        throw std::invalid_argument("unknown count method '" + method + "'");
    print_value(out, req, prob, method, value);
    return kExitOk;
}

int cmd_q(const Request& req, std::ostream& out) {
    const auto prob = problem_from(req, true);
    const std::string method = req.method.empty() ? "meander-dp" : req.method;
    ExactCount value;
    if (method == "rec")
        value = q_recurrence(prob);
    else if (method == "meander-dp")
        value = q_meander(prob, MeanderMode::DynamicProgramming);
    else if (method == "meander-enum")
        value = q_meander(prob, MeanderMode::Enumerate);
    else if (method == "subset")
        value = q_subset_definition(prob);
    else
        throw std::invalid_argument("unknown q method '" + method + "'");
    print_value(out, req, prob, method, value);
    return kExitOk;
}

int cmd_orders(const Request& req, std::ostream& out) {
    const auto prob = problem_from(req, false);
    if (prob.empty())
        throw std::invalid_argument("orders needs a nonempty pinnacle set");
    if (!is_admissible_pinnacle_set(prob))
        throw std::invalid_argument("pinnacle set " + prob.pinnacles_string() + " is not admissible");

    if (!req.check.empty()) {
        const bool ok = is_admissible_ordering(Permutation::parse(req.check), prob);
        if (req.json)
            out << json{{"pinnacles", pinnacles_json(prob)}, {"ordering", req.check}, {"admissible", ok}}.dump()
                << '\n';
        else
            out << (ok ? "true" : "false") << '\n';
        return kExitOk;
    }
    if (req.list) {
        const auto orders = list_admissible_orderings(prob);
        if (req.json) {
            json arr = json::array();
            for (const auto& s : orders)
                arr.push_back(s.to_string());
            out << json{{"pinnacles", pinnacles_json(prob)}, {"orderings", arr}}.dump() << '\n';
        } else {
            for (const auto& s : orders)
                out << s.to_string() << '\n';
        }
        return kExitOk;
    }
    const std::string method = req.method.empty() ? "rec" : req.method;
    ExactCount value;
    if (method == "rec")
        value = order_count(prob);
    else if (method == "motzkin-sum")
        value = order_count_via_motzkin(prob);
    else if (method == "filter")
        value = static_cast<unsigned long>(list_admissible_orderings(prob).size());
    else if (method == "brute")
        value = static_cast<unsigned long>(brute_orderings(prob.as_set()).size());
    else
        throw std::invalid_argument("unknown orders method '" + method + "'");
    print_value(out, req, prob, method, value);
    return kExitOk;
}

int cmd_generate(const Request& req, std::ostream& out) {
    const auto prob = problem_from(req, true);
    if (req.format != "lines" && req.format != "json")
        throw std::invalid_argument("unknown format '" + req.format + "'");
    const bool as_json = req.json || req.format == "json";
    PermutationGenerator gen(prob);
    json arr = json::array();
    long emitted = 0;
    while (req.limit < 0 || emitted < req.limit) {
        auto pi = gen.next();
        if (!pi)
            break;
        ++emitted;
        if (as_json)
            arr.push_back(std::vector<int>(pi->word().begin(), pi->word().end()));
        else
            out << pi->to_spaced_string() << '\n';
    }
    if (as_json)
        out << json{{"n", prob.n()}, {"pinnacles", pinnacles_json(prob)}, {"permutations", arr}}.dump() << '\n';
    return kExitOk;
}

int cmd_alpha(const Request& req, std::ostream& out) {
    if (req.k < 1)
        throw std::invalid_argument("-k must be at least 1");
    const std::string mode = req.mode.empty() ? "ceiling" : req.mode;
    AlphaMode m;
    if (mode == "ceiling")
        m = AlphaMode::Ceiling;
    else if (mode == "oracle")
        m = AlphaMode::Oracle;
    else
        throw std::invalid_argument("unknown alpha mode '" + mode + "'");
    const auto value = alpha(req.k, m);
    if (req.json)
        out << json{{"k", req.k}, {"mode", mode}, {"alpha", to_decimal(value)}}.dump() << '\n';
    else
        out << to_decimal(value) << '\n';
    return kExitOk;
}

int cmd_verify(const Request& req, std::ostream& out) {
    if (req.max_n < 1 || req.max_n > 10)
        throw std::invalid_argument("--max-n must be in 1..10");
    CrossCheckOptions options;
    if (req.inject_fault)
        options.count_override = [](const PinnacleProblem& p) -> ExactCount {
            return count_pinnacle(p) + (p.k() == 1 ? 1 : 0);
        };
    const auto started = std::chrono::steady_clock::now();
    const auto report = cross_check(req.max_n, options);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (req.json) {
        json mism = json::array();
        for (const auto& m : report.mismatches)
            mism.push_back(m.to_string());
        out << json{{"max_n", req.max_n},
                    {"comparisons", report.comparisons},
                    {"mismatches", mism},
                    {"ok", report.ok()},
                    {"seconds", secs}}
                   .dump()
            << '\n';
    } else {
        for (const auto& m : report.mismatches)
            out << "MISMATCH " << m.to_string() << '\n';
        out << (report.ok() ? "OK" : "FAIL") << ": max-n " << req.max_n << ", " << report.comparisons
            << " comparisons, " << report.mismatches.size() << " mismatches, " << std::fixed << std::setprecision(2)
            << secs << " s\n";
    }
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const Request& req, std::ostream& out) {
    auto presets = bench_presets();
    std::vector<BenchPreset> chosen;
    if (req.presets.empty()) {
        chosen = presets;
    } else {
        for (const auto& name : req.presets) {
            auto it = std::find_if(presets.begin(), presets.end(), [&](const auto& p) { return p.name == name; });
            if (it == presets.end())
                throw std::invalid_argument("unknown bench preset '" + name + "'");
            chosen.push_back(*it);
        }
    }
    int status = kExitOk;
    json rows = json::array();
    if (!req.json)
        out << std::left << std::setw(12) << "preset" << std::right << std::setw(8) << "n" << std::setw(6) << "k"
            << std::setw(8) << "digits" << std::setw(12) << "seconds" << '\n';
    for (const auto& preset : chosen) {
        const auto started = std::chrono::steady_clock::now();
        const auto value = count_pinnacle(preset.problem);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        const std::string text = to_decimal(value);
        const bool wrong = preset.name == "paper-n100" && text != kReferenceCount;
        if (wrong)
            status = kExitVerifyFailed;
        if (req.json) {
            rows.push_back({{"preset", preset.name},
                            {"n", preset.problem.n()},
                            {"k", preset.problem.k()},
                            {"count", text},
                            {"seconds", secs}});
        } else {
            out << std::left << std::setw(12) << preset.name << std::right << std::setw(8) << preset.problem.n()
                << std::setw(6) << preset.problem.k() << std::setw(8) << text.size() << std::setw(12) << std::fixed
                << std::setprecision(4) << secs << (wrong ? "  WRONG" : "") << '\n';
            if (preset.name == "paper-n100")
                out << "count " << text << '\n';
        }
    }
    if (req.json)
        out << rows.dump() << '\n';
    return status;
}

}  // namespace

std::vector<int> parse_pinnacle_list(std::string_view text) {
    std::vector<int> values;
    std::set<int> seen;
    text = trim(text);
    if (text.empty())
        return values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const auto token = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        int v = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size())
            throw std::invalid_argument("bad pinnacle entry '" + std::string(token) + "'");
        if (v <= 0)
            throw std::invalid_argument("pinnacles must be positive");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate pinnacle " + std::to_string(v));
        values.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return values;
}

PinnacleProblem evenly_spaced_problem(int n, int k) {
    if (k < 1 || n < 4 * k)
        throw std::invalid_argument("evenly spaced problem needs k >= 1 and n >= 4k");
    const int step = (n - 1) / k;
    std::vector<int> p;
    for (int i = 1; i <= k; ++i)
        p.push_back(n - (i - 1) * step);
    return PinnacleProblem(n, p);
}

std::vector<BenchPreset> bench_presets() {
    return {
        {"paper-n100", PinnacleProblem::from_values(kReferenceN, parse_pinnacle_list(kReferencePinnacles))},
        {"large-n", evenly_spaced_problem(100000, 50)},
        {"large-k", evenly_spaced_problem(1000, 200)},
    };
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of permutations by pinnacle set", "pinnacle"};
    app.require_subcommand(1);
    Request req;

    auto add_np = [&](CLI::App* sub) {
        sub->add_option("-n", req.n, "permutation size");
        sub->add_option("-P", req.pinnacles, "comma-separated pinnacle values");
        sub->add_flag("--json", req.json, "JSON output");
    };
    auto* count = app.add_subcommand("count", "count permutations with pinnacle set P");
    add_np(count);
    count->add_option("--method", req.method, "rec | motzkin-sum | dyck-sum | brute");
    auto* q = app.add_subcommand("q", "weighted subset sum q_n(P)");
    add_np(q);
    q->add_option("--method", req.method, "meander-dp | meander-enum | rec | subset");
    auto* orders = app.add_subcommand("orders", "admissible pinnacle orderings");
    add_np(orders);
    orders->add_option("--method", req.method, "rec | motzkin-sum | filter | brute");
    orders->add_flag("--list", req.list, "list every admissible ordering");
    orders->add_option("--check", req.check, "test one ordering");
    auto* generate = app.add_subcommand("generate", "list permutations with pinnacle set P");
    add_np(generate);
    generate->add_option("--limit", req.limit, "stop after this many");
    generate->add_option("--format", req.format, "lines | json");
    auto* alpha_cmd = app.add_subcommand("alpha", "distinct ordering counts for k pinnacles");
    alpha_cmd->add_option("-k", req.k, "number of pinnacles")->required();
    alpha_cmd->add_option("--mode", req.mode, "ceiling | oracle");
    alpha_cmd->add_flag("--json", req.json, "JSON output");
    auto* verify = app.add_subcommand("verify", "cross-check every method against brute force");
    verify->add_option("--max-n", req.max_n, "largest n scanned (<= 10)");
    verify->add_flag("--json", req.json, "JSON output");
    verify->add_flag("--inject-fault", req.inject_fault)->group("");
    auto* bench = app.add_subcommand("bench", "time the recurrence on preset instances");
    bench->add_option("preset", req.presets, "paper-n100 | large-n | large-k");
    bench->add_flag("--json", req.json, "JSON output");

    std::vector<std::string> argv_store{"pinnacle"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "pinnacle: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (count->parsed())
            return cmd_count(req, out);
        if (q->parsed())
            return cmd_q(req, out);
        if (orders->parsed())
            return cmd_orders(req, out);
        if (generate->parsed())
            return cmd_generate(req, out);
        if (alpha_cmd->parsed())
            return cmd_alpha(req, out);
        if (verify->parsed())
            return cmd_verify(req, out);
        return cmd_bench(req, out);
    } catch (const std::invalid_argument& e) {
        err << "pinnacle: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "pinnacle: " << e.what() << '\n';
    } catch (const LimitExceeded& e) {
        err << "pinnacle: " << e.what() << '\n';
    }
    return kExitInputError;
}

}  // namespace pinnacle
