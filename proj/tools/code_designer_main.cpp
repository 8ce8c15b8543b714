// Command-line front end: feasibility checks, construction, verification,
// the determinant criterion oracle, and a decoding demo, all over the JSON
// file formats. Machine output goes to stdout (or --out), summaries to
// stderr. Exit codes are part of the contract:
//   0 ok, 1 failed verdict, 2 malformed input, 3 caps exceeded,
//   4 infeasible, 5 file mismatch, 10 search bug (file a defect report).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codedesign/common.hpp"
#include "codedesign/constraints.hpp"
#include "codedesign/designer.hpp"
#include "codedesign/field.hpp"
#include "codedesign/json_io.hpp"
#include "codedesign/matrix.hpp"
#include "codedesign/oracle.hpp"
#include "codedesign/rng.hpp"

using namespace codedesign;

namespace {

Caps caps_from_env() {
    Caps caps;
    const char* raw = std::getenv("CODE_DESIGNER_CAPS");
    if (raw == nullptr) return caps;
    std::string text = raw;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(
                "CODE_DESIGNER_CAPS entries must look like key=value");
        std::string key = item.substr(0, eq);
        std::uint64_t value = std::stoull(item.substr(eq + 1));
        if (key == "subset")
            caps.subset_enum = static_cast<int>(value);
        else if (key == "bruteforce")
            caps.bruteforce = value;
        else if (key == "enum_k")
            caps.enum_k = static_cast<int>(value);
        else if (key == "enum_n")
            caps.enum_n = static_cast<int>(value);
        else
            throw std::invalid_argument("unknown cap: " + key);
    }
    return caps;
}

Json omega_to_json(const std::vector<int>& witness) {
    Json arr = Json::array();
    for (int e : witness) arr.push_back(e);
    return arr;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << to_canonical_string(j);
    else
        save_json_file(out_path, j);
}

std::string field_name(const FieldContext& F) {
    if (F.m() == 1) return "GF(" + std::to_string(F.p()) + ")";
    return "GF(" + std::to_string(F.p()) + "^" + std::to_string(F.m()) + ")";
}

int cmd_check(const std::string& path, bool bound_only,
              const std::string& out_path, const Caps& caps) {
    ConstraintInstance inst = instance_from_json(load_json_file(path));
    EllReport rep = compute_ell_report(inst, caps);
    int d_upper = singleton_upper_bound(inst.n, rep.ell);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["ell"] = rep.ell;
    j["d_upper"] = d_upper;
    if (bound_only) {
        emit(j, out_path);
        std::cerr << "ell = " << rep.ell << ", d_upper = " << d_upper << "\n";
        return 0;
    }
    CheckReport chk = check_gmmds(inst, caps);
    j["feasible_mds"] = chk.ok;
    if (!chk.ok) j["violating_omega"] = omega_to_json(chk.witness);
    emit(j, out_path);
    std::cerr << "ell = " << rep.ell << ", d_upper = " << d_upper
              << ", feasible at dimension k: " << (chk.ok ? "yes" : "no");
    if (!chk.ok) std::cerr << " (rows " << omega_to_json(chk.witness).dump()
                           << " pin too many columns)";
    std::cerr << "\n";
    return 0;
}

int cmd_construct(const std::string& path, const DesignOptions& opts,
                  const std::string& out_path, const Caps& caps) {
    ConstraintInstance inst = instance_from_json(load_json_file(path));
    CodeDesign design = design_code(inst, opts, caps);
    emit(design_to_json(design), out_path);
    std::cerr << "q = " << design.field->q() << " ("
              << field_name(*design.field) << "), ell = " << design.ell
              << ", d = " << design.distance << ", search: ";
    if (design.search.systematic)
        std::cerr << "systematic scan after "
                  << design.search.random_attempts_used << " random attempts\n";
    else
        std::cerr << "random, attempt " << design.search.random_attempts_used
                  << "\n";
    return 0;
}

int cmd_verify(const std::string& design_path, const std::string& instance_path,
               const std::string& out_path, const Caps& caps) {
    DesignFileData data = design_from_json(load_json_file(design_path));
    ConstraintInstance inst = instance_from_json(load_json_file(instance_path));
    if (inst.k != data.instance.k || inst.n != data.instance.n ||
        inst.sets != data.instance.sets)
        throw MismatchError("design file was built for a different instance");

    const FieldContext& F = *data.field;
    bool distinct = true;
    for (std::size_t i = 0; i < data.alpha.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < data.alpha.size(); ++j)
            if (data.alpha[i] == data.alpha[j]) {
                distinct = false;
                break;
            }
    bool invertible = !F.is_zero(data.t_full.det());

    std::vector<FieldElement> beta(data.alpha.size());
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = F.neg(data.alpha[i]);
    FieldMatrix full = data.t_full.mul(
        FieldMatrix::vandermonde(F, data.ell, beta));
    bool consistent = true;
    for (int i = 0; i < inst.k && consistent; ++i)
        for (int j = 0; j < inst.n; ++j)
            if (!(data.generator.at(i, j) == full.at(i, j))) {
                consistent = false;
                break;
            }

    OracleReport rep = verify_design(data.generator, inst, caps);
    bool ok = rep.ok && distinct && invertible && consistent;

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["pattern_ok"] = rep.pattern_ok;
    j["rank_ok"] = rep.rank_ok;
    j["ell"] = rep.ell;
    j["expected_distance"] = rep.expected_distance;
    if (rep.distance)
        j["distance"] = *rep.distance;
    else
        j["distance"] = nullptr;
    j["distance_verdict"] = rep.distance_skipped
                                ? "skipped(cap)"
                                : (rep.ok ? "pass" : "fail");
    j["alphas_distinct"] = distinct;
    j["t_invertible"] = invertible;
    j["generator_consistent"] = consistent;
    j["ok"] = ok;
    j["detail"] = !rep.detail.empty()
                      ? rep.detail
                      : (!distinct      ? "alphas collide"
                         : !invertible  ? "coefficient matrix is singular"
                         : !consistent ? "G does not equal the top of T V"
                                        : "");
    emit(j, out_path);
    if (ok)
        std::cerr << "verify: pass"
                  << (rep.distance_skipped ? " (distance skipped by cap)" : "")
                  << "\n";
    else
        std::cerr << "verify: FAIL: " << j["detail"].get<std::string>() << "\n";
    return ok ? 0 : 1;
}

int cmd_t3_oracle(const std::string& path, bool exhaustive, int trials,
                  std::uint64_t seed, const std::string& out_path,
                  const Caps& caps) {
    if (exhaustive) {
        auto all = enumerate_general_instances(caps.enum_k, caps.enum_n, caps);
        long agreements = 0;
        for (std::size_t i = 0; i < all.size(); ++i) {
            bool cond = check_general(all[i], caps).ok;
            bool oracle = det_identity_oracle(all[i], seed + i, trials);
            if (cond == oracle) ++agreements;
        }
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["total"] = all.size();
        j["agreements"] = agreements;
        bool all_agree = agreements == static_cast<long>(all.size());
        j["all_agree"] = all_agree;
        emit(j, out_path);
        std::cerr << "swept " << all.size() << " instances (k <= "
                  << caps.enum_k << ", n <= " << caps.enum_n << "), "
                  << agreements << " agree\n";
        return all_agree ? 0 : 1;
    }
    GeneralInstance inst = general_from_json(load_json_file(path));
    CheckReport cond = check_general(inst, caps);
    bool oracle = det_identity_oracle(inst, seed, trials);
    bool agree = cond.ok == oracle;
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["condition"] = cond.ok;
    if (!cond.ok) j["violating_omega"] = omega_to_json(cond.witness);
    j["oracle_nonzero"] = oracle;
    j["agree"] = agree;
    emit(j, out_path);
    std::cerr << "condition " << (cond.ok ? "holds" : "fails")
              << ", determinant believed "
              << (oracle ? "nonzero" : "identically zero") << ", "
              << (agree ? "agree" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
}

int cmd_decode_demo(const std::string& path, int errors, int trials,
                    std::uint64_t seed, const std::string& out_path) {
    CodeDesign design = to_design(design_from_json(load_json_file(path)));
    const FieldContext& F = *design.field;
    const int n = design.instance.n;
    const int k = design.instance.k;
    const int radius = correctable_errors(design);
    if (errors < 0) errors = radius;
    if (errors >= n)
        throw std::invalid_argument("cannot corrupt " +
                                    std::to_string(errors) +
                                    " of n = " + std::to_string(n) +
                                    " positions");
    DetRng rng(seed, 0x64656d6full);
    int successes = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<FieldElement> message(k);
        for (auto& e : message) e = F.element(rng.next_below(F.q()));
        auto word = encode(design, message);
        for (auto j : rng.sample_distinct(word.size(), errors))
            word[j] = F.add(word[j],
                            F.element(1 + rng.next_below(F.q() - 1)));
        auto out = decode(design, word);
        if (out && *out == message) ++successes;
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["trials"] = trials;
    j["errors_injected"] = errors;
    j["radius"] = radius;
    j["successes"] = successes;
    bool guaranteed = errors <= radius;
    j["guaranteed"] = guaranteed;
    emit(j, out_path);
    std::cerr << successes << "/" << trials << " recovered at t = " << errors
              << " (radius " << radius << ")\n";
    return (guaranteed && successes != trials) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon subcode designer for generator support "
                 "constraints"};
    app.require_subcommand(1);

    std::string in_path;
    std::string design_path;
    std::string instance_path;
    std::string out_path;
    std::string policy = "smallest-prime-power";
    std::uint64_t seed = 0;
    std::uint64_t forced_q = 0;
    int attempts = 64;
    int trials = 0;
    int errors = -1;
    bool exhaustive = false;

    auto* check = app.add_subcommand(
        "check", "Feasibility and the distance bound for an instance");
    check->add_option("instance", in_path, "instance JSON file")->required();
    check->add_option("--out", out_path, "write the JSON result here");

    auto* bound = app.add_subcommand(
        "bound", "Only the ell and distance-bound fields of check");
    bound->add_option("instance", in_path, "instance JSON file")->required();
    bound->add_option("--out", out_path, "write the JSON result here");

    auto* construct =
        app.add_subcommand("construct", "Build a code meeting the bound");
    construct->add_option("instance", in_path, "instance JSON file")
        ->required();
    construct->add_option("--out", out_path, "write the design file here");
    construct
        ->add_option("--policy", policy,
                     "smallest-prime, smallest-prime-power, or forced")
        ->check(CLI::IsMember(
            {"smallest-prime", "smallest-prime-power", "forced"}));
    construct->add_option("--q", forced_q, "field size (implies forced)");
    construct->add_option("--seed", seed, "search seed");
    construct->add_option("--attempts", attempts,
                          "random tuples before the systematic scan");

    auto* verify = app.add_subcommand("verify", "Re-check a design file");
    verify->add_option("design", design_path, "design JSON file")->required();
    verify->add_option("instance", instance_path, "instance JSON file")
        ->required();
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* t3 = app.add_subcommand(
        "t3-oracle", "Determinant criterion vs randomized identity oracle");
    t3->add_option("instance", in_path, "general instance JSON file");
    t3->add_flag("--exhaustive", exhaustive,
                 "sweep every general instance within the enumeration caps");
    t3->add_option("--trials", trials, "oracle evaluations per instance");
    t3->add_option("--seed", seed, "oracle seed");
    t3->add_option("--out", out_path, "write the JSON result here");

    auto* demo = app.add_subcommand("decode-demo",
                                    "Random error-correction trials");
    demo->add_option("design", design_path, "design JSON file")->required();
    demo->add_option("--errors", errors,
                     "symbols to corrupt per trial (default: the radius)");
    demo->add_option("--trials", trials, "number of trials");
    demo->add_option("--seed", seed, "trial seed");
    demo->add_option("--out", out_path, "write the JSON statistics here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Caps caps = caps_from_env();
        if (*check) return cmd_check(in_path, false, out_path, caps);
        if (*bound) return cmd_check(in_path, true, out_path, caps);
        if (*construct) {
            DesignOptions opts;
            opts.seed = seed;
            opts.random_attempts = attempts;
            if (forced_q != 0) policy = "forced";
            if (policy == "forced") {
                if (forced_q == 0)
                    throw std::invalid_argument(
                        "--policy forced needs --q");
                opts.policy = FieldPolicy::Forced;
                opts.forced_q = forced_q;
            } else if (policy == "smallest-prime") {
                opts.policy = FieldPolicy::SmallestPrime;
            } else {
                opts.policy = FieldPolicy::SmallestPrimePower;
            }
            return cmd_construct(in_path, opts, out_path, caps);
        }
        if (*verify)
            return cmd_verify(design_path, instance_path, out_path, caps);
        if (*t3) {
            if (!exhaustive && in_path.empty())
                throw std::invalid_argument(
                    "t3-oracle needs an instance file or --exhaustive");
            return cmd_t3_oracle(in_path, exhaustive,
                                 trials > 0 ? trials : 20, seed, out_path,
                                 caps);
        }
        if (*demo)
            return cmd_decode_demo(design_path, errors,
                                   trials > 0 ? trials : 100, seed, out_path);
    } catch (const CapExceededError& e) {
        std::cerr << "caps exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 4;
    } catch (const MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 5;
    } catch (const SearchBugError& e) {
        std::cerr << "search bug: " << e.what()
                  << "\nthis run was inside the guaranteed regime; please "
                     "file a defect report\n";
        return 10;
    } catch (const Json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
