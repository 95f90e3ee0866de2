// Command-line front end: parameter search, compression, scalar
// multiplication, a key-agreement demo, known-answer vectors, differential
// fuzzing against the full-coordinate oracle, and benchmarking.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tracezero/frobred.hpp"
#include "tracezero/kat.hpp"
#include "tracezero/paramsfile.hpp"
#include "tracezero/refcurves.hpp"

using namespace tracezero;

namespace {

constexpr int kExitSearch = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitInternal = 4;

std::uint64_t pick_seed(const CLI::Option* opt, std::uint64_t seed) {
    if (opt->count()) return seed;
    if (const char* env = std::getenv("TRACEZERO_SEED"))
        return std::strtoull(env, nullptr, 10);
    return std::random_device{}();
}

std::string line_text(const Line& l) {
    if (l.is_identity()) return "inf";
    return l.alpha0().value().get_str() + "," + l.alpha1().value().get_str();
}

std::vector<Int> split_ints(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.emplace_back(item);
    return out;
}

Line parse_line(const Subgroup& sub, const std::string& s) {
    if (s == "inf") return Line::identity();
    auto v = split_ints(s);
    if (v.size() != 2) throw Error("line format is a0,a1 or inf");
    const Fq& f = sub.curve().base_field();
    return Line::of(f.elem(v[0]), f.elem(v[1]));
}

Point parse_point(const Subgroup& sub, const std::string& s) {
    if (s == "inf") return Point::infinity();
    auto v = split_ints(s);
    if (v.size() != 6) throw Error("point format is x0,x1,x2,y0,y1,y2 or inf");
    const Fq3& e = sub.curve().ext_field();
    return Point::affine(e.elem(v[0], v[1], v[2]), e.elem(v[3], v[4], v[5]));
}

std::string point_text(const Point& p) {
    if (p.is_infinity()) return "inf";
    std::ostringstream os;
    os << p.x().c0().value() << "," << p.x().c1().value() << ","
       << p.x().c2().value() << "," << p.y().c0().value() << ","
       << p.y().c1().value() << "," << p.y().c2().value();
    return os.str();
}

SubgroupPtr load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open params file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return params_load(params_parse(buf.str()));
}

Line load_generator_line(const std::string& path, const Subgroup& sub) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return params_generator_line(params_parse(buf.str()), sub);
}

struct DiffOutcome {
    long trials = 0;
    long mismatches = 0;
    CallStats ladder, reduced;
};

DiffOutcome difftest_on(SubgroupPtr sub, long trials, Rng& seeder, int threads) {
    Line base = compress(*sub, sub->generator());
    LadderContext ctx(sub, base);
    ExceptionSets exc = exception_sets(ctx);
    std::atomic<long> mism{0};
    std::atomic<long> calls1{0}, calls2{0};
    std::vector<std::uint64_t> seeds;
    for (int t = 0; t < threads; ++t) seeds.push_back(seeder.u64());
    auto worker = [&](int idx, long n) {
        Rng rng(seeds[idx]);
        CallStats s1, s2;
        for (long i = 0; i < n; ++i) {
            Int m = rng.below(sub->order());
            Line orc = m == 0 ? Line::identity()
                              : compress(*sub, oracle_scalar_mul(sub->curve(), m,
                                                                 sub->generator()));
            Line a1 = m == 0 ? Line::identity() : algorithm1(ctx, m, &s1).first;
            Line a2 = algorithm2(ctx, exc, m, &s2);
            if (a1 != orc || a2 != orc) ++mism;
        }
        calls1 += s1.subalg_calls;
        calls2 += s2.subalg_calls;
    };
    std::vector<std::thread> pool;
    long per = trials / threads, extra = trials % threads;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker, t, per + (t < extra ? 1 : 0));
    for (auto& th : pool) th.join();
    DiffOutcome out;
    out.trials = trials;
    out.mismatches = mism.load();
    out.ladder.subalg_calls = calls1.load();
    out.reduced.subalg_calls = calls2.load();
    return out;
}

int cmd_params(const std::string& out_path, Int q, Int qmin, Int qmax, Int A,
               Int B, Int c, bool have_ab, bool have_c, std::uint64_t seed) {
    Rng rng(seed);
    SubgroupPtr sub;
    try {
        if (have_ab) {
            CurvePtr cv = have_c ? Curve::create(q, c, A, B) : Curve::create(q, A, B);
            sub = Subgroup::derive(cv, rng);
        } else if (q != 0) {
            sub = search_subgroup(q, rng);
        } else {
            sub = search_subgroup(qmin, qmax, rng);
        }
    } catch (const Error& e) {
        std::cerr << "search failed: " << e.what() << "\n";
        return kExitSearch;
    }
    if (sub->order() < 10000)
        std::cerr << "warning: subgroup order " << sub->order().get_str()
                  << " is tiny; the special-case machinery assumes a large "
                     "prime order\n";
    std::string text = params_to_text(params_from(*sub, compress(*sub, sub->generator())));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scalar multiplication in degree-3 trace-zero subgroups, "
                 "compressed line coordinates"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;

    // params
    auto* sc_params = app.add_subcommand("params", "derive or search curve parameters");
    std::string out_path;
    Int q = 0, qmin = 200, qmax = 2000, A = 0, B = 0, c = 0;
    std::string qs, qmins = "200", qmaxs = "2000", As, Bs, cs;
    bool range_search = false;
    sc_params->add_option("--q", qs, "base field size (prime, 1 mod 3)");
    sc_params->add_flag("--search", range_search, "search a q range instead");
    sc_params->add_option("--qmin", qmins, "search range lower bound");
    sc_params->add_option("--qmax", qmaxs, "search range upper bound");
    sc_params->add_option("--A", As, "curve coefficient A (with --B)");
    sc_params->add_option("--B", Bs, "curve coefficient B (with --A)");
    sc_params->add_option("--c", cs, "extension constant (non-cube)");
    sc_params->add_option("-o,--out", out_path, "write the params file here");
    auto* params_seed = sc_params->add_option("--seed", seed, "search seed");

    // shared options for the point/line commands
    std::string params_path, line_arg, point_arg, scalar_arg, algo = "frobenius";
    auto add_params_opt = [&](CLI::App* sc) {
        sc->add_option("--params", params_path, "params file")->required();
    };

    auto* sc_compress = app.add_subcommand("compress", "compress a full point");
    add_params_opt(sc_compress);
    sc_compress->add_option("--point", point_arg, "x0,x1,x2,y0,y1,y2")->required();

    auto* sc_decompress = app.add_subcommand("decompress", "recover a point");
    add_params_opt(sc_decompress);
    sc_decompress->add_option("--line", line_arg, "a0,a1 or inf")->required();

    auto* sc_mul = app.add_subcommand("mul", "scalar multiplication on a line");
    add_params_opt(sc_mul);
    std::string cache_path;
    sc_mul->add_option("--line", line_arg, "a0,a1 or inf")->required();
    sc_mul->add_option("--scalar", scalar_arg, "nonnegative integer")->required();
    sc_mul->add_option("--algo", algo, "ladder | frobenius | oracle")
        ->check(CLI::IsMember({"ladder", "frobenius", "oracle"}));
    sc_mul->add_option("--cache", cache_path,
                       "precomputed-table file (loaded if present, else written)");

    auto* sc_dh = app.add_subcommand("dh", "two-party key agreement demo");
    add_params_opt(sc_dh);
    auto* dh_seed = sc_dh->add_option("--seed", seed, "demo seed");

    auto* sc_selftest = app.add_subcommand("selftest", "run the built-in vectors");

    auto* sc_diff = app.add_subcommand("difftest", "differential fuzzing vs the oracle");
    long trials = 200, random_curves = 0;
    sc_diff->add_option("--params", params_path, "params file");
    sc_diff->add_option("--random-curves", random_curves, "fresh curves to search");
    sc_diff->add_option("--trials", trials, "trials per curve");
    sc_diff->add_option("--qmin", qmins, "search range lower bound");
    sc_diff->add_option("--qmax", qmaxs, "search range upper bound");
    auto* diff_seed = sc_diff->add_option("--seed", seed, "fuzzing seed");

    auto* sc_bench = app.add_subcommand("bench", "timings and operation counts");
    add_params_opt(sc_bench);
    sc_bench->add_option("--trials", trials, "scalars to time");
    auto* bench_seed = sc_bench->add_option("--seed", seed, "scalar seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_params->parsed()) {
            if (!qs.empty()) q = Int(qs);
            if (!qmins.empty()) qmin = Int(qmins);
            if (!qmaxs.empty()) qmax = Int(qmaxs);
            bool have_ab = !As.empty() && !Bs.empty();
            if (have_ab) {
                A = Int(As);
                B = Int(Bs);
                if (q == 0) throw Error("--A/--B need --q");
            }
            if (q == 0 && !range_search)
                throw Error("give --q or --search with --qmin/--qmax");
            if (!cs.empty()) c = Int(cs);
            return cmd_params(out_path, q, qmin, qmax, A, B, c, have_ab,
                              !cs.empty(), pick_seed(params_seed, seed));
        }

        if (sc_compress->parsed()) {
            SubgroupPtr sub = load_params_file(params_path);
            Point p = parse_point(*sub, point_arg);
            if (!on_curve(sub->curve(), p)) {
                std::cerr << "point is not on the curve\n";
                return kExitBadInput;
            }
            std::cout << line_text(compress(*sub, p)) << "\n";
            return 0;
        }

        if (sc_decompress->parsed()) {
            SubgroupPtr sub = load_params_file(params_path);
            Point p = decompress(*sub, parse_line(*sub, line_arg));
            std::cout << point_text(p) << "\n";
            return 0;
        }

        if (sc_mul->parsed()) {
            SubgroupPtr sub = load_params_file(params_path);
            Line l = parse_line(*sub, line_arg);
            if (!validate_line(*sub, l)) {
                std::cerr << "input line is not a valid subgroup element\n";
                return kExitBadInput;
            }
            Int m = mod_floor(Int(scalar_arg), sub->order());
            Line out;
            if (algo == "oracle") {
                Point p = decompress(*sub, l);
                out = compress(*sub, oracle_scalar_mul(sub->curve(), m, p));
            } else if (l.is_identity() || m == 0) {
                out = Line::identity();
            } else if (algo == "ladder") {
                LadderContext ctx(sub, l);
                out = algorithm1(ctx, m).first;
            } else {
                LadderContext ctx(sub, l);
                ExceptionSets exc;
                bool loaded = false;
                if (!cache_path.empty()) {
                    std::ifstream in(cache_path);
                    if (in) {
                        std::stringstream buf;
                        buf << in.rdbuf();
                        try {
                            exc = exception_table_parse(ctx, buf.str());
                            loaded = true;
                        } catch (const Error& e) {
                            std::cerr << "ignoring stale cache: " << e.what() << "\n";
                        }
                    }
                }
                if (!loaded) {
                    exc = exception_sets(ctx);
                    if (!cache_path.empty()) {
                        std::ofstream cache_out(cache_path);
                        cache_out << exception_table_to_text(ctx, exc);
                    }
                }
                out = algorithm2(ctx, exc, m);
            }
            std::cout << line_text(out) << "\n";
            return 0;
        }

        if (sc_dh->parsed()) {
            SubgroupPtr sub = load_params_file(params_path);
            Line gen = load_generator_line(params_path, *sub);
            Rng rng(pick_seed(dh_seed, seed));
            Int a = 1 + rng.below(sub->order() - 1);
            Int b = 1 + rng.below(sub->order() - 1);
            LadderContext ctx(sub, gen);
            ExceptionSets exc = exception_sets(ctx);
            Line to_b = algorithm2(ctx, exc, a);  // h_{aG}
            Line to_a = algorithm2(ctx, exc, b);  // h_{bG}
            LadderContext ctx_a(sub, to_a);
            Line shared_a = algorithm2(ctx_a, exception_sets(ctx_a), a);
            LadderContext ctx_b(sub, to_b);
            Line shared_b = algorithm2(ctx_b, exception_sets(ctx_b), b);
            std::cout << "A sends " << line_text(to_b) << "\n"
                      << "B sends " << line_text(to_a) << "\n"
                      << "shared  " << line_text(shared_a) << "\n";
            if (shared_a != shared_b) {
                std::cerr << "key agreement mismatch\n";
                return kExitInternal;
            }
            return 0;
        }

        if (sc_selftest->parsed()) {
            int fails = 0;
            for (const auto& chk : kat::run_vectors()) {
                std::cout << (chk.pass ? "ok   " : "FAIL ") << chk.name;
                if (!chk.pass) std::cout << "  [" << chk.detail << "]";
                std::cout << "\n";
                if (!chk.pass && !fails) std::cerr << "first failing vector: " << chk.name << "\n";
                fails += !chk.pass;
            }
            std::cout << (fails ? "selftest FAILED\n" : "selftest passed\n");
            return fails ? 1 : 0;
        }

        if (sc_diff->parsed()) {
            Rng seeder(pick_seed(diff_seed, seed));
            int threads = std::max(1u, std::thread::hardware_concurrency());
            long total = 0, bad = 0;
            auto run_one = [&](SubgroupPtr sub) {
                auto out = difftest_on(sub, trials, seeder, threads);
                total += out.trials;
                bad += out.mismatches;
                std::cout << "q=" << sub->curve().base_field().modulus().get_str()
                          << " p=" << sub->order().get_str() << " trials=" << out.trials
                          << " mismatches=" << out.mismatches
                          << " ladder-calls=" << out.ladder.subalg_calls
                          << " reduced-calls=" << out.reduced.subalg_calls << "\n";
            };
            if (!params_path.empty()) {
                run_one(load_params_file(params_path));
            } else {
                if (random_curves <= 0) random_curves = 1;
                for (long i = 0; i < random_curves; ++i)
                    run_one(search_subgroup(Int(qmins), Int(qmaxs), seeder));
            }
            std::cout << "total " << total << " trials, " << bad << " mismatches\n";
            return bad ? kExitInternal : 0;
        }

        if (sc_bench->parsed()) {
            SubgroupPtr sub = load_params_file(params_path);
            Line gen = load_generator_line(params_path, *sub);
            LadderContext ctx(sub, gen);
            ExceptionSets exc = exception_sets(ctx);
            Rng rng(pick_seed(bench_seed, seed));
            std::vector<Int> ms;
            for (long i = 0; i < trials; ++i) ms.push_back(1 + rng.below(sub->order() - 1));
            using clock = std::chrono::steady_clock;
            CallStats s1, s2;
            reset_field_mult_count();
            auto t0 = clock::now();
            for (const Int& m : ms) algorithm1(ctx, m, &s1);
            auto t1 = clock::now();
            long mults1 = field_mult_count();
            reset_field_mult_count();
            for (const Int& m : ms) algorithm2(ctx, exc, m, &s2);
            auto t2 = clock::now();
            long mults2 = field_mult_count();
            reset_field_mult_count();
            Point g = decompress(*sub, gen);
            for (const Int& m : ms) oracle_scalar_mul(sub->curve(), m, g);
            auto t3 = clock::now();
            long mults3 = field_mult_count();
            auto ms_of = [](auto d) {
                return std::chrono::duration_cast<std::chrono::microseconds>(d).count() / 1000.0;
            };
            std::cout << "trials: " << trials << "\n"
                      << "ladder:    " << ms_of(t1 - t0) << " ms, "
                      << s1.subalg_calls << " subalg calls, " << s1.doublings
                      << " doublings, " << mults1 << " field mults\n"
                      << "frobenius: " << ms_of(t2 - t1) << " ms, "
                      << s2.subalg_calls << " subalg calls, " << s2.doublings
                      << " doublings, " << mults2 << " field mults\n"
                      << "oracle:    " << ms_of(t3 - t2) << " ms, " << mults3
                      << " field mults\n";
            return 0;
        }
    } catch (const InvalidLine& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const NoCandidate& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
