#include "tracezero/paramsfile.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace tracezero {

ParamsFile params_from(const Subgroup& sub, const Line& generator_line) {
    if (generator_line.is_identity())
        throw InvalidLine("generator cannot be the identity");
    const Curve& cv = sub.curve();
    return ParamsFile{cv.base_field().modulus(),
                      cv.ext_field().binomial_c().value(),
                      cv.coeff_a().value(),
                      cv.coeff_b().value(),
                      sub.order(),
                      sub.eigenvalue(),
                      generator_line.alpha0().value(),
                      generator_line.alpha1().value()};
}

std::string params_to_text(const ParamsFile& pf) {
    std::ostringstream os;
    os << "q=" << pf.q.get_str() << "\n"
       << "c=" << pf.c.get_str() << "\n"
       << "A=" << pf.a.get_str() << "\n"
       << "B=" << pf.b.get_str() << "\n"
       << "p=" << pf.p.get_str() << "\n"
       << "s=" << pf.s.get_str() << "\n"
       << "gen_alpha0=" << pf.gen_alpha0.get_str() << "\n"
       << "gen_alpha1=" << pf.gen_alpha1.get_str() << "\n";
    return os.str();
}

ParamsFile params_parse(const std::string& text) {
    std::map<std::string, Int> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("malformed params line: " + line);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        try {
            kv[key] = Int(val);
        } catch (const std::invalid_argument&) {
            throw Error("malformed params value for " + key);
        }
    }
    auto need = [&](const char* k) {
        auto it = kv.find(k);
        if (it == kv.end()) throw Error(std::string("params file misses ") + k);
        return it->second;
    };
    return ParamsFile{need("q"), need("c"), need("A"), need("B"),
                      need("p"), need("s"), need("gen_alpha0"), need("gen_alpha1")};
}

SubgroupPtr params_load(const ParamsFile& pf, const Int& count_bound) {
    CurvePtr cv = Curve::create(pf.q, pf.c, pf.a, pf.b);
    Rng rng(fnv1a(params_to_text(pf)));
    SubgroupPtr sub = Subgroup::derive(cv, rng, count_bound);
    if (sub->order() != pf.p)
        throw Error("stored subgroup order disagrees with the curve");
    if (sub->eigenvalue() != mod_floor(pf.s, pf.p))
        throw Error("stored eigenvalue disagrees with the curve");
    if (mod_floor(pf.s * pf.s + pf.s + 1, pf.p) != 0)
        throw Error("stored eigenvalue fails s^2 + s + 1 = 0");
    Line gen = Line::of(cv->base_field().elem(pf.gen_alpha0),
                        cv->base_field().elem(pf.gen_alpha1));
    if (!validate_line(*sub, gen))
        throw Error("stored generator line is not a valid subgroup element");
    return sub;
}

Line params_generator_line(const ParamsFile& pf, const Subgroup& sub) {
    const Fq& f = sub.curve().base_field();
    return Line::of(f.elem(pf.gen_alpha0), f.elem(pf.gen_alpha1));
}

namespace {

std::string line_wire(const Line& l) {
    if (l.is_identity()) return "inf";
    return l.alpha0().value().get_str() + "," + l.alpha1().value().get_str();
}

Line line_unwire(const Fq& f, const std::string& s) {
    if (s == "inf") return Line::identity();
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error("malformed cached line " + s);
    return Line::of(f.elem(Int(s.substr(0, comma))), f.elem(Int(s.substr(comma + 1))));
}

}  // namespace

std::string exception_table_to_text(const LadderContext& ctx,
                                    const ExceptionSets& exc) {
    std::ostringstream os;
    os << "base=" << line_wire(ctx.base()) << "\n";
    os << "s_minus_1=" << line_wire(exc.h_s_minus_1) << "\n";
    for (const auto& [m, l] : exc.lines_m_one_minus_s)
        os << "m1s." << m.get_str() << "=" << line_wire(l) << "\n";
    for (const auto& [a, l] : exc.lines_s_plus_alpha)
        os << "salpha." << a.get_str() << "=" << line_wire(l) << "\n";
    return os.str();
}

ExceptionSets exception_table_parse(const LadderContext& ctx,
                                    const std::string& text) {
    const Subgroup& sub = ctx.params();
    const Fq& f = sub.curve().base_field();
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string row;
    while (std::getline(is, row)) {
        if (row.empty() || row[0] == '#') continue;
        auto eq = row.find('=');
        if (eq == std::string::npos) throw Error("malformed cache row: " + row);
        kv[row.substr(0, eq)] = row.substr(eq + 1);
    }
    auto fetch = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error("cache misses " + key);
        Line l = line_unwire(f, it->second);
        if (!validate_line(sub, l)) throw Error("cached line fails validation: " + key);
        return l;
    };
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    // the table is specific to the ladder base; refuse a mismatched cache
    auto base_it = kv.find("base");
    if (base_it == kv.end() || line_unwire(f, base_it->second) != ctx.base())
        throw Error("cache was built for a different base line");
    ExceptionSets fresh;  // residue sets are cheap and rebuilt, not cached
    std::tie(fresh.a1, fresh.a2) = reduction_a_sets(sub);
    fresh.roots = reduction_root_family(p);
    fresh.h_s_minus_1 = fetch("s_minus_1");
    std::set<Int> a12 = fresh.a1;
    a12.insert(fresh.a2.begin(), fresh.a2.end());
    for (const Int& m : a12)
        fresh.lines_m_one_minus_s.emplace(m, fetch("m1s." + m.get_str()));
    for (const Int& alpha : fresh.roots) {
        if (mod_floor(s + alpha, p) == 0) continue;
        fresh.lines_s_plus_alpha.emplace(alpha, fetch("salpha." + alpha.get_str()));
    }
    return fresh;
}

}  // namespace tracezero
