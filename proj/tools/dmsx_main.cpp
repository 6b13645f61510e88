// Command line surface: validate / seed / algebra / string / qint / qhom /
// twist / verify. Exit codes: 0 ok, 2 usage, 3 validation failure,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dmsx/harness.hpp"
#include "dmsx/intersect.hpp"
#include "dmsx/jsonio.hpp"

using namespace dmsx;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SurfaceSpec loadSurfaceSpec(const std::string& arg) {
    if (arg.rfind("seed:", 0) == 0) {
        auto s = seed_surface(arg.substr(5));
        if (!s) throw std::runtime_error("unknown seed surface: " + arg);
        return *s;
    }
    if (!arg.empty() && arg.front() == '{') return surfaceFromJson(arg);
    return surfaceFromJson(slurp(arg));
}

// Curve argument forms:
//   dual:<arcname>                the dual arc
//   dual:<arcname>@[z,x]          shifted lift
//   bt:+a,-b:<curve>              braid twists applied left to right
//   a JSON object or a file path with the curve schema
Walk loadCurve(const Surface& s, const std::string& arg) {
    if (arg.rfind("bt:", 0) == 0) {
        auto rest = arg.substr(3);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad curve spec: " + arg);
        std::string wordSpec = rest.substr(0, colon);
        Walk base = loadCurve(s, rest.substr(colon + 1));
        TwistWord word;
        std::stringstream ss(wordSpec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            int eps = tok[0] == '-' ? -1 : 1;
            std::string name = (tok[0] == '+' || tok[0] == '-') ? tok.substr(1) : tok;
            int arc = s.arcIndex(name);
            if (arc < 0) throw std::runtime_error("UnknownArc: " + name);
            word.push_back({arc, eps});
        }
        // words act right to left as mapping classes: bt:+a,-b applies B_b^{-1} then B_a
        TwistWord rev(word.rbegin(), word.rend());
        return applyWord(s, rev, base);
    }
    if (arg.rfind("dual:", 0) == 0) {
        std::string rest = arg.substr(5);
        BiDegree shift{};
        auto at = rest.find('@');
        if (at != std::string::npos) {
            std::string sh = rest.substr(at + 1);
            rest = rest.substr(0, at);
            long long z, x;
            if (std::sscanf(sh.c_str(), "[%lld,%lld]", &z, &x) != 2)
                throw std::runtime_error("bad shift spec: " + sh);
            shift = BiDegree{z, x};
        }
        int arc = s.arcIndex(rest);
        if (arc < 0) throw std::runtime_error("UnknownArc: " + rest);
        return dualArc(s, arc).shifted(shift);
    }
    std::string text = (!arg.empty() && arg.front() == '{') ? arg : slurp(arg);
    return Walk(s, curveFromJson(s, text)).normalized();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded decorated marked surface toolkit"};
    app.require_subcommand(1);
    int jobs = 1;
    std::string format = "text";
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    std::string surfaceArg, curveA, curveB, seedName, alphaArg;
    int depth = 2;
    unsigned rngSeed = 1;
    size_t samples = 100;
    bool includeSelf = false;

    auto* cValidate = app.add_subcommand("validate", "validate a surface spec");
    cValidate->add_option("surface", surfaceArg)->required();

    auto* cSeed = app.add_subcommand("seed", "print a seed surface");
    cSeed->add_option("name", seedName)->required();

    auto* cAlgebra = app.add_subcommand("algebra", "print the quiver, degrees, differential");
    cAlgebra->add_option("surface", surfaceArg)->required();

    auto* cString = app.add_subcommand("string", "print the string object of a curve");
    cString->add_option("surface", surfaceArg)->required();
    cString->add_option("curve", curveA)->required();

    auto* cQint = app.add_subcommand("qint", "graded q-intersection of two curves");
    cQint->add_option("surface", surfaceArg)->required();
    cQint->add_option("curveA", curveA)->required();
    cQint->add_option("curveB", curveB)->required();
    cQint->add_flag("--include-self", includeSelf, "count self-intersections of curveA too");

    auto* cQhom = app.add_subcommand("qhom", "q-dimension of the morphism space");
    cQhom->add_option("surface", surfaceArg)->required();
    cQhom->add_option("curveA", curveA)->required();
    cQhom->add_option("curveB", curveB)->required();

    auto* cTwist = app.add_subcommand("twist", "compare the spherical and braid twists");
    cTwist->add_option("surface", surfaceArg)->required();
    cTwist->add_option("alpha", alphaArg, "twisting closed arc: dual:<arc> or bt:<word>:dual:<arc>")
        ->required();
    cTwist->add_option("curve", curveB)->required();

    auto* cVerify = app.add_subcommand("verify", "verification campaigns");
    cVerify->add_option("surface", surfaceArg)->required();
    cVerify->add_option("--depth", depth, "orbit depth");
    cVerify->add_option("--seed", rngSeed, "sampling seed");
    cVerify->add_option("--samples", samples, "twist-compatibility samples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cSeed) {
            auto s = seed_surface(seedName);
            if (!s) {
                std::cerr << "unknown seed: " << seedName << "\n";
                return 2;
            }
            std::cout << surfaceToJson(*s);
            return 0;
        }
        if (*cValidate) {
            SurfaceSpec spec = loadSurfaceSpec(surfaceArg);
            ValidationReport rep = Surface::validate(spec);
            std::cout << rep.str() << "\n";
            return rep.ok ? 0 : 3;
        }
        SurfaceSpec spec = loadSurfaceSpec(surfaceArg);
        ValidationReport vrep = Surface::validate(spec);
        if (!vrep.ok) {
            std::cerr << vrep.str() << "\n";
            return 3;
        }
        Surface surf(spec);
        if (*cAlgebra) {
            QuiverDGA q(surf);
            std::cout << q.describe();
            return 0;
        }
        QuiverDGA quiver(surf);
        ExtAlgebra ext(quiver);
        StringCat cat(ext);
        if (*cString) {
            Walk c = loadCurve(surf, curveA);
            std::cout << cat.describe(cat.stringOfCurve(c.normalized()));
            return 0;
        }
        if (*cQint) {
            Walk a = loadCurve(surf, curveA).normalized();
            Walk b = loadCurve(surf, curveB).normalized();
            CrossingTable tab = crossings(surf, a, b, includeSelf);
            std::cout << tab.qint.str() << "\n";
            for (const auto& r : tab.records)
                std::cout << (r.atDecoration ? "  decoration" : "  interior") << " crossing"
                          << (r.polygon >= 0 ? " in polygon " + std::to_string(r.polygon) : "")
                          << ", bi-index " << renderExponent(r.ind) << "\n";
            return 0;
        }
        if (*cQhom) {
            Walk a = loadCurve(surf, curveA).normalized();
            Walk b = loadCurve(surf, curveB).normalized();
            std::cout << cat.qdimHom(cat.stringOfCurve(a), cat.stringOfCurve(b)).str() << "\n";
            return 0;
        }
        if (*cTwist) {
            // alpha must be dual:<arc> or bt:<word>:dual:<arc>
            TwistWord word;
            std::string rest = alphaArg;
            if (rest.rfind("bt:", 0) == 0) {
                auto body = rest.substr(3);
                auto colon = body.find(':');
                std::string wordSpec = body.substr(0, colon);
                rest = body.substr(colon + 1);
                std::stringstream ss(wordSpec);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok.empty()) continue;
                    int eps = tok[0] == '-' ? -1 : 1;
                    std::string name = (tok[0] == '+' || tok[0] == '-') ? tok.substr(1) : tok;
                    word.push_back({surf.arcIndex(name), eps});
                }
            }
            if (rest.rfind("dual:", 0) != 0) {
                std::cerr << "twist: alpha must be dual:<arc> or bt:<word>:dual:<arc>\n";
                return 2;
            }
            int seedArc = surf.arcIndex(rest.substr(5));
            if (seedArc < 0) {
                std::cerr << "unknown arc for alpha\n";
                return 2;
            }
            Walk alpha = applyWord(surf, word, dualArc(surf, seedArc));
            Walk beta = loadCurve(surf, curveB).normalized();
            Walk image = braidTwist(surf, word, seedArc, 1, beta);
            TwistedComplex lhs = cat.sphericalTwist(cat.stringOfCurve(alpha), cat.stringOfCurve(beta));
            TwistedComplex rhs = cat.stringOfCurve(image);
            auto fl = cat.fingerprint(lhs), fr = cat.fingerprint(rhs);
            std::cout << "twist fingerprint:";
            for (size_t i = 0; i < fl.size(); ++i) std::cout << " " << fl[i].str();
            std::cout << "\ncurve fingerprint:";
            for (size_t i = 0; i < fr.size(); ++i) std::cout << " " << fr[i].str();
            std::vector<TwistedComplex> probes;
            for (int a = 0; a < surf.arcCount(); ++a) probes.push_back(cat.simple(a));
            bool match = cat.probeEqual(lhs, rhs, probes);
            std::cout << "\nverdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
            return match ? 0 : 4;
        }
        if (*cVerify) {
            OrbitSpec orbit{depth, rngSeed, 20000};
            VerificationReport rep = verifyMainTheorem(surf, orbit, jobs, 50, true);
            rep.merge(verifyTwistCompat(surf, orbit, samples, jobs));
            if (format == "json")
                std::cout << rep.json();
            else
                std::cout << rep.str(true);
            return rep.ok() ? 0 : 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string msg = e.what();
        if (msg.find("invalid surface") != std::string::npos) return 3;
        return 2;
    }
    return 2;
}
