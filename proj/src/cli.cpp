#include "hulltop/cli.hpp"

#include <ostream>
#include <sstream>

#include "hulltop/boolfn.hpp"
#include "hulltop/error.hpp"
#include "hulltop/structure_file.hpp"
#include "hulltop/synth.hpp"

namespace hulltop::cli {

namespace {

void print_certificates(std::ostream& out, const HullStructure& h) {
    for (const auto& cert : h.certificates()) {
        out << "    " << capability_name(cert.cap) << ": " << (cert.holds ? "holds" : "fails") << " ("
            << cert_tag_name(cert.tag);
        if (cert.tag == CertTag::sampled)
            out << ", seed=" << cert.seed << ", samples=" << cert.samples;
        out << ")";
        if (!cert.holds) out << " witness: " << cert.witness;
        out << "\n";
    }
}

} // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    StructureFile sf;
    try {
        sf = load_structure_file(path);
    } catch (const Error& e) {
        if (e.code() == Err::ParseError) {
            err << "parse error: " << e.what() << "\n";
            return kExitParse;
        }
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Falsification& e) {
        err << "falsification during validation: " << e.what() << "\n";
        return kExitFalsified;
    }

    for (const auto& [type, name] : sf.declared) {
        if (type == "monoid") {
            const auto& m = sf.monoids.at(name);
            out << "monoid " << name << ": size=" << m->size() << " zero=" << m->zero()
                << (m->is_group() ? " group" : "") << (m->has_order() ? " ordered" : "")
                << (m->has_order() && m->op_monotone() ? " monotone" : "") << " valid\n";
        } else if (type == "hull") {
            const auto& h = sf.hulls.at(name);
            out << "hull " << name << " (" << h->name() << "): valid\n";
            print_certificates(out, *h);
        } else if (type == "filter") {
            const auto& f = sf.filters.at(name);
            out << "filter " << name << ": " << f.base().size() << " base sets, valid\n";
        } else if (type == "string") {
            const auto& s = sf.strings.at(name);
            out << "string " << name << ": prefix length " << s.prefix_length() << ", valid\n";
        } else if (type == "pnorm") {
            const auto& p = sf.pnorms.at(name);
            out << "pnorm " << name << ": subadditive, kernel size " << p.kernel().count() << "\n";
        } else if (type == "polytope") {
            const auto& p = sf.polytopes.at(name);
            out << "polytope " << name << ": dim=" << p.dim() << " vertices=" << p.vertices().size()
                << (p.balanced() ? " balanced" : " not-balanced") << "\n";
        }
    }
    for (const auto& note : sf.notes) out << "note: " << note << "\n";
    return kExitOk;
}

int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
    StructureFile sf;
    try {
        sf = load_structure_file(args.path);
    } catch (const Error& e) {
        if (e.code() == Err::ParseError) {
            err << "parse error: " << e.what() << "\n";
            return kExitParse;
        }
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        auto sit = sf.strings.find(args.string_name);
        if (sit == sf.strings.end())
            throw Error(Err::MissingContext, "no string named " + args.string_name);
        const QString& s = sit->second;
        const MonoidPtr& m = s.monoid();
        // A hull argument is either a declared name or a builtin kind to be
        // constructed on the string's monoid.
        auto resolve = [&](const std::string& name) {
            auto it = sf.hulls.find(name);
            if (it != sf.hulls.end()) return it->second;
            auto h = make_builtin(name, m);
            certify_one_algebraic(*h);
            hull_capabilities(m, *h);
            return h;
        };
        const HullPtr q = resolve(args.hull_name);
        const HullPtr r = resolve(args.basic_name);

        PseudoNorm rho = [&] {
            if (q->certified(Capability::additive)) return synth_additive(m, *q, s, args.grid);
            if (q->certified(Capability::translation_invariant))
                return synth_translation(m, q, s, args.grid);
            throw Error(Err::NotAdditive,
                        args.hull_name + " is neither additive nor translation-invariant");
        }();
        PseudoNorm reg = regularize_pnorm(m, r, rho);

        // Exhaustive post-checks before the trailer: lower continuity
        // against both structures and the sandwich at every level.
        auto qr = intersect(q, r);
        auto lc = is_lower_continuous(*qr, reg.graded());
        if (!lc)
            throw Falsification("LowerContinuityViolation", "pipeline output not lower continuous",
                                args.path);
        unsigned n_eff = std::max<unsigned>({args.grid, static_cast<unsigned>(s.prefix_length()), 1});
        for (unsigned n = 0; n <= n_eff; ++n)
            if (!reg.strict_sublevel(Dyadic::pow2(n)).subset_of(rho.sublevel(Dyadic::pow2(n))))
                throw Falsification("SandwichViolation", "regularization broke the open balls",
                                    args.path);
        reg.print_table(out);
        out << "# sandwich-verified\n";
        return kExitOk;
    } catch (const Error& e) {
        if (e.code() == Err::ParseError) {
            err << "parse error: " << e.what() << "\n";
            return kExitParse;
        }
        err << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Falsification& e) {
        err << "falsification: " << e.what() << "\n";
        return kExitFalsified;
    }
}

int cmd_suite(const SuiteArgs& args, std::ostream& out, std::ostream& err) {
    if (!args.replay.empty()) {
        bool reproduced = suites::replay_witness(args.replay);
        out << (reproduced ? "reproduced" : "not-reproduced") << " " << args.replay << "\n";
        return reproduced ? kExitFalsified : kExitOk;
    }
    try {
        auto outcome = suites::run_all(args.options);
        for (const auto& line : outcome.lines) {
            out << (line.failures ? "FAIL" : "PASS") << " " << line.name
                << " instances=" << line.instances << " failures=" << line.failures;
            if (!line.note.empty()) out << " (" << line.note << ")";
            out << "\n";
        }
        for (const auto& w : outcome.witness_files) err << "witness: " << w << "\n";
        return outcome.falsified ? kExitFalsified : kExitOk;
    } catch (const Error& e) {
        err << "suite error: " << e.what() << "\n";
        return e.code() == Err::ParseError ? kExitParse : kExitPrecondition;
    }
}

} // namespace hulltop::cli
