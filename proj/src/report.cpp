#include "cecoh/report.hpp"

#include <fmt/format.h>

#include <sstream>

namespace cecoh {

namespace {

std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

std::string long_list(const std::vector<long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

bool poincare_duality_holds(const std::vector<int>& betti) {
    std::size_t n = betti.size();
    for (std::size_t k = 0; k < n; ++k)
        if (betti[k] != betti[n - 1 - k])
            return false;
    return true;
}

std::string massey_line(const CohomologyRing& r, const MasseyFinding& f) {
    Form a1 = r.representative_of(r.class_of_basis(f.p1, f.i1));
    Form a2 = r.representative_of(r.class_of_basis(f.p2, f.i2));
    Form a3 = r.representative_of(r.class_of_basis(f.p3, f.i3));
    Form value = r.representative_of(f.product.value);
    return fmt::format("<{}, {}, {}> -> {}, indeterminacy {}, NONVANISHING", a1.str(), a2.str(),
                       a3.str(), value.str(), f.product.indeterminacy_dim);
}

FormalityVerdict decide_formality(const std::optional<Formality>& hasegawa, bool scan_ran,
                                  bool scan_found, std::string& reason) {
    if (hasegawa) {
        if (*hasegawa == Formality::formal) {
            reason = "nilpotent with d = 0 (torus criterion)";
            return FormalityVerdict::formal;
        }
        reason = "nilpotent with d != 0 (torus criterion)";
        return FormalityVerdict::non_formal;
    }
    if (scan_ran && scan_found) {
        reason = "nonvanishing triple Massey product";
        return FormalityVerdict::non_formal;
    }
    if (scan_ran) {
        reason = "no triple obstruction found; torus criterion not applicable";
        return FormalityVerdict::undetermined;
    }
    reason = "not examined";
    return FormalityVerdict::undetermined;
}

const char* formality_str(FormalityVerdict v) {
    switch (v) {
        case FormalityVerdict::formal:
            return "formal";
        case FormalityVerdict::non_formal:
            return "non-formal";
        default:
            return "undetermined";
    }
}

}  // namespace

AnalysisReport analyze(const AlgebraSpec& spec, const AnalyzeOptions& options) {
    AnalysisReport rep;
    rep.spec = spec;
    Cdga cdga = build_cdga(spec);
    LieAlgebra g = lie_from_cdga(cdga);
    rep.nilpotent = g.is_nilpotent();
    rep.unimodular = g.is_unimodular();

    CohomologyRing ring(cdga);
    rep.betti = ring.betti();
    rep.euler = ring.euler_characteristic();
    rep.poincare_duality = poincare_duality_holds(rep.betti);
    for (int k = 0; k <= cdga.dim(); ++k) {
        std::vector<std::string> printed;
        for (const Form& f : ring.representatives(k))
            printed.push_back(f.str());
        rep.representatives.push_back(std::move(printed));
    }

    if (spec.eta && !spec.omega)
        throw ValidationError("eta without omega: a cosymplectic spec needs both");
    if (spec.omega) {
        if (cdga.dim() % 2 == 0) {
            if (spec.eta)
                throw ValidationError("eta is meaningless on an even-dimensional algebra");
            SymplecticStructure s = validate_symplectic(cdga, *spec.omega);
            rep.structure = StructureKind::symplectic;
            rep.symplectic = symplectic_lefschetz(ring, s);
        } else {
            if (!spec.eta)
                throw ValidationError("odd-dimensional structure needs an eta line");
            CosymplecticStructure s = validate_cosymplectic(cdga, *spec.eta, *spec.omega);
            rep.structure = StructureKind::cosymplectic;
            rep.xi = s.xi.str();
            rep.theta = s.theta.str();
            rep.xi_equals_theta = s.xi == s.theta;
            SubcomplexCohomology sub = xi_invariant_cohomology(cdga, s);
            rep.invariant_betti = sub.invariant_betti();
            rep.basic_betti = sub.basic_betti();
            rep.splitting_holds = sub.splitting_applies && sub.splitting_holds;
            // L_xi eta and L_xi omega vanish for every validated structure
            // (both forms are closed and xi is their Reeb field), so the
            // invariant Lefschetz map is always defined here.
            rep.k_cosymplectic = k_cosymplectic_lefschetz(cdga, s, sub);
            rep.one_lefschetz = algebraic_1_lefschetz(ring, s.eta, s.omega).bijective;
        }
    }

    auto hasegawa = hasegawa_verdict(cdga);
    rep.massey_ran = options.run_massey_scan;
    if (options.run_massey_scan) {
        rep.massey_max_degree =
            options.massey_max_degree < 0 ? cdga.dim() - 1 : options.massey_max_degree;
        rep.massey_findings = massey_scan(ring, rep.massey_max_degree);
        for (const auto& f : rep.massey_findings)
            rep.massey_lines.push_back(massey_line(ring, f));
    }
    rep.formality = decide_formality(hasegawa, rep.massey_ran, !rep.massey_findings.empty(),
                                     rep.formality_reason);

    rep.model_level_caveat = !rep.nilpotent && !spec.flag_completely_solvable;
    if (spec.mapping_torus) {
        AlgebraSpec base = registry(spec.mapping_torus->base);
        Cdga base_cdga = build_cdga(base);
        CohomologyRing base_ring(base_cdga);
        AlgebraMap phi(base_cdga.dim(), spec.mapping_torus->substitution_images);
        InducedMap induced = base_ring.induced_map(phi);
        BettiVector base_betti(base_ring.betti().begin(), base_ring.betti().end());
        rep.manifold_betti = mapping_torus_betti(base_betti, AutomorphismAction{induced.on_degree});
    }
    return rep;
}

namespace {

void render_lefschetz(std::ostringstream& out, const LefschetzReport& lef) {
    for (const auto& m : lef.maps)
        out << fmt::format("L[{}]: rank {}, src {}, tgt {}, iso {}\n", m.k, m.rank, m.src,
                           m.tgt, yesno(m.bijective));
    out << "lefschetz_type = " << yesno(lef.lefschetz_type) << "\n";
    out << "lefschetz_property = " << yesno(lef.lefschetz_property) << "\n";
}

}  // namespace

std::string render_report(const AnalysisReport& rep, bool machine) {
    std::ostringstream out;
    auto comment = [&](const char* text) {
        if (!machine)
            out << "# " << text << "\n";
    };
    out << "name = " << (rep.spec.name.empty() ? "(unnamed)" : rep.spec.name) << "\n";
    out << "dim = " << rep.spec.dim << "\n";
    out << "definition = " << (rep.spec.uses_brackets ? "brackets" : "differentials") << "\n";
    out << "jacobi = ok\n";
    out << "nilpotent = " << yesno(rep.nilpotent) << "\n";
    out << "unimodular = " << yesno(rep.unimodular) << "\n";
    out << "completely_solvable = " << (rep.spec.flag_completely_solvable ? "yes (flag)" : "not flagged")
        << "\n";
    if (rep.model_level_caveat)
        out << "provenance = model-level\n";

    comment("cohomology of the model");
    out << "betti = " << int_list(rep.betti) << "\n";
    out << "euler = " << rep.euler << "\n";
    out << "poincare_duality = " << yesno(rep.poincare_duality) << "\n";
    for (std::size_t k = 0; k < rep.representatives.size(); ++k) {
        out << "H[" << k << "] =";
        const auto& reps = rep.representatives[k];
        if (reps.empty()) {
            out << " 0\n";
            continue;
        }
        for (std::size_t i = 0; i < reps.size(); ++i)
            out << (i ? ", " : " ") << reps[i];
        out << "\n";
    }
    if (rep.manifold_betti) {
        comment("Betti numbers routed through the mapping-torus formula");
        out << "manifold_betti = " << long_list(*rep.manifold_betti) << "\n";
    }

    switch (rep.structure) {
        case StructureKind::none:
            out << "structure = none\n";
            break;
        case StructureKind::symplectic:
            comment("symplectic structure and Lefschetz maps H^k -> H^{2n-k}");
            out << "structure = symplectic\n";
            out << "omega = " << rep.spec.omega->str() << "\n";
            out << "symplectic_valid = yes\n";
            render_lefschetz(out, *rep.symplectic);
            break;
        case StructureKind::cosymplectic:
            comment("cosymplectic structure, Reeb data and invariant cohomology");
            out << "structure = cosymplectic\n";
            out << "eta = " << rep.spec.eta->str() << "\n";
            out << "omega = " << rep.spec.omega->str() << "\n";
            out << "cosymplectic_valid = yes\n";
            out << "xi = " << *rep.xi << "\n";
            out << "theta = " << *rep.theta << "\n";
            out << "xi_equals_theta = " << yesno(rep.xi_equals_theta) << "\n";
            out << "invariant_betti = " << int_list(*rep.invariant_betti) << "\n";
            out << "basic_betti = " << int_list(*rep.basic_betti) << "\n";
            out << "splitting = " << (rep.splitting_holds ? "ok" : "mismatch") << "\n";
            if (rep.k_cosymplectic) {
                comment("invariant Lefschetz maps H^k_xi -> H^{2n+1-k}_xi");
                render_lefschetz(out, *rep.k_cosymplectic);
            } else {
                out << "invariant_lefschetz = unavailable (omega is not xi-invariant)\n";
            }
            out << "one_lefschetz = " << yesno(*rep.one_lefschetz) << "\n";
            break;
    }

    comment("triple Massey obstructions");
    if (rep.massey_ran) {
        out << "massey_scan_max_degree = " << rep.massey_max_degree << "\n";
        out << "massey_count = " << rep.massey_lines.size() << "\n";
        for (std::size_t i = 0; i < rep.massey_lines.size(); ++i)
            out << "massey[" << i << "] = " << rep.massey_lines[i] << "\n";
    } else {
        out << "massey_scan_max_degree = skipped\n";
    }
    out << "formality = " << formality_str(rep.formality) << "\n";
    out << "formality_reason = " << rep.formality_reason << "\n";
    return out.str();
}

namespace {

struct TableRow {
    std::string name;
    std::string formality;
    bool lefschetz_property = false;
    bool parity = false;
};

TableRow corpus_row(const std::string& name, bool cosymplectic) {
    AlgebraSpec spec = registry(name);
    AnalyzeOptions options;
    // Nilpotent entries get their formality verdict from the torus
    // criterion, so the (possibly large) scan is skipped for them here.
    Cdga cdga = build_cdga(spec);
    options.run_massey_scan = !is_nilpotent(cdga);
    AnalysisReport rep = analyze(spec, options);
    TableRow row;
    row.name = name;
    row.formality = formality_str(rep.formality);
    if (cosymplectic) {
        row.lefschetz_property = rep.k_cosymplectic && rep.k_cosymplectic->lefschetz_property;
        row.parity = rep.betti.size() > 1 && rep.betti[1] % 2 == 1;
    } else {
        row.lefschetz_property = rep.symplectic && rep.symplectic->lefschetz_property;
        bool even = true;
        for (std::size_t k = 1; k < rep.betti.size(); k += 2)
            if (rep.betti[k] % 2 != 0)
                even = false;
        row.parity = even;
    }
    return row;
}

}  // namespace

std::string render_corpus_table() {
    std::ostringstream out;
    out << "# corpus verdicts: formality | Lefschetz property | Betti parity\n";
    out << "symplectic entries\n";
    for (const char* name : {"torus_4", "g6_78", "e4", "kt_x_kt", "kt"}) {
        TableRow row = corpus_row(name, false);
        out << fmt::format("{}: formality = {}, lefschetz_property = {}, odd_betti_even = {}\n",
                           row.name, row.formality, yesno(row.lefschetz_property),
                           yesno(row.parity));
    }
    out << "cosymplectic entries (arbitrary b1)\n";
    for (const char* name : {"torus_5", "g6_78_x_s1", "kt_x_kt_x_s1", "e4_x_s1", "kt_x_s1"}) {
        TableRow row = corpus_row(name, true);
        out << fmt::format("{}: formality = {}, lefschetz_property = {}, b1_odd = {}\n",
                           row.name, row.formality, yesno(row.lefschetz_property),
                           yesno(row.parity));
    }
    out << "cosymplectic entries (b1 = 1)\n";
    out << "# none: the b1 = 1 product examples are built from simply connected\n";
    out << "# factors, which admit no degree-one generated model\n";
    return out.str();
}

}  // namespace cecoh
