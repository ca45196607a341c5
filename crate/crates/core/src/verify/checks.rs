//! The check behind each claim id.

use super::claims::{Claim, Needs};
use super::{Broken, Check, Ctx, Verdict};
use crate::automorphisms::recovery::{antifixed_set, split_sets, splittings, whole_quotient};
use crate::automorphisms::{
    automorphisms, d_set, decompose, enumerate_aut, f_hat_ab, f_presentation, factor_automorphism,
    filter_automorphism, find_isomorphism, fixed_set, inner_group, is_automorphism, is_inner,
    is_isomorphism, localize_closure, omega, phi_from_boolean_filter, recover, subgroup_report,
    Structure,
};
use crate::constructions::{
    build_i, face_poset, gfilter_from_presentation, implication_subalgebra, interval_algebra,
    presentation_check, ImplicationAlgebra, PairAlgebra,
};
use crate::corpus;
use crate::cubic::axioms::{caret_total, check_cubic_axioms, check_mr_axiom};
use crate::cubic::localization::{localize, members_by_delta};
use crate::cubic::subalgebra::{self, is_upward_closed};
use crate::filters::{
    all_filters, boolean_filter_sum, delta_filter, generated_subalgebra, impl_elem, impl_join,
    impl_sup, is_boolean, is_f_boolean, is_gfilter, Filter,
};
use crate::functors::hom::{compose, identity};
use crate::functors::inclusion::{
    collapse_counterexample, inclusion_collapse, restriction_commutes, upward_closed_subalgebras,
};
use crate::functors::natural::{
    check_iota, e_square, eta_square, iota_square, kappa_iota_identity, kappa_report,
};
use crate::functors::quotient::{functor_c_hom, quotient_c};
use crate::limits::Limits;
use crate::report::WitnessPolicy;
use crate::set::ElementSet;

fn fail(witness: Vec<usize>, note: impl Into<String>) -> Check {
    Ok(Verdict::Fail(witness, note.into()))
}

fn pass() -> Check {
    Ok(Verdict::Pass)
}

fn perm(p: &[usize]) -> String {
    format!("{p:?}")
}

pub(crate) fn run_algebra(claim: &Claim, ctx: &Ctx) -> Check {
    if claim.id != "ax:cubic" && !ctx.is_cubic() {
        return Ok(Verdict::NotApplicable);
    }
    let applicable = match claim.needs {
        Needs::Nothing | Needs::Cubic => true,
        Needs::Mr => ctx.is_mr(),
        Needs::GFilter => ctx.is_mr() && !ctx.gfilters().is_empty(),
    };
    if !applicable {
        return Ok(Verdict::NotApplicable);
    }
    match claim.id {
        "ax:cubic" => ax_cubic(ctx),
        "lem:caret" => lem_caret(ctx),
        "lem:kl" => lem_kl(ctx),
        "lem:intComp" => lem_int_comp(ctx),
        "lem:fab" => lem_fab(ctx),
        "thm:present" => thm_present(ctx),
        "thm:localization" => thm_localization(ctx),
        "cor:filterAuts" => cor_filter_auts(ctx),
        "thm:factoring" => thm_factoring(ctx),
        "lem:fixed" => lem_fixed(ctx),
        "lem:DeltaFixed" => lem_delta_fixed(ctx),
        "lem:twoThreeSame" => lem_two_three_same(ctx),
        "thm:lots" => thm_lots(ctx),
        "thm:Boolean" => thm_boolean(ctx),
        "lem:localBoolean" => lem_local_boolean(ctx),
        "lem:localPrincBool" => lem_local_princ_bool(ctx),
        "thm:kerFilter" => thm_ker_filter(ctx),
        "thm:TwoTorsion" => thm_two_torsion(ctx),
        "lem:upper" => lem_upper(ctx),
        "rem:notInM" => rem_not_in_m(ctx),
        "eq:oneA" => eq_one_a(ctx),
        "lem:somethingIn" => lem_something_in(ctx),
        "lem:DeltaOne" => lem_delta_one(ctx),
        "cor:intersect" => cor_intersect(ctx),
        "cor:metsExist" => cor_mets_exist(ctx),
        "lem:repsMD" => lem_reps_md(ctx),
        "lem:gotIt" => lem_got_it(ctx),
        "lem:BoolCC" => lem_bool_cc(ctx),
        "thm:MPhiIsGood" => thm_mphi_is_good(ctx),
        "thm:recoveryII" => thm_recovery_ii(ctx),
        "thm:isoGroups" => thm_iso_groups(ctx),
        "thm:isoIota" => thm_iso_iota(ctx),
        "nat:e" => nat_e(ctx),
        "nat:eta" => nat_eta(ctx),
        "nat:iota" => nat_iota(ctx),
        "nat:kappa" => nat_kappa(ctx),
        "rem:filterAlg" => rem_filter_alg(ctx),
        "thm:incl" => thm_incl(ctx),
        "cor:restrict" => cor_restrict(ctx),
        "lem:collapseDewt" => lem_collapse_dewt(ctx),
        other => Err(Broken(format!("no check registered for {other}"))),
    }
}

fn ax_cubic(ctx: &Ctx) -> Check {
    let report = check_cubic_axioms(ctx.alg, WitnessPolicy::First)?;
    match report.first() {
        None => pass(),
        Some(v) => fail(v.witness.clone(), format!("rule {}", v.rule)),
    }
}

fn lem_caret(ctx: &Ctx) -> Check {
    let mr = check_mr_axiom(ctx.alg, WitnessPolicy::First);
    if mr.passed == caret_total(ctx.alg) {
        pass()
    } else {
        let w = mr.first().map(|v| v.witness.clone()).unwrap_or_default();
        fail(
            w,
            format!("MR {} but caret totality {}", mr.passed, !mr.passed),
        )
    }
}

fn lem_kl(ctx: &Ctx) -> Check {
    for a in ctx.alg.elements() {
        if let Err(e) = localize(ctx.alg, a) {
            return fail(vec![a], e.to_string());
        }
    }
    pass()
}

fn lem_int_comp(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    for a in alg.elements() {
        let members = members_by_delta(alg, a);
        for g in alg.up_set(a).iter() {
            let h = alg.implies(g, a);
            for z in members.iter() {
                let left = alg.join(z, alg.d(alg.join(g, z), g));
                let right = alg.join(z, alg.d(alg.join(h, z), h));
                if alg.meet(left, right) != Some(z) {
                    return fail(vec![a, g, z], "identity fails");
                }
            }
        }
    }
    pass()
}

fn lem_fab(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    let q = ctx.quotient()?;
    for gf in ctx.boolean_filters()? {
        let phi = phi_from_boolean_filter(alg, q, gf)?;
        for a in alg.elements() {
            let class = q.algebra.join(gf.least(), q.eta(a));
            let above: Vec<usize> = q
                .class(class)
                .iter()
                .copied()
                .filter(|&x| alg.leq(a, x))
                .collect();
            let &[g] = above.as_slice() else {
                return fail(
                    vec![a],
                    format!("{} elements above a in the class", above.len()),
                );
            };
            let b = alg.d(g, a);
            let h = alg.implies(g, a);
            if phi[a] != b {
                return fail(vec![a, g], "φ_G(a) differs from Δ(g, a)");
            }
            let fhat = f_hat_ab(alg, a, b)?;
            let nb = alg.antipode(b);
            for z in members_by_delta(alg, a).iter() {
                if alg.join(fhat[z], b) != alg.join(phi[z], b) {
                    return fail(vec![a, g, z], "joins with Δ(g, a) differ");
                }
                if alg.join(fhat[z], nb) != alg.join(phi[z], nb) {
                    return fail(vec![a, g, z], "joins with Δ(1, Δ(g, a)) differ");
                }
                if fhat[z] != phi[z] {
                    return fail(vec![a, g, z], "f̂_ab differs from φ_G");
                }
                let left = alg.join(z, alg.d(alg.join(z, g), g));
                let right = alg.join(z, alg.d(alg.join(z, h), h));
                if alg.meet(left, alg.antipode(right)) != Some(phi[z]) {
                    return fail(vec![a, g, z], "local form of φ_G differs");
                }
            }
        }
    }
    pass()
}

/// Candidate presentations: every nonempty subset on small carriers,
/// otherwise every nonempty set of minimal elements (up to ten) and seeded
/// mixed sets.
fn presentation_candidates(ctx: &Ctx) -> Vec<Vec<usize>> {
    let n = ctx.alg.size();
    let subsets = |pool: &[usize]| -> Vec<Vec<usize>> {
        (1u32..1 << pool.len())
            .map(|m| {
                (0..pool.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| pool[i])
                    .collect()
            })
            .collect()
    };
    if n <= 12 {
        return subsets(&(0..n).collect::<Vec<_>>());
    }
    let mut out = Vec::new();
    let minimal = ctx.alg.minimal_elements();
    if minimal.len() <= 10 {
        out.extend(subsets(&minimal));
    }
    let mut rng = corpus::rng(ctx.seed);
    for k in 0..64 {
        out.push(corpus::random_subset(&mut rng, n, 1 + k % 6));
    }
    out
}

fn thm_present(ctx: &Ctx) -> Check {
    for set in presentation_candidates(ctx) {
        if !presentation_check(ctx.alg, &set) {
            continue;
        }
        match gfilter_from_presentation(ctx.alg, &set) {
            Ok(f) if is_gfilter(ctx.alg, &f) => {}
            Ok(_) => return fail(set, "result is not a g-filter"),
            Err(e) => return fail(set, e.to_string()),
        }
    }
    pass()
}

fn thm_localization(ctx: &Ctx) -> Check {
    use rand::Rng;
    let auts = ctx.auts()?;
    let mut rng = corpus::rng(ctx.seed);
    for _ in 0..10 {
        let k = rng.gen_range(1..=3);
        let x = corpus::random_subset(&mut rng, ctx.alg.size(), k);
        let s = rng.gen_range(0..=2usize.min(auts.len()));
        let gens: Vec<Vec<usize>> = corpus::random_subset(&mut rng, auts.len(), s)
            .into_iter()
            .map(|i| auts[i].clone())
            .collect();
        let closure = localize_closure(ctx.alg, &x, &gens)?;
        if !closure.holds() {
            return fail(x, format!("{closure:?}"));
        }
    }
    pass()
}

fn cor_filter_auts(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    for f in ctx.gfilters() {
        for g in ctx.gfilters() {
            let phi = filter_automorphism(alg, f, g)?;
            let image = f.members().map(alg.size(), |x| phi[x]);
            if !is_automorphism(alg, &phi) || !is_inner(alg, &phi) || &image != g.members() {
                return fail(vec![f.least(), g.least()], perm(&phi));
            }
        }
    }
    pass()
}

fn thm_factoring(ctx: &Ctx) -> Check {
    let q = ctx.quotient()?;
    for f in ctx.gfilters() {
        let pres = f_presentation(ctx.alg, f)?;
        for phi in ctx.auts()? {
            if !factor_automorphism(ctx.alg, q, &pres, phi)?.reconstructs {
                return fail(vec![f.least()], perm(phi));
            }
        }
    }
    pass()
}

fn lem_fixed(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    for f in ctx.gfilters() {
        for g in ctx.gfilters() {
            let phi = filter_automorphism(alg, f, g)?;
            let expect = generated_subalgebra(alg, &f.intersection(alg.order(), g))?;
            if fixed_set(alg, &phi)? != expect {
                return fail(vec![f.least(), g.least()], "fixed set differs");
            }
        }
    }
    pass()
}

fn lem_delta_fixed(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    let order = alg.order();
    for f in ctx.gfilters() {
        for g in ctx.gfilters() {
            let phi = filter_automorphism(alg, f, g)?;
            let meet = f.intersection(order, g);
            let rest = impl_elem(order, &meet, f)?;
            if antifixed_set(alg, &phi) != generated_subalgebra(alg, &rest)? {
                return fail(vec![f.least(), g.least()], "antifixed set differs");
            }
            let mirrored = g.members().map(alg.size(), |x| alg.antipode(x));
            if &mirrored.intersection(f.members()) != rest.members() {
                return fail(vec![f.least(), g.least()], "Δ(1, G) ∩ F differs");
            }
        }
    }
    pass()
}

fn subfilter_pairs(order: &crate::JoinSemilattice) -> Vec<(Filter, Filter)> {
    let all = all_filters(order);
    let mut out = Vec::new();
    for f in &all {
        for g in all.iter().filter(|g| g.is_subset(f)) {
            out.push((g.clone(), f.clone()));
        }
    }
    out
}

fn lem_two_three_same(ctx: &Ctx) -> Check {
    let q = ctx.quotient()?;
    for order in [q.algebra.order(), ctx.alg.order()] {
        for (g, f) in subfilter_pairs(order) {
            let elem = impl_elem(order, &g, &f);
            if impl_sup(order, &g, &f) != elem || impl_join(order, &g, &f) != elem {
                let place = if order.size() == q.len() {
                    "quotient"
                } else {
                    "algebra"
                };
                return fail(
                    vec![g.least(), f.least()],
                    format!("descriptions differ in the {place}"),
                );
            }
        }
    }
    pass()
}

/// Pairs `(G, F)` with `F` a g-filter and `G ⊆ F` an `F`-Boolean filter.
fn boolean_in_gfilter(ctx: &Ctx) -> std::result::Result<Vec<(Filter, Filter)>, Broken> {
    let order = ctx.alg.order();
    let mut out = Vec::new();
    for f in ctx.gfilters() {
        for g in all_filters(order).into_iter().filter(|g| g.is_subset(f)) {
            if is_f_boolean(order, &g, f)? {
                out.push((g, f.clone()));
            }
        }
    }
    Ok(out)
}

fn thm_lots(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    let order = alg.order();
    for f in ctx.gfilters() {
        for h in ctx.gfilters() {
            let g = f.intersection(order, h);
            if !is_f_boolean(order, &g, f)? || delta_filter(alg, &g, f)? != *h {
                return fail(vec![f.least(), h.least()], "forward direction");
            }
        }
    }
    for (g, f) in boolean_in_gfilter(ctx)? {
        let h = delta_filter(alg, &g, &f)?;
        if !is_gfilter(alg, &h) || f.intersection(order, &h) != g {
            return fail(vec![g.least(), f.least()], "converse direction");
        }
    }
    pass()
}

fn thm_boolean(ctx: &Ctx) -> Check {
    for (g, f) in boolean_in_gfilter(ctx)? {
        if !is_boolean(ctx.alg, &g)? {
            return fail(vec![g.least(), f.least()], "not Boolean");
        }
    }
    pass()
}

fn lem_local_boolean(ctx: &Ctx) -> Check {
    let order = ctx.alg.order();
    for (g, f) in boolean_in_gfilter(ctx)? {
        for h in all_filters(order).into_iter().filter(|h| h.is_subset(&f)) {
            if !is_f_boolean(order, &g.intersection(order, &h), &h)? {
                return fail(
                    vec![g.least(), f.least(), h.least()],
                    "G ∩ H is not H-Boolean",
                );
            }
        }
    }
    pass()
}

fn lem_local_princ_bool(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    let order = alg.order();
    for (g, f) in boolean_in_gfilter(ctx)? {
        let rest = impl_elem(order, &g, &f)?;
        for x in f.members().iter() {
            let split = g.members().iter().find_map(|u| {
                rest.members()
                    .iter()
                    .find(|&v| alg.meet(u, v) == Some(x))
                    .map(|_| u)
            });
            let Some(u) = split else {
                return fail(vec![g.least(), f.least(), x], "no splitting");
            };
            let cut = g.members().intersection(alg.up_set(x));
            if &cut != alg.up_set(u) {
                return fail(vec![g.least(), f.least(), x], "G ∩ [f, 1] is not [g, 1]");
            }
        }
    }
    pass()
}

fn thm_ker_filter(ctx: &Ctx) -> Check {
    let q = ctx.quotient()?;
    let id = identity(q.len());
    for phi in ctx.auts()? {
        if is_inner(ctx.alg, phi) != (functor_c_hom(q, q, phi)? == id) {
            return fail(phi.clone(), "inner and kernel disagree");
        }
    }
    pass()
}

fn thm_two_torsion(ctx: &Ctx) -> Check {
    let report = subgroup_report(ctx.auts()?, ctx.inner()?);
    if report.holds() {
        pass()
    } else {
        fail(vec![], format!("{report:?}"))
    }
}

/// Runs `test` on every inner automorphism with its fixed set and `D_φ`.
fn each_inner(
    ctx: &Ctx,
    mut test: impl FnMut(&[usize], &ElementSet, &ElementSet) -> Option<(Vec<usize>, String)>,
) -> Check {
    let q = ctx.quotient()?;
    for phi in ctx.inner()? {
        let m = fixed_set(ctx.alg, phi)?;
        let d = d_set(ctx.alg, q, phi)?;
        if let Some((w, note)) = test(phi, &m, &d) {
            return fail(w, format!("{note}; φ = {}", perm(phi)));
        }
    }
    pass()
}

fn lem_upper(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    each_inner(ctx, |_, m, _| {
        let mr = subalgebra::induced(alg, m)
            .is_ok_and(|s| check_mr_axiom(&s.algebra, WitnessPolicy::First).passed);
        (!is_upward_closed(alg, m) || !mr)
            .then(|| (m.to_vec(), "not an upward-closed MR-subalgebra".into()))
    })
}

fn rem_not_in_m(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    let id = identity(alg.size());
    for phi in ctx.inner()?.iter().filter(|p| **p != id) {
        let m = fixed_set(alg, phi)?;
        if let Some(x) = alg
            .elements()
            .find(|&x| x != alg.one() && m.contains(alg.join(x, alg.antipode(phi[x]))))
        {
            return Ok(Verdict::Finding(
                vec![x],
                format!("x ∨ Δ(1, φ(x)) is fixed; φ = {}", perm(phi)),
            ));
        }
    }
    pass()
}

fn eq_one_a(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    each_inner(ctx, |phi, _, _| {
        alg.elements().find_map(|x| {
            let (fx, nx, nfx) = (phi[x], alg.antipode(x), alg.antipode(phi[x]));
            let first = alg.meet(alg.join(x, fx), alg.join(x, nfx)) == Some(x);
            let second = alg.meet(alg.join(x, fx), alg.join(nx, fx)) == Some(fx);
            let third = alg.join(nx, fx) == alg.antipode(alg.join(x, nfx));
            (!(first && second && third)).then(|| (vec![x], format!("{first} {second} {third}")))
        })
    })
}

fn lem_something_in(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    each_inner(ctx, |phi, _, d| {
        alg.elements()
            .find(|&x| !d.contains(alg.join(alg.antipode(x), phi[x])))
            .map(|x| (vec![x], "Δ(1, x) ∨ φ(x) outside D_φ".into()))
    })
}

fn lem_delta_one(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    each_inner(ctx, |phi, _, d| {
        d.iter()
            .find(|&z| phi[z] != alg.antipode(z))
            .map(|z| (vec![z], "φ(z) differs from Δ(1, z)".into()))
    })
}

fn cor_intersect(ctx: &Ctx) -> Check {
    let one = ctx.alg.one();
    each_inner(ctx, |_, m, d| {
        let both = m.intersection(d).to_vec();
        (both != [one]).then(|| (both, "intersection is not {1}".into()))
    })
}

fn cor_mets_exist(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    each_inner(ctx, |_, m, d| {
        m.iter().find_map(|x| {
            d.iter()
                .find(|&y| alg.meet(x, alg.antipode(y)).is_none())
                .map(|y| (vec![x, y], "meet missing".into()))
        })
    })
}

fn lem_reps_md(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    each_inner(ctx, |phi, m, d| {
        alg.elements().find_map(|z| {
            let found = splittings(alg, m, d, z);
            let expect = decompose(alg, phi, z).ok()?;
            (found != [expect]).then(|| (vec![z], format!("{} splittings", found.len())))
        })
    })
}

fn lem_got_it(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    each_inner(ctx, |phi, m, d| {
        alg.elements().find_map(|z| {
            splittings(alg, m, d, z).into_iter().find_map(|(z0, z1)| {
                (recover(alg, z0, z1).ok() != Some(phi[z]))
                    .then(|| (vec![z, z0, z1], "recovery differs".into()))
            })
        })
    })
}

fn lem_bool_cc(ctx: &Ctx) -> Check {
    let q = ctx.quotient()?;
    let whole = whole_quotient(q)?;
    for phi in ctx.inner()? {
        if !is_f_boolean(q.algebra.order(), &omega(ctx.alg, q, phi)?, &whole)? {
            return fail(phi.clone(), "Ω(φ) is not Boolean");
        }
    }
    pass()
}

fn thm_mphi_is_good(ctx: &Ctx) -> Check {
    let inner = ctx.inner()?;
    let sets = inner
        .iter()
        .map(|phi| fixed_set(ctx.alg, phi))
        .collect::<crate::Result<Vec<_>>>()?;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] == sets[j] {
                return fail(
                    inner[i].clone(),
                    format!("same fixed set as {}", perm(&inner[j])),
                );
            }
        }
    }
    pass()
}

fn thm_recovery_ii(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    let q = ctx.quotient()?;
    let one = ctx.alg.one();
    for g in ctx.boolean_filters()? {
        let (s1, s2) = split_sets(q, g)?;
        if s1.intersection(&s2).to_vec() != [one] {
            return fail(g.to_vec(), "S₁ ∩ S₂ is not {1}");
        }
        if let Some(x) = alg
            .elements()
            .find(|&x| splittings(alg, &s1, &s2, x).len() != 1)
        {
            return fail(vec![x], "splitting not unique");
        }
        let phi = phi_from_boolean_filter(alg, q, g)?;
        if !is_inner(alg, &phi) || omega(alg, q, &phi)? != *g {
            return fail(g.to_vec(), "Ω(φ_G) differs from G");
        }
    }
    for phi in ctx.inner()? {
        if phi_from_boolean_filter(alg, q, &omega(alg, q, phi)?)? != *phi {
            return fail(phi.clone(), "not recovered from Ω(φ)");
        }
    }
    pass()
}

fn thm_iso_groups(ctx: &Ctx) -> Check {
    let alg = ctx.alg;
    let q = ctx.quotient()?;
    let order = q.algebra.order();
    let whole = whole_quotient(q)?;
    let inner = ctx.inner()?;
    if inner.len() != ctx.boolean_filters()?.len() {
        return fail(vec![], "Ω is not onto the Boolean filters");
    }
    for p1 in inner {
        for p2 in inner {
            let sum = boolean_filter_sum(order, &omega(alg, q, p1)?, &omega(alg, q, p2)?, &whole)?;
            if omega(alg, q, &compose(p1, p2))? != sum {
                return fail(compose(p1, p2), "Ω(φ₁φ₂) differs from Ω(φ₁) + Ω(φ₂)");
            }
        }
    }
    let iq = build_i(&q.algebra)?;
    let other = inner_group(&iq.algebra, ctx.limits)?;
    if other.len() != inner.len() {
        return fail(
            vec![inner.len(), other.len()],
            "inner groups differ in order",
        );
    }
    pass()
}

struct PairsOfQuotient {
    iq: PairAlgebra,
    qiq: crate::functors::Quotient,
    auts: Vec<Vec<usize>>,
}

fn pairs_of_quotient(ctx: &Ctx) -> std::result::Result<PairsOfQuotient, Broken> {
    let q = ctx.quotient()?;
    let iq = build_i(&q.algebra)?;
    let qiq = quotient_c(&iq.algebra)?;
    let auts = automorphisms(&Structure::implication(&q.algebra));
    Ok(PairsOfQuotient { iq, qiq, auts })
}

fn iota_verdict(pairs: &PairAlgebra) -> Check {
    let q = quotient_c(&pairs.algebra)?;
    let r = check_iota(pairs, &q)?;
    if r.holds() {
        pass()
    } else {
        fail(r.map.clone(), format!("{r:?}"))
    }
}

fn thm_iso_iota(ctx: &Ctx) -> Check {
    iota_verdict(&pairs_of_quotient(ctx)?.iq)
}

fn nat_e(ctx: &Ctx) -> Check {
    let p = pairs_of_quotient(ctx)?;
    for f in &p.auts {
        if !e_square(&p.iq, &p.iq, f)? {
            return fail(f.clone(), "square does not commute");
        }
    }
    pass()
}

fn nat_eta(ctx: &Ctx) -> Check {
    let q = ctx.quotient()?;
    for phi in ctx.auts()? {
        if !eta_square(q, q, phi)? {
            return fail(phi.clone(), "square does not commute");
        }
    }
    pass()
}

fn nat_iota(ctx: &Ctx) -> Check {
    let p = pairs_of_quotient(ctx)?;
    for f in &p.auts {
        if !iota_square(&p.iq, &p.qiq, &p.iq, &p.qiq, f)? {
            return fail(f.clone(), "square does not commute");
        }
    }
    pass()
}

fn nat_kappa(ctx: &Ctx) -> Check {
    let p = pairs_of_quotient(ctx)?;
    if kappa_iota_identity(ctx.quotient()?, &p.iq, &p.qiq)? {
        pass()
    } else {
        fail(vec![], "ι differs from 𝖢(κ)")
    }
}

fn rem_filter_alg(ctx: &Ctx) -> Check {
    let p = pairs_of_quotient(ctx)?;
    let mr = check_mr_axiom(&p.iq.algebra, WitnessPolicy::First).passed;
    let iso = find_isomorphism(&Structure::cubic(ctx.alg), &Structure::cubic(&p.iq.algebra));
    let kappa = kappa_report(ctx.alg, ctx.quotient()?, &p.iq);
    match iso {
        Some(_) if mr => pass(),
        _ => fail(
            vec![],
            format!("MR {mr}, isomorphic {}, κ {kappa:?}", iso.is_some()),
        ),
    }
}

fn upward_subs(ctx: &Ctx) -> std::result::Result<Vec<ElementSet>, Broken> {
    Ok(upward_closed_subalgebras(
        ctx.alg,
        ctx.quotient()?,
        ctx.limits,
    )?)
}

fn thm_incl(ctx: &Ctx) -> Check {
    for m in upward_subs(ctx)? {
        if !inclusion_collapse(ctx.alg, ctx.quotient()?, &m)?.holds() {
            return fail(m.to_vec(), "collapse is not the inclusion");
        }
    }
    pass()
}

fn cor_restrict(ctx: &Ctx) -> Check {
    let q = ctx.quotient()?;
    for m in upward_subs(ctx)? {
        for f in ctx.auts()? {
            if !restriction_commutes(ctx.alg, q, &m, f)? {
                return fail(m.to_vec(), format!("f = {}", perm(f)));
            }
        }
    }
    pass()
}

fn lem_collapse_dewt(ctx: &Ctx) -> Check {
    let subs = upward_subs(ctx)?;
    match collapse_counterexample(ctx.quotient()?, &subs) {
        None => pass(),
        Some((i, j)) => fail(
            subs[i].to_vec(),
            format!("collides with {:?}", subs[j].to_vec()),
        ),
    }
}

pub(crate) fn run_corpus(claim: &Claim, seed: u64, limits: &Limits) -> Vec<(String, Check)> {
    match claim.id {
        "thm:count" => (1..=4)
            .map(|n| (format!("B{n}"), count(n, limits)))
            .collect(),
        "cube:groups" => (1..=3)
            .map(|n| (format!("C{n}"), cube_groups(n, limits)))
            .collect(),
        "thm:isoIota" => iota_family(seed)
            .into_iter()
            .map(|(name, base)| {
                let verdict = build_i(&base)
                    .map_err(Broken::from)
                    .and_then(|p| iota_verdict(&p));
                (name, verdict)
            })
            .collect(),
        "nat:e" => vec![("I3->B2".into(), inclusion_square())],
        other => vec![(
            other.into(),
            Err(Broken(format!("no corpus check for {other}"))),
        )],
    }
}

fn count(n: usize, limits: &Limits) -> Check {
    let pairs = interval_algebra(n, limits)?;
    let expect = 3usize.pow(n as u32);
    if pairs.algebra.size() != expect {
        return fail(vec![pairs.algebra.size(), expect], "wrong size");
    }
    let face = face_poset(n, limits)?;
    let (target, map) = face.interval_map(limits)?;
    let ok = is_isomorphism(
        &Structure::cubic(&face.algebra),
        &Structure::cubic(&target.algebra),
        &map,
    );
    if ok {
        pass()
    } else {
        fail(map, "face map is not an isomorphism")
    }
}

fn cube_groups(n: usize, limits: &Limits) -> Check {
    let alg = interval_algebra(n, limits)?.algebra;
    let auts = enumerate_aut(&alg, limits)?;
    let inner = crate::automorphisms::inner_subgroup(&alg, &auts);
    let fact: usize = (1..=n).product();
    let expect = (fact << n, 1usize << n);
    if (auts.len(), inner.len()) == expect {
        pass()
    } else {
        fail(
            vec![auts.len(), inner.len()],
            format!("expected {expect:?}"),
        )
    }
}

fn iota_family(seed: u64) -> Vec<(String, ImplicationAlgebra)> {
    let mut out = vec![
        (
            "B2".to_string(),
            ImplicationAlgebra::from_boolean(&corpus::boolean(2)),
        ),
        (
            "B3".to_string(),
            ImplicationAlgebra::from_boolean(&corpus::boolean(3)),
        ),
        ("I3".to_string(), corpus::i3()),
    ];
    out.extend(corpus::random_implication_algebras(seed, 5));
    out
}

fn inclusion_square() -> Check {
    let b2 = corpus::boolean(2);
    let sub = implication_subalgebra(&b2, &[1, 2, 3])?;
    let p1 = corpus::n5();
    let p2 = corpus::c2();
    if e_square(&p1, &p2, &sub.masks)? {
        pass()
    } else {
        fail(sub.masks, "square does not commute")
    }
}
