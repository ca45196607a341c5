//! Acceptance suite: one line per criterion. Expected values come from
//! brute-force oracles written here, independent of the library code paths
//! where that is practical.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::Rng;

use mrkit_core::automorphisms::{
    enumerate_aut, filter_automorphism, find_isomorphism, inner_subgroup, localize_closure, omega,
    subgroup_report, Structure,
};
use mrkit_core::constructions::{
    build_i, face_poset, gfilter_from_presentation, interval_algebra, presentation_check,
};
use mrkit_core::corpus::{self, NamedAlgebra};
use mrkit_core::cubic::axioms::{caret_total, check_cubic_axioms, check_mr_axiom};
use mrkit_core::cubic::localization::{localize, members_by_preceq};
use mrkit_core::cubic::subalgebra;
use mrkit_core::filters::{all_filters, impl_elem, impl_join, impl_sup, Filter};
use mrkit_core::functors::quotient::{functor_c_hom, quotient_c};
use mrkit_core::verify::{select, verify_algebra, verify_corpus, Status};
use mrkit_core::{CubicAlgebra, JoinSemilattice, Limits, WitnessPolicy};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- brute-force oracles -------------------------------------------------

fn sim(a: &CubicAlgebra, x: usize, y: usize) -> bool {
    a.delta(a.join(x, y), x) == Some(y)
}

fn preceq(a: &CubicAlgebra, x: usize, y: usize) -> bool {
    a.delta(a.join(x, y), x).is_some_and(|d| a.leq(d, y))
}

fn glb(a: &CubicAlgebra, x: usize, y: usize) -> Option<usize> {
    let lower: Vec<usize> = a
        .elements()
        .filter(|&z| a.leq(z, x) && a.leq(z, y))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&z| a.leq(z, m)))
}

fn up(a: &CubicAlgebra, x: usize) -> BTreeSet<usize> {
    a.elements().filter(|&y| a.leq(x, y)).collect()
}

/// `{Δ(x, y) : y <= x, both in set}`
fn delta_closure(a: &CubicAlgebra, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &x in set {
        for &y in set {
            if let Some(d) = a.delta(x, y) {
                out.insert(d);
            }
        }
    }
    out
}

/// Principal filters whose Δ-closure is everything.
fn brute_gfilters(a: &CubicAlgebra) -> Vec<BTreeSet<usize>> {
    a.elements()
        .map(|x| up(a, x))
        .filter(|f| delta_closure(a, f).len() == a.size())
        .collect()
}

/// `{h ∈ F : h ∨ g = 1 for all g ∈ G}`
fn elementwise_implies(order: &JoinSemilattice, g: &Filter, f: &Filter) -> Vec<usize> {
    f.members()
        .iter()
        .filter(|&h| g.members().iter().all(|x| order.join(h, x) == order.one()))
        .collect()
}

fn is_presentation(a: &CubicAlgebra, set: &[usize]) -> bool {
    a.elements().all(|x| set.iter().any(|&s| preceq(a, s, x)))
}

fn claims_pass(alg: &NamedAlgebra, ids: &[&str]) -> Outcome {
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    let claims = select(&ids).map_err(|e| e.to_string())?;
    let out = verify_algebra(&alg.name, &alg.algebra, &claims, 42, &Limits::default())
        .map_err(|e| e.to_string())?;
    let ran: BTreeSet<&str> = out.iter().map(|o| o.claim_id.as_str()).collect();
    for id in &ids {
        ensure(ran.contains(id.as_str()), || {
            format!("{id} not applicable to {}", alg.name)
        })?;
    }
    match out.iter().find(|o| o.status != Status::Pass) {
        None => Ok(()),
        Some(o) => Err(format!(
            "{} on {}: {:?} {:?} {:?}",
            o.claim_id, o.instance, o.status, o.witness, o.note
        )),
    }
}

fn named(name: &str) -> NamedAlgebra {
    NamedAlgebra {
        name: name.into(),
        algebra: corpus::by_name(name).expect("fixed instance"),
    }
}

// ---- criteria ------------------------------------------------------------

fn axioms() -> Outcome {
    let mut mr_instances: Vec<NamedAlgebra> = ["C1", "C2", "C3", "FA1", "FA2"].map(named).to_vec();
    let b3 = corpus::boolean(3);
    for x in 0..b3.size() {
        let fa = mrkit_core::constructions::filter_algebra(
            &b3,
            &b3.principal_filter(x),
            &Limits::default(),
        )
        .map_err(|e| e.to_string())?;
        mr_instances.push(NamedAlgebra {
            name: format!("filter at {}", b3.label(x)),
            algebra: fa.pairs.algebra,
        });
    }
    for m in &mr_instances {
        let cubic =
            check_cubic_axioms(&m.algebra, WitnessPolicy::All).map_err(|e| e.to_string())?;
        ensure(cubic.passed, || {
            format!("{} fails {:?}", m.name, cubic.first())
        })?;
        ensure(
            check_mr_axiom(&m.algebra, WitnessPolicy::All).passed,
            || format!("{} not MR", m.name),
        )?;
    }
    let n5 = corpus::n5();
    let a = &n5.algebra;
    ensure(
        check_cubic_axioms(a, WitnessPolicy::All).unwrap().passed,
        || "N5 not cubic".into(),
    )?;
    let mr = check_mr_axiom(a, WitnessPolicy::All);
    let top = n5.by_labels("1", "1").unwrap();
    let (ea, eb) = (
        n5.by_labels("1", "a").unwrap(),
        n5.by_labels("1", "b").unwrap(),
    );
    ensure(!mr.passed, || "N5 passes MR".into())?;
    ensure(
        mr.violations.iter().any(|v| v.witness == [top, ea, eb]),
        || format!("witness (⟨1,a⟩,⟨1,b⟩) missing from {:?}", mr.violations),
    )?;
    ensure(
        a.caret(ea, eb).is_none() && glb(a, ea, eb).is_none(),
        || "⟨1,a⟩ ⋏ ⟨1,b⟩ exists".into(),
    )?;
    let mut all = corpus::standard(42, 5);
    all.extend(mr_instances);
    for m in &all {
        let verdict = check_mr_axiom(&m.algebra, WitnessPolicy::First).passed;
        ensure(verdict == caret_total(&m.algebra), || {
            format!("caret/MR disagree on {}", m.name)
        })?;
    }
    Ok(())
}

fn counting() -> Outcome {
    let l = Limits::default();
    for n in 1..=4usize {
        let full = (1usize << n) - 1;
        let expect = (0..=full)
            .flat_map(|a| (0..=full).map(move |b| (a, b)))
            .filter(|&(a, b)| a | b == full)
            .count();
        let pairs = interval_algebra(n, &l).map_err(|e| e.to_string())?;
        ensure(pairs.algebra.size() == expect, || {
            format!("n={n}: {} != {expect}", pairs.algebra.size())
        })?;
        let face = face_poset(n, &l).map_err(|e| e.to_string())?;
        ensure(face.algebra.size() == expect, || {
            format!("face poset n={n} has {}", face.algebra.size())
        })?;
        let iso = find_isomorphism(
            &Structure::cubic(&face.algebra),
            &Structure::cubic(&pairs.algebra),
        );
        ensure(iso.is_some(), || format!("no isomorphism for n={n}"))?;
    }
    Ok(())
}

fn groups() -> Outcome {
    let l = Limits::default();
    for n in 1..=3usize {
        let start = Instant::now();
        let alg = interval_algebra(n, &l).unwrap().algebra;
        let auts = enumerate_aut(&alg, &l).map_err(|e| e.to_string())?;
        let inner = inner_subgroup(&alg, &auts);
        // Signed permutations of the coordinates: n! orderings, 2^n sign flips.
        let expect_aut = (1..=n).product::<usize>() << n;
        let expect_inn = 1usize << n;
        ensure(
            (auts.len(), inner.len()) == (expect_aut, expect_inn),
            || {
                format!(
                    "n={n}: {}/{} expected {expect_aut}/{expect_inn}",
                    auts.len(),
                    inner.len()
                )
            },
        )?;
        let brute_inner: Vec<&Vec<usize>> = auts
            .iter()
            .filter(|p| alg.elements().all(|x| sim(&alg, x, p[x])))
            .collect();
        ensure(brute_inner.len() == expect_inn, || {
            "inner count by brute force".into()
        })?;
        ensure(subgroup_report(&auts, &inner).holds(), || {
            format!("n={n}: {:?}", subgroup_report(&auts, &inner))
        })?;
        ensure(start.elapsed().as_secs() < 60, || {
            format!("n={n} took {:?}", start.elapsed())
        })?;
    }
    Ok(())
}

fn kernel() -> Outcome {
    let l = Limits::default();
    for m in corpus::standard(42, 5) {
        let a = &m.algebra;
        if !check_mr_axiom(a, WitnessPolicy::First).passed {
            continue;
        }
        let q = quotient_c(a).map_err(|e| e.to_string())?;
        let id: Vec<usize> = (0..q.len()).collect();
        let auts = enumerate_aut(a, &l).map_err(|e| e.to_string())?;
        let inner: BTreeSet<Vec<usize>> = inner_subgroup(a, &auts).into_iter().collect();
        let mut kernel = BTreeSet::new();
        for phi in &auts {
            if functor_c_hom(&q, &q, phi).map_err(|e| e.to_string())? == id {
                kernel.insert(phi.clone());
            }
        }
        let brute: BTreeSet<Vec<usize>> = auts
            .iter()
            .filter(|p| a.elements().all(|x| sim(a, x, p[x])))
            .cloned()
            .collect();
        ensure(inner == kernel && kernel == brute, || {
            format!("{}: Inn != ker", m.name)
        })?;
    }
    Ok(())
}

fn inner_theory() -> Outcome {
    for m in ["C1", "C2", "C3", "FA1", "FA2"].map(named) {
        let a = &m.algebra;
        let gf = brute_gfilters(a);
        ensure(!gf.is_empty(), || format!("{} has no g-filter", m.name))?;
        for f in &gf {
            for g in &gf {
                let ff = Filter::from_members(a.order(), &f.iter().copied().collect::<Vec<_>>())
                    .unwrap();
                let gg = Filter::from_members(a.order(), &g.iter().copied().collect::<Vec<_>>())
                    .unwrap();
                let phi = filter_automorphism(a, &ff, &gg).map_err(|e| e.to_string())?;
                let fixed: BTreeSet<usize> = a.elements().filter(|&x| phi[x] == x).collect();
                let both: BTreeSet<usize> = f.intersection(g).copied().collect();
                ensure(fixed == delta_closure(a, &both), || {
                    format!("{}: fixed set", m.name)
                })?;
                let rest: BTreeSet<usize> = f
                    .iter()
                    .copied()
                    .filter(|&h| both.iter().all(|&x| a.join(h, x) == a.one()))
                    .collect();
                let anti: BTreeSet<usize> = a
                    .elements()
                    .filter(|&x| Some(phi[x]) == a.delta(a.one(), x))
                    .collect();
                ensure(anti == delta_closure(a, &rest), || {
                    format!("{}: antifixed set", m.name)
                })?;
            }
        }
        claims_pass(
            &m,
            &[
                "lem:fixed",
                "lem:DeltaFixed",
                "lem:repsMD",
                "lem:gotIt",
                "cor:intersect",
                "cor:metsExist",
            ],
        )?;
    }
    Ok(())
}

fn recovery() -> Outcome {
    for n in 1..=3usize {
        let m = named(&format!("C{n}"));
        let a = &m.algebra;
        let q = quotient_c(a).map_err(|e| e.to_string())?;
        let qa = &q.algebra;
        // Filters of a Boolean quotient with a complement filter: all of them.
        let whole_least = (0..qa.size())
            .find(|&x| qa.elements().all(|y| qa.leq(x, y)))
            .unwrap();
        let boolean: BTreeSet<Vec<usize>> = all_filters(qa.order())
            .into_iter()
            .filter(|g| {
                qa.elements().any(|h| {
                    qa.join(h, g.least()) == qa.one() && qa.meet(h, g.least()) == Some(whole_least)
                })
            })
            .map(|g| g.to_vec())
            .collect();
        ensure(boolean.len() == 1 << n, || {
            format!("C{n}: {} Boolean filters", boolean.len())
        })?;
        let auts = enumerate_aut(a, &Limits::default()).unwrap();
        let inner = inner_subgroup(a, &auts);
        let images: BTreeSet<Vec<usize>> = inner
            .iter()
            .map(|phi| omega(a, &q, phi).map(|f| f.to_vec()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(images == boolean, || {
            format!("C{n}: Ω is not a bijection onto Boolean filters")
        })?;
        claims_pass(
            &m,
            &[
                "thm:MPhiIsGood",
                "lem:BoolCC",
                "thm:recoveryII",
                "thm:isoGroups",
            ],
        )?;
    }
    Ok(())
}

fn filter_calculus() -> Outcome {
    let mut rng = corpus::rng(7);
    let pool: Vec<CubicAlgebra> = ["C2", "C3", "FA1", "FA2"]
        .map(|n| corpus::by_name(n).unwrap())
        .to_vec();
    let mut orders: Vec<JoinSemilattice> = Vec::new();
    for a in &pool {
        orders.push(a.order().clone());
        orders.push(quotient_c(a).unwrap().algebra.order().clone());
    }
    let mut checked = 0;
    while checked < 100 {
        let order = &orders[rng.gen_range(0..orders.len())];
        let filters = all_filters(order);
        let f = &filters[rng.gen_range(0..filters.len())];
        let subs: Vec<&Filter> = filters.iter().filter(|g| g.is_subset(f)).collect();
        let g = subs[rng.gen_range(0..subs.len())];
        let expect = elementwise_implies(order, g, f);
        let got = [
            impl_sup(order, g, f),
            impl_join(order, g, f),
            impl_elem(order, g, f),
        ];
        for r in &got {
            let v = r.as_ref().map_err(|e| e.to_string())?.to_vec();
            ensure(v == expect, || format!("{v:?} != {expect:?}"))?;
        }
        checked += 1;
    }
    let c2q = quotient_c(&corpus::c2().algebra).unwrap();
    let order = c2q.algebra.order();
    for f in all_filters(order) {
        for g in all_filters(order).iter().filter(|g| g.is_subset(&f)) {
            let expect = elementwise_implies(order, g, &f);
            ensure(impl_sup(order, g, &f).unwrap().to_vec() == expect, || {
                "C2 quotient impl_sup".into()
            })?;
            ensure(impl_join(order, g, &f).unwrap().to_vec() == expect, || {
                "C2 quotient impl_join".into()
            })?;
            ensure(impl_elem(order, g, &f).unwrap().to_vec() == expect, || {
                "C2 quotient impl_elem".into()
            })?;
        }
    }
    for m in ["C2", "C3"].map(named) {
        claims_pass(
            &m,
            &[
                "lem:twoThreeSame",
                "thm:lots",
                "thm:Boolean",
                "lem:localBoolean",
                "lem:localPrincBool",
            ],
        )?;
    }
    Ok(())
}

fn functors() -> Outcome {
    let claims = select(&["thm:isoIota".into()]).unwrap();
    let out = verify_corpus(&claims, 42, &Limits::default()).map_err(|e| e.to_string())?;
    let global: BTreeSet<&str> = out
        .iter()
        .filter(|o| o.status == Status::Pass)
        .map(|o| o.instance.as_str())
        .collect();
    for name in ["B2", "B3", "I3"] {
        ensure(global.contains(name), || {
            format!("ι not verified on {name}")
        })?;
    }
    ensure(out.iter().all(|o| o.status == Status::Pass), || {
        "ι fails somewhere".into()
    })?;
    let seeded = corpus::random_implication_algebras(42, 5);
    ensure(seeded.len() == 5, || {
        "fewer than 5 seeded implication algebras".into()
    })?;
    for (name, base) in &seeded {
        ensure(global.contains(name.as_str()), || {
            format!("ι not verified on {name}")
        })?;
        // Oracle: ι is a bijection base → quotient of its pair algebra.
        let pairs = build_i(base).map_err(|e| e.to_string())?;
        let q = quotient_c(&pairs.algebra).unwrap();
        let images: BTreeSet<usize> = base.elements().map(|x| q.eta(pairs.embed_e(x))).collect();
        ensure(
            images.len() == base.size() && q.len() == base.size(),
            || format!("{name}: ι not bijective"),
        )?;
    }
    for m in ["C1", "C2", "C3", "N5"].map(named) {
        claims_pass(&m, &["nat:e", "nat:eta", "nat:iota", "nat:kappa"])?;
    }
    claims_pass(
        &named("C2"),
        &["thm:incl", "cor:restrict", "lem:collapseDewt"],
    )?;
    Ok(())
}

fn localization() -> Outcome {
    for m in ["C2", "C3"].map(named) {
        let a = &m.algebra;
        for x in a.elements() {
            let loc = localize(a, x).map_err(|e| e.to_string())?;
            let brute: Vec<usize> = a.elements().filter(|&y| preceq(a, x, y)).collect();
            ensure(loc.members().to_vec() == brute, || {
                format!("{}: members at {x}", m.name)
            })?;
            ensure(members_by_preceq(a, x).to_vec() == brute, || {
                "preceq description".into()
            })?;
            let pairs = a
                .elements()
                .flat_map(|p| a.elements().map(move |q| (p, q)))
                .filter(|&(p, q)| a.leq(x, q) && a.leq(q, p))
                .count();
            ensure(pairs == brute.len(), || {
                format!("{}: {pairs} pairs vs {} members", m.name, brute.len())
            })?;
        }
        claims_pass(&m, &["lem:kl", "lem:fab"])?;
    }
    claims_pass(&named("C3"), &["lem:intComp"])
}

fn presentations() -> Outcome {
    let c2 = corpus::c2().algebra;
    let mut count = 0;
    for mask in 1u32..1 << c2.size() {
        let set: Vec<usize> = (0..c2.size()).filter(|i| mask >> i & 1 == 1).collect();
        let brute = is_presentation(&c2, &set);
        ensure(brute == presentation_check(&c2, &set), || {
            format!("presentation check on {set:?}")
        })?;
        if brute {
            check_presentation(&c2, &set)?;
            count += 1;
        }
    }
    ensure(count > 0, || "no presentations of C2".into())?;
    let c3 = corpus::c3().algebra;
    let vertices = c3.minimal_elements();
    for mask in 1u32..1 << vertices.len() {
        let set: Vec<usize> = (0..vertices.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vertices[i])
            .collect();
        ensure(is_presentation(&c3, &set), || {
            format!("vertex set {set:?} does not present C3")
        })?;
        check_presentation(&c3, &set)?;
    }
    let mut rng = corpus::rng(11);
    let mut mixed = 0;
    while mixed < 30 {
        let k = rng.gen_range(2..=5);
        let set = corpus::random_subset(&mut rng, c3.size(), k);
        if is_presentation(&c3, &set) && set.iter().any(|x| !vertices.contains(x)) {
            check_presentation(&c3, &set)?;
            mixed += 1;
        }
    }
    let auts = enumerate_aut(&c3, &Limits::default()).unwrap();
    for _ in 0..10 {
        let k = rng.gen_range(1..=3);
        let x = corpus::random_subset(&mut rng, c3.size(), k);
        let s = rng.gen_range(0..=2);
        let gens: Vec<Vec<usize>> = corpus::random_subset(&mut rng, auts.len(), s)
            .into_iter()
            .map(|i| auts[i].clone())
            .collect();
        let closure = localize_closure(&c3, &x, &gens).map_err(|e| e.to_string())?;
        ensure(closure.holds(), || format!("closure flags {closure:?}"))?;
        let members: BTreeSet<usize> = closure.members.iter().collect();
        ensure(x.iter().all(|v| members.contains(v)), || {
            "X not contained".into()
        })?;
        for &u in &members {
            ensure(up(&c3, u).is_subset(&members), || {
                "not upward closed".into()
            })?;
            for &v in &members {
                let closed = members.contains(&c3.join(u, v))
                    && c3.delta(u, v).is_none_or(|d| members.contains(&d));
                ensure(closed, || "not a subalgebra".into())?;
            }
            for g in &gens {
                ensure(members.contains(&g[u]), || {
                    "not stable under the group".into()
                })?;
            }
        }
        let sub = subalgebra::induced(&c3, &closure.members).map_err(|e| e.to_string())?;
        ensure(
            check_mr_axiom(&sub.algebra, WitnessPolicy::First).passed,
            || "closure not MR".into(),
        )?;
    }
    Ok(())
}

fn check_presentation(a: &CubicAlgebra, set: &[usize]) -> Outcome {
    let f = gfilter_from_presentation(a, set).map_err(|e| format!("{set:?}: {e}"))?;
    let members: BTreeSet<usize> = f.members().iter().collect();
    ensure(delta_closure(a, &members).len() == a.size(), || {
        format!("{set:?}: not a g-filter")
    })
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("axioms", axioms),
        ("counting", counting),
        ("groups", groups),
        ("kernel", kernel),
        ("inner automorphisms", inner_theory),
        ("recovery and isomorphism", recovery),
        ("filter calculus", filter_calculus),
        ("functors", functors),
        ("localization", localization),
        ("presentations", presentations),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        match result {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({elapsed:.2?}) {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
