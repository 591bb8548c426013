//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion reports a PASS/FAIL line; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use epgraph::catalog::{builtin_catalog, render_table, verify_catalog};
use epgraph::graph::{
    components_without, graphs_equal, is_separating, build_spacapan_set, spacapan_set_size,
    strong_product, vertex_connectivity, SimpleGraph, SpacapanFactor, SpacapanSpec,
};
use epgraph::group::{build_group_from_str, sylow_decomposition, Atom, FiniteGroup, GroupSpec, SylowKind};
use epgraph::kappa::{
    kappa_abelian_closed_form, kappa_enhanced, mr, mr_abelian_closed_form, root_counts, term_value,
    witness_separating_set, ClosedFormVariant, FactorTerm, FormulaCase, KappaOptions, Verdict,
    QUATERNION_INCREMENT, QUATERNION_MR,
};
use epgraph::power::{deleted_enhanced, enhanced_power_graph, proper_enhanced};
use fixedbitset::FixedBitSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn spec(s: &str) -> GroupSpec {
    GroupSpec::parse(s).unwrap()
}

fn group(s: &str) -> FiniteGroup {
    build_group_from_str(s).unwrap()
}

fn oracle_kappa(g: &FiniteGroup) -> usize {
    vertex_connectivity(&enhanced_power_graph(g)).unwrap().kappa
}

fn formula_and_oracle(s: &str) -> Result<(u128, usize), String> {
    let r = kappa_enhanced(&spec(s), KappaOptions::default()).map_err(|e| format!("{s}: {e}"))?;
    let f = r.kappa_formula().ok_or(format!("{s}: no formula value"))?;
    let o = r.kappa_oracle().ok_or(format!("{s}: oracle skipped"))?;
    Ok((f, o))
}

fn quaternion_connectivity() -> Check {
    for s in ["Q8", "Q16"] {
        let g = group(s);
        let (f, o) = formula_and_oracle(s)?;
        ensure!(f == 2 && o == 2, "{s}: formula {f}, oracle {o}");
        let r = kappa_enhanced(&spec(s), KappaOptions::default()).unwrap();
        ensure!(matches!(r.formula.unwrap().case, FormulaCase::Mu(_)), "{s}: not the mu case");
        let cut = vertex_connectivity(&enhanced_power_graph(&g)).unwrap().witness.unwrap().cut;
        let involution = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let mut expected = vec![g.identity().index(), involution.index()];
        expected.sort_unstable();
        ensure!(cut == expected, "{s}: minimum cut {cut:?}, expected {expected:?}");
    }
    Ok("Q8, Q16: kappa = 2, cut = {e, z}".into())
}

fn p_group_connectivity() -> Check {
    let list = ["Ab(2;1,1)", "Ab(2;1,1,1)", "Ab(3;1,1)", "Ab(3;1,2)", "D8", "Ab(5;1,1)"];
    for s in list {
        let k = oracle_kappa(&group(s));
        ensure!(k == 1, "{s}: oracle kappa {k}");
    }
    Ok(format!("{} p-groups with oracle kappa = 1", list.len()))
}

fn cyclic_completeness() -> Check {
    for n in 1..=12usize {
        let g = group(&format!("Z{n}"));
        let graph = enhanced_power_graph(&g);
        ensure!(graph.is_complete(), "Z{n} not complete");
        let k = vertex_connectivity(&graph).unwrap().kappa;
        ensure!(k == n - 1, "Z{n}: kappa {k}");
        let (f, _) = formula_and_oracle(&format!("Z{n}"))?;
        ensure!(f == n as u128 - 1, "Z{n}: formula {f}");
    }
    Ok("Z1..Z12 complete with kappa = n - 1".into())
}

fn single_factor_recovery() -> Check {
    for (s, want) in [("Z4 x Ab(3;1,1)", 4), ("Z3 x Q8", 6)] {
        let (f, o) = formula_and_oracle(s)?;
        ensure!(f == want && o as u128 == want, "{s}: formula {f}, oracle {o}, want {want}");
    }
    Ok("Z4 x Z3^2 -> 4, Z3 x Q8 -> 6".into())
}

fn multi_factor_tau() -> Check {
    let s = "Ab(3;1,2) x Ab(2;1,1)";
    let r = kappa_enhanced(&spec(s), KappaOptions::default()).unwrap();
    let FormulaCase::Tau(t) = r.formula.as_ref().unwrap().case.clone() else {
        return Err("not the tau case".into());
    };
    ensure!(t.per_factor_mr == [1, 2], "mr per factor {:?}", t.per_factor_mr);
    ensure!(r.order == 108, "order {}", r.order);
    ensure!(
        r.kappa_formula() == Some(4) && r.kappa_oracle() == Some(4),
        "formula {:?}, oracle {:?}",
        r.kappa_formula(),
        r.kappa_oracle()
    );
    Ok("(Z3 x Z9) x Z2^2: tau = 4 = oracle on 108 vertices".into())
}

fn mu_with_odd_part() -> Check {
    let s = "Ab(3;1,1) x Q8";
    let r = kappa_enhanced(&spec(s), KappaOptions::default()).unwrap();
    ensure!(matches!(r.formula.as_ref().unwrap().case, FormulaCase::Mu(_)), "not the mu case");
    ensure!(r.order == 72, "order {}", r.order);
    ensure!(
        r.kappa_formula() == Some(8) && r.kappa_oracle() == Some(8),
        "formula {:?}, oracle {:?}",
        r.kappa_formula(),
        r.kappa_oracle()
    );
    Ok("Z3^2 x Q8: mu = 8 = oracle on 72 vertices".into())
}

fn closed_form_adjudication() -> Check {
    let s = "Ab(3;1,1) x Ab(2;1,1)";
    let printed = kappa_abelian_closed_form(&spec(s), ClosedFormVariant::Printed).unwrap();
    let corrected = kappa_abelian_closed_form(&spec(s), ClosedFormVariant::MrCorrected).unwrap();
    let o = oracle_kappa(&group(s)) as u128;
    ensure!(corrected == 4 && corrected == o, "mr-corrected {corrected}, oracle {o}");
    ensure!(printed == 3 && printed != o, "printed {printed}, oracle {o}");
    let rows = verify_catalog(&[spec(s)], 600);
    ensure!(rows[0].printed_flagged() && !rows[0].disagrees(), "verify row not flagged as expected");
    let table = render_table(&rows);
    ensure!(table.contains("printed variant differs"), "table lacks the flag:\n{table}");
    Ok("Z3^2 x Z2^2: mr-corrected 4 = oracle, printed 3 flagged".into())
}

/// Nondecreasing exponent vectors with `k >= 2` parts and sum at most `max_sum`.
fn exponent_vectors(max_sum: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, remaining: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for t in lo..=remaining {
            prefix.push(t);
            extend(prefix, remaining - t, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_sum, &mut out);
    out
}

fn abelian_p_groups() -> Vec<(u64, Vec<u32>, FiniteGroup)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for exps in exponent_vectors(6) {
            let atom = Atom::AbelianP { p, exponents: exps.clone() };
            let g = epgraph::group::build_group(&GroupSpec::new(vec![atom]).unwrap()).unwrap();
            out.push((p, exps, g));
        }
    }
    out
}

fn mr_closed_form(groups: &[(u64, Vec<u32>, FiniteGroup)]) -> Check {
    for (p, exps, g) in groups {
        let brute = mr(g, *p).unwrap() as u128;
        let closed = mr_abelian_closed_form(*p, exps).unwrap();
        ensure!(brute == closed, "p={p} {exps:?}: brute {brute}, closed form {closed}");
    }
    Ok(format!("{} abelian p-groups, closed form = brute mr", groups.len()))
}

fn root_lower_bound(groups: &[(u64, Vec<u32>, FiniteGroup)]) -> Check {
    let mut checked = 0usize;
    for (p, exps, g) in groups {
        let bound = mr_abelian_closed_form(*p, exps).unwrap();
        let counts = root_counts(g);
        for a in g.elements().filter(|&a| g.element_order(a) == *p) {
            ensure!(counts[a.index()] as u128 >= bound, "p={p} {exps:?}: {} roots < {bound}", counts[a.index()]);
            checked += 1;
        }
    }
    Ok(format!("{checked} order-p elements meet the bound"))
}

fn strong_product_factorization() -> Check {
    let mut checked = 0;
    for s in builtin_catalog() {
        let g = epgraph::group::build_group(&s).unwrap();
        if g.order() > 600 {
            continue;
        }
        let d = sylow_decomposition(&g).unwrap();
        let factors = d.all_factors();
        if factors.len() < 2 {
            continue;
        }
        let graphs: Vec<SimpleGraph> = factors.iter().map(|f| enhanced_power_graph(&f.group)).collect();
        let product = strong_product(&graphs.iter().collect::<Vec<_>>()).unwrap();
        let mut ge = enhanced_power_graph(&g);
        let labels = g
            .elements()
            .map(|x| {
                let parts: Vec<&str> = factors
                    .iter()
                    .map(|f| f.group.label(f.local(g.p_part(x, f.prime)).unwrap()))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        ge.set_labels(labels);
        ensure!(graphs_equal(&ge, &product), "{s}: G_E(G) differs from the strong product");
        checked += 1;
    }
    Ok(format!("{checked} decomposable catalog groups"))
}

/// Size of the smallest separating set, by exhaustive search; `None` if no
/// subset separates (complete graphs).
fn brute_min_separator(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_separating(g, &set) {
            best = Some(size);
        }
    }
    best
}

fn kappa_definition() -> Check {
    let mut checked = 0;
    for s in builtin_catalog() {
        let g = epgraph::group::build_group(&s).unwrap();
        if g.order() > 12 {
            continue;
        }
        for graph in [enhanced_power_graph(&g), deleted_enhanced(&g), proper_enhanced(&g)] {
            let n = graph.vertex_count();
            if n == 0 {
                continue;
            }
            let k = vertex_connectivity(&graph).unwrap().kappa;
            let want = brute_min_separator(&graph).unwrap_or(n - 1);
            ensure!(k == want, "{s} ({n} vertices): kappa {k}, exhaustive {want}");
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs match the exhaustive (kappa - 1)-subset check"))
}

fn random_factor(rng: &mut StdRng) -> SimpleGraph {
    loop {
        let n = rng.random_range(3..=8);
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        if !g.is_complete() && components_without(&g, &FixedBitSet::with_capacity(n)).len() == 1 {
            return g;
        }
    }
}

/// Every (separating set, component) choice of a factor.
fn cut_choices(g: &SimpleGraph) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let mut removed = FixedBitSet::with_capacity(n);
        (0..n).filter(|&v| mask >> v & 1 == 1).for_each(|v| removed.insert(v));
        let comps = components_without(g, &removed);
        if comps.len() >= 2 {
            let sep: Vec<usize> = removed.ones().collect();
            out.extend(comps.into_iter().map(|c| (sep.clone(), c)));
        }
    }
    out
}

fn entry(factor: usize, choice: &(Vec<usize>, Vec<usize>)) -> SpacapanFactor {
    SpacapanFactor {
        factor,
        separator: choice.0.clone(),
        component: choice.1.clone(),
    }
}

/// (b) and (c) share the same 50 random pairs.
fn spacapan_suites() -> (Check, Check) {
    let mut rng = StdRng::seed_from_u64(0x5ba_ca9a);
    let mut built = 0usize;
    let mut soundness: Check = Ok(String::new());
    let mut equality: Check = Ok(String::new());
    for pair in 0..50 {
        let g = random_factor(&mut rng);
        let h = random_factor(&mut rng);
        let factors = [&g, &h];
        let product = strong_product(&factors).unwrap();
        let choices = [cut_choices(&g), cut_choices(&h)];
        let n = [g.vertex_count() as u128, h.vertex_count() as u128];

        let mut specs: Vec<SpacapanSpec> = Vec::new();
        for _ in 0..20 {
            let c0 = &choices[0][rng.random_range(0..choices[0].len())];
            let c1 = &choices[1][rng.random_range(0..choices[1].len())];
            specs.push(SpacapanSpec { entries: vec![entry(0, c0)] });
            specs.push(SpacapanSpec { entries: vec![entry(1, c1)] });
            specs.push(SpacapanSpec { entries: vec![entry(0, c0), entry(1, c1)] });
        }
        for s in &specs {
            let set = build_spacapan_set(&factors, s).unwrap();
            let size = spacapan_set_size(&factors, s).unwrap();
            if soundness.is_ok() && (!is_separating(&product, &set) || set.len() as u128 != size) {
                soundness = Err(format!("pair {pair}: {s:?} does not separate or has wrong size"));
            }
            built += 1;
        }

        let pairs = |cs: &[(Vec<usize>, Vec<usize>)]| {
            let mut v: Vec<(u128, u128)> = cs.iter().map(|(s, a)| (s.len() as u128, a.len() as u128)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let (p0, p1) = (pairs(&choices[0]), pairs(&choices[1]));
        let i_sets = p0.iter().map(|&(s, _)| s * n[1]).chain(p1.iter().map(|&(s, _)| s * n[0]));
        let l_sets = p0
            .iter()
            .flat_map(|&(s0, a0)| p1.iter().map(move |&(s1, a1)| (s0 + a0) * (s1 + a1) - a0 * a1));
        let minimum = i_sets.chain(l_sets).min().unwrap();
        let k = vertex_connectivity(&product).unwrap().kappa as u128;
        if equality.is_ok() && k != minimum {
            equality = Err(format!("pair {pair}: kappa {k}, I/L-set minimum {minimum}"));
        }
    }
    (
        soundness.map(|_| format!("{built} constructed I-/L-sets separate")),
        equality.map(|_| "50 random factor pairs: kappa = I/L-set minimum".into()),
    )
}

fn product_gap_monotone() -> Check {
    let mut rng = StdRng::seed_from_u64(0x1e_44a);
    for _ in 0..1000 {
        let r = rng.random_range(1..=5usize);
        let b: Vec<u128> = (0..r).map(|_| rng.random_range(1..=20)).collect();
        let a: Vec<u128> = b.iter().map(|&x| x + rng.random_range(0..=20)).collect();
        let terms = |v: &[u128]| -> Vec<FactorTerm> {
            v.iter().map(|&m| FactorTerm { size: 1, mr: m, increment: 1 }).collect()
        };
        let lhs = term_value(&terms(&a), &[]).unwrap();
        let rhs = term_value(&terms(&b), &[]).unwrap();
        let direct_a = a.iter().map(|x| x + 1).product::<u128>() - a.iter().product::<u128>();
        ensure!(lhs == direct_a, "term_value mismatch for {a:?}");
        ensure!(lhs >= rhs, "a={a:?} b={b:?}: {lhs} < {rhs}");
    }
    Ok("1000 random tuples".into())
}

fn witnesses() -> Check {
    let mut checked = 0;
    for s in builtin_catalog() {
        let g = epgraph::group::build_group(&s).unwrap();
        if g.order() > 600 {
            continue;
        }
        let d = sylow_decomposition(&g).unwrap();
        let factors = d.formula_factors();
        if factors.is_empty() {
            continue;
        }
        let terms: Vec<FactorTerm> = factors
            .iter()
            .map(|f| match f.kind {
                SylowKind::Quaternion => FactorTerm {
                    size: f.order() as u128,
                    mr: QUATERNION_MR,
                    increment: QUATERNION_INCREMENT,
                },
                _ => FactorTerm {
                    size: f.order() as u128,
                    mr: mr(&f.group, f.prime).unwrap() as u128,
                    increment: 1,
                },
            })
            .collect();
        let graph = enhanced_power_graph(&g);
        let r = factors.len();
        for mask in 0u32..(1 << r) - 1 {
            let t: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
            let set = witness_separating_set(&g, &d, &t).unwrap();
            let want = term_value(&terms, &t).unwrap() * d.cyclic_order as u128;
            ensure!(is_separating(&graph, &set), "{s}, T={t:?}: witness does not separate");
            ensure!(set.len() as u128 == want, "{s}, T={t:?}: size {}, term {want}", set.len());
            checked += 1;
        }
        let report = kappa_enhanced(&s, KappaOptions::default()).unwrap();
        ensure!(report.verdict == Verdict::Agree, "{s}: verdict {:?}", report.verdict);
        ensure!(
            report.witness_set.as_ref().map(|w| w.len() as u128) == report.kappa_formula(),
            "{s}: minimizing witness size differs from kappa"
        );
    }
    Ok(format!("{checked} (group, T) witnesses separate with the term size"))
}

fn guarded(f: impl FnOnce() -> Check) -> Check {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let groups = abelian_p_groups();
    let (spacapan_b, spacapan_c) = catch_unwind(spacapan_suites)
        .unwrap_or_else(|_| (Err("panicked".into()), Err("panicked".into())));
    let results: Vec<(&str, Check)> = vec![
        ("1 quaternion connectivity", guarded(quaternion_connectivity)),
        ("2 p-group connectivity", guarded(p_group_connectivity)),
        ("3 cyclic completeness", guarded(cyclic_completeness)),
        ("4 single non-cyclic factor", guarded(single_factor_recovery)),
        ("5 multi-factor tau", guarded(multi_factor_tau)),
        ("6 mu with odd part", guarded(mu_with_odd_part)),
        ("7 closed-form adjudication", guarded(closed_form_adjudication)),
        ("8 mr closed form", guarded(|| mr_closed_form(&groups))),
        ("9 root lower bound", guarded(|| root_lower_bound(&groups))),
        ("10 strong-product factorization", guarded(strong_product_factorization)),
        ("11a kappa definition", guarded(kappa_definition)),
        ("11b I/L-set soundness", spacapan_b),
        ("11c I/L-set minimum", spacapan_c),
        ("11d product-gap inequality", guarded(product_gap_monotone)),
        ("11e witness sets", guarded(witnesses)),
    ];
    let mut failed = 0;
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1?}",
        results.len() - failed,
        results.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
