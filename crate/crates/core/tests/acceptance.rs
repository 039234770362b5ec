//! End-to-end acceptance checks. Runs without the libtest harness so each
//! criterion prints exactly one PASS/FAIL line; the process exits non-zero if
//! any criterion fails.

use std::time::Instant;

use hypodom::canon::are_isomorphic;
use hypodom::domination::{domination_number, is_gamma_ea_critical};
use hypodom::enumerate::{graphs_in_range, graphs_of_order};
use hypodom::families::{bull, circulant, complete_minus_perfect_matching, cycle};
use hypodom::harness::{
    derive_exception_catalog, search_open_problems, verify_claim, ClaimId, ClaimParams, ClaimReport, ProblemId,
    SearchLimits,
};
use hypodom::hypo::{is_hypo_ed, is_hypo_ud};
use hypodom::io::parse_graph6;
use hypodom::{CirculantSpec, Graph};

type Check = Result<String, String>;

/// Runs the claims and demands zero failures and a non-empty hypothesis set.
fn claims(ids: &[ClaimId], params: &ClaimParams) -> Check {
    let mut summary = Vec::new();
    for &id in ids {
        let r: ClaimReport = verify_claim(id, params).map_err(|e| format!("{id}: {e}"))?;
        if !r.passed() {
            let first = &r.failures[0];
            return Err(format!("{id}: {} failures, first {} ({})", r.failures.len(), first.g6, first.detail));
        }
        if r.instances_checked == 0 {
            return Err(format!("{id}: vacuous, no instance met the hypothesis"));
        }
        summary.push(format!("{id} {}/{}", r.instances_checked, r.scanned));
    }
    Ok(summary.join(", "))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn circulant_formula() -> Check {
    let mut count = 0;
    for n in 3..=30usize {
        for k in 1..n / 2 {
            let g = circulant(&CirculantSpec::consecutive(n, k).map_err(|e| e.to_string())?);
            let want = n.div_ceil(2 * k + 1);
            ensure(domination_number(&g) == want, || format!("C({n},1..{k}): gamma != {want}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} circulants; {}", claims(&[ClaimId::Circu], &ClaimParams::default())?))
}

fn exception_catalog(connected9: &ClaimParams) -> Check {
    let cat = derive_exception_catalog().map_err(|e| e.to_string())?;
    ensure(cat.len() == 7, || format!("catalog has {} classes", cat.len()))?;
    ensure(cat.contains(&cycle(4)) && cat.contains(&cycle(7)), || "C4 or C7 missing".into())?;
    Ok(format!("7 classes; {}", claims(&[ClaimId::TwoFifths], connected9)?))
}

fn cycles_check() -> Check {
    for n in 3..=14 {
        let g = cycle(n);
        let (ed, ud) = (is_hypo_ed(&g), is_hypo_ud(&g));
        ensure(ed == (n >= 4 && n % 3 != 0), || format!("C{n}: hypo-ED = {ed}"))?;
        ensure(ud == [4, 7, 10, 13].contains(&n), || format!("C{n}: hypo-UD = {ud}"))?;
    }
    claims(&[ClaimId::Cycles], &ClaimParams::default())
}

fn witnesses() -> Check {
    let five = graphs_of_order(5).map_err(|e| e.to_string())?;
    let report = search_open_problems(ProblemId::SelfComp, Some(&five), &SearchLimits::default())
        .map_err(|e| e.to_string())?;
    let found: Vec<Graph> = report
        .matches
        .iter()
        .map(|w| parse_graph6(&w.g6))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let iso = |a: &Graph, b: &Graph| are_isomorphic(a, b).unwrap_or(false);
    ensure(found.len() == 2, || format!("{} self-complementary matches", found.len()))?;
    ensure(
        found.iter().any(|g| iso(g, &cycle(5))) && found.iter().any(|g| iso(g, &bull())),
        || "matches are not C5 and the bull".into(),
    )?;
    for n in [4, 6, 8] {
        let g = complete_minus_perfect_matching(n).map_err(|e| e.to_string())?;
        let ea = is_gamma_ea_critical(&g).map_err(|e| e.to_string())?;
        ensure(is_hypo_ed(&g) && is_hypo_ud(&g) && ea, || format!("K{n} minus a perfect matching"))?;
    }
    Ok(format!("C5 and bull among {} graphs; K4, K6, K8 minus a matching", five.len()))
}

fn connected_stream(max_n: usize) -> ClaimParams {
    ClaimParams::with_stream(graphs_in_range(1, max_n, true).expect("enumeration within guard"))
}

fn main() {
    let connected8 = connected_stream(8);
    let connected9 = connected_stream(9);
    let all8 = ClaimParams::with_stream(graphs_in_range(1, 8, false).expect("enumeration within guard"));
    let defaults = ClaimParams::default();

    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("circulant domination formula, n <= 30", Box::new(circulant_formula)),
        ("exception catalog and the 2n/5 bound, connected n <= 9", Box::new(|| exception_catalog(&connected9))),
        (
            "hypo-UD structure, connected n <= 8",
            Box::new(|| claims(&[ClaimId::Udvc, ClaimId::Minedge, ClaimId::Maxud], &connected8)),
        ),
        ("small-gamma hypo-UD classification, connected n <= 8", Box::new(|| claims(&[ClaimId::Obud], &connected8))),
        ("bondage bound, connected n <= 9 and C4, C7, C10, C13", Box::new(|| claims(&[ClaimId::Bondud], &connected9))),
        ("EDS-free order bound and equality structure, n <= 8", Box::new(|| claims(&[ClaimId::Minusone], &all8))),
        ("extremal circulant families, k <= 3, n <= 29", Box::new(|| claims(&[ClaimId::Extr1, ClaimId::Extr2], &defaults))),
        ("consecutive circulants hypo-UD iff (2k+1) | (n-1), n <= 25", Box::new(|| claims(&[ClaimId::Extremall], &defaults))),
        ("cycles C3..C14", Box::new(cycles_check)),
        ("hypo-ED vc-graphs have unique EDS in every G-v", Box::new(|| claims(&[ClaimId::VcedUd], &defaults))),
        ("branch and bound agrees with brute force, connected n <= 9", Box::new(|| claims(&[ClaimId::Oracle], &connected9))),
        ("self-complementary and matching-deleted witnesses", Box::new(witnesses)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.1}s] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:.1}s] {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
