//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always show. The process
//! fails when the set of failing criteria differs from `EXPECTED_FAILURES`,
//! or when a documented counterexample stops reproducing.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tangle_core::fourplat::{canonicalize, closure_of_sum};
use tangle_core::oracle::{
    closure_diagram, determinant, diagram_of_fraction, jones_equivalent, numerator_close, reference_diagram,
    PlanarDiagram,
};
use tangle_core::solver::{
    brute_force_montesinos, brute_force_rational, class2_constraints_check, darcy_family, fourth_solution,
    montesinos_classes, normalize_montesinos_hit, parametric_family, verify_solution,
    xer_demo, Branch, Chirality, MontesinosHit, Solution, SystemKind, SystemSpec,
};
use tangle_core::{star_vertical, FourPlat, MontesinosExpr, Tangle, TangleClass, TangleFraction};

const EXPECTED_FAILURES: &[u32] = &[10];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn frac(n: i64, d: i64) -> TangleFraction {
    TangleFraction::new(n, d).unwrap()
}

fn int(n: i64) -> TangleFraction {
    TangleFraction::integer(n)
}

fn criterion_1() -> Outcome {
    let fam = fourth_solution(0, Branch::Lower).unwrap();
    let listed = fam.instantiate(0).unwrap().into_iter().find(|s| {
        s.o(0).unwrap() == Tangle::Rational(TangleFraction::INFINITY)
            && s.o(1).unwrap() == Tangle::Rational(frac(-1, 2))
            && s.o(3).unwrap() == Tangle::Rational(frac(-1, 6))
    });
    let Some(sol) = listed else {
        return Outcome::new(false, "listed instance not emitted");
    };
    let Tangle::Montesinos(o2) = sol.o(2).unwrap() else {
        return Outcome::new(false, "O^2 is not Montesinos");
    };
    let normal = normalize_montesinos_hit(&MontesinosHit { o: o2, r: sol.r });
    let o2_ok = normal
        == Some(MontesinosHit {
            o: MontesinosExpr::new(vec![frac(1, 2), frac(-1, 3)]),
            r: int(-1),
        });
    let pr_ok = sol.p == TangleFraction::ZERO && sol.r == int(-1);
    let spec = SystemSpec::inverted();
    let plain = verify_solution(&sol, &spec, false).unwrap();
    let checked = verify_solution(&sol, &spec, true).unwrap();
    let closures = plain.checks.iter().filter(|c| c.substrate_ok).count()
        + plain.checks.iter().filter(|c| c.product_ok).count();
    let products: Vec<&str> = plain.checks.iter().map(|c| c.product.as_str()).collect();
    let want = ["b(1,0)", "b(3,1)", "b(5,1)", "b(7,1)"];
    let strip = |r: &tangle_core::solver::VerifyReport| {
        r.checks
            .iter()
            .map(|c| (c.k, c.substrate.clone(), c.product.clone(), c.substrate_ok, c.product_ok, c.pass))
            .collect::<Vec<_>>()
    };
    let identical = strip(&plain) == strip(&checked) && plain.pass == checked.pass;
    let pass = o2_ok && pr_ok && plain.pass && closures == 8 && products == want && identical && checked.oracle_agrees();
    Outcome::new(
        pass,
        format!("{closures}/8 closures, products {products:?}, oracle agrees: {}", checked.oracle_agrees()),
    )
}

/// `(k, O^k)` for `P = (2)`, `R = (1)`; the other sign is the mirror.
fn class_table(kind: SystemKind) -> Vec<(u32, TangleFraction)> {
    match kind {
        SystemKind::Direct => vec![
            (0, int(-1)),
            (1, int(-3)),
            (1, frac(-5, 3)),
            (2, frac(-9, 5)),
            (3, frac(-13, 7)),
        ],
        SystemKind::Inverted => vec![
            (0, TangleFraction::INFINITY),
            (0, frac(-3, 2)),
            (1, frac(-7, 4)),
            (2, frac(-11, 6)),
            (3, frac(-15, 8)),
        ],
    }
}

/// Numerators with one digit changed. Changes that share a factor with the
/// denominator are returned separately, already reduced.
fn digit_perturbations(f: TangleFraction) -> (Vec<TangleFraction>, Vec<TangleFraction>) {
    if f.is_infinity() {
        return (Vec::new(), Vec::new());
    }
    let digits: Vec<u32> = f.num().unsigned_abs().to_string().chars().map(|c| c.to_digit(10).unwrap()).collect();
    let mut out = Vec::new();
    let mut reducible = Vec::new();
    for i in 0..digits.len() {
        for d in 0..10 {
            if d == digits[i] {
                continue;
            }
            let mut v = digits.clone();
            v[i] = d;
            let n = v.iter().fold(0i64, |acc, &x| acc * 10 + x as i64);
            let g = TangleFraction::new(f.num().signum() * n, f.den()).unwrap();
            if num_gcd(n, f.den()) == 1 {
                out.push(g);
            } else {
                reducible.push(g);
            }
        }
    }
    (out, reducible)
}

fn criterion_2() -> Outcome {
    let mut listed = 0;
    let mut passed = 0;
    let mut perturbed = 0;
    let mut skipped = 0;
    let mut survivors = Vec::new();
    for kind in [SystemKind::Direct, SystemKind::Inverted] {
        for sign in [1i64, -1] {
            for (k, o) in class_table(kind) {
                let o = if sign > 0 { o } else { o.mirror() };
                let p = int(2 * sign);
                let r = int(sign);
                let spec = SystemSpec::new(kind).with_k_range([k]);
                let sol = Solution::new(kind, 2, p, r).with_o(k, o);
                listed += 1;
                let rep = verify_solution(&sol, &spec, false).unwrap();
                let n = kind.product_index(k);
                if rep.pass && Chirality::Any.accepts(n, closure_of_sum(o, r)) {
                    passed += 1;
                }
                let (changed, reducible) = digit_perturbations(o);
                let listed_here: Vec<TangleFraction> = class_table(kind)
                    .into_iter()
                    .filter(|(k2, _)| *k2 == k)
                    .map(|(_, f)| if sign > 0 { f } else { f.mirror() })
                    .collect();
                for g in reducible {
                    skipped += 1;
                    let other = Solution::new(kind, 2, p, r).with_o(k, g);
                    if verify_solution(&other, &spec, false).unwrap().pass && !listed_here.contains(&g) {
                        survivors.push(format!("{kind} k={k} {o} -> {g} (reduced)"));
                    }
                }
                for g in changed {
                    perturbed += 1;
                    let bad = Solution::new(kind, 2, p, r).with_o(k, g);
                    if verify_solution(&bad, &spec, false).unwrap().pass {
                        survivors.push(format!("{kind} k={k} {o} -> {g}"));
                    }
                }
            }
        }
    }
    Outcome::new(
        passed == listed && survivors.is_empty(),
        format!(
            "{passed}/{listed} listed tangles verify; {perturbed} perturbations, survivors {survivors:?}; \
             {skipped} non-coprime reduce to listed or failing tangles"
        ),
    )
}

/// `O^k` for `P = 11/7` with `r = −3`, `s = 2` as printed, sign `σ` for the `±`.
fn printed_o(sigma: i64, k: i64, t: i64) -> Option<TangleFraction> {
    let num = 22 * k + sigma * 11 * t + sigma * 11 - 3;
    let den = 14 * k + sigma * 7 * t + sigma * 7 + 2;
    TangleFraction::new(-num, den).ok()
}

/// The same expression with the constant terms following the branch.
fn corrected_o(sigma: i64, k: i64, t: i64) -> Option<TangleFraction> {
    let n = 2 * k + t + 1;
    TangleFraction::new(-(11 * n - 3 * sigma), 7 * n - 2 * sigma).ok()
}

fn printed_r(sigma: i64, t: i64) -> Option<TangleFraction> {
    TangleFraction::new(3 - sigma * 11 * t, 2 - sigma * 7 * t).ok()
}

fn criterion_3() -> Outcome {
    let p = frac(11, 7);
    let mut instances = 0;
    let mut passing = 0;
    let mut formula_ok = true;
    let mut printed_fails = BTreeSet::new();
    for kind in [SystemKind::Direct, SystemKind::Inverted] {
        for branch in Branch::both() {
            let sigma = branch.sign();
            let fam = parametric_family(&SystemSpec::new(kind).with_branch(branch), p);
            formula_ok &= fam.bezout.map(|b| (b.r, b.s)) == Some((-3, 2));
            for t in -5..=5 {
                let r = fam.r.eval(0, t).unwrap();
                if kind == SystemKind::Inverted {
                    formula_ok &= printed_r(sigma, t) == Some(r);
                }
                for k in 0..=3u32 {
                    instances += 1;
                    let Ok(o) = fam.o_formula.unwrap().eval(k as i64, t) else { continue };
                    if kind == SystemKind::Inverted {
                        formula_ok &= corrected_o(sigma, k as i64, t) == Some(o);
                        if let Some(lit) = printed_o(sigma, k as i64, t) {
                            let sol = Solution::new(kind, 3, p, r).with_o(k, lit);
                            if !verify_solution(&sol, &SystemSpec::new(kind).with_k_range([k]), false).unwrap().pass {
                                printed_fails.insert(sigma);
                            }
                        }
                        // another Bezout pair (r + 11j, s − 7j) is the same family at t + σj
                        for j in -2..=2i64 {
                            let shifted = TangleFraction::new(
                                -3 + 11 * j + sigma * 11 * (2 * k as i64 + t - sigma * j + 1),
                                2 - 7 * j - sigma * 7 * (2 * k as i64 + t - sigma * j + 1),
                            )
                            .unwrap();
                            formula_ok &= shifted == o;
                        }
                    }
                    let sol = Solution::new(kind, 3, p, r).with_o(k, o);
                    let spec = SystemSpec::new(kind).with_branch(branch).with_k_range([k]);
                    if verify_solution(&sol, &spec, false).unwrap().pass {
                        passing += 1;
                    }
                }
            }
        }
    }
    let pass = instances == 176 && passing == 176 && formula_ok && printed_fails.len() == 2;
    Outcome::new(
        pass,
        format!(
            "{passing}/{instances} instances verify; family matches corrected printed O^k and printed R: {formula_ok}; \
             literal printed O^k fails on {} of 2 branches",
            printed_fails.len()
        ),
    )
}

fn vertical(q: i64) -> TangleFraction {
    if q == 0 {
        TangleFraction::INFINITY
    } else {
        frac(1, q)
    }
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let mut counts = Vec::new();
    for k in 0..=3u32 {
        let hits = brute_force_rational(&SystemSpec::inverted(), TangleFraction::ZERO, 50, k);
        let got: BTreeSet<(TangleFraction, TangleFraction)> = hits
            .into_iter()
            .filter(|(_, r)| matches!(r.as_integer(), Some(1 | -1)))
            .collect();
        let kk = k as i64;
        let want: BTreeSet<(TangleFraction, TangleFraction)> = [
            (vertical(2 * kk), int(1)),
            (vertical(-2 * kk - 2), int(1)),
            (vertical(-2 * kk), int(-1)),
            (vertical(2 * kk + 2), int(-1)),
        ]
        .into_iter()
        .collect();
        pass &= got == want;
        counts.push(got.len());
    }
    Outcome::new(pass, format!("hits with R = (+-1) per k: {counts:?}"))
}

fn criterion_5() -> Outcome {
    let hits = brute_force_montesinos(4);
    let classes = montesinos_classes(&hits);
    let base = MontesinosHit {
        o: MontesinosExpr::new(vec![frac(1, 2), frac(-1, 3)]),
        r: int(-1),
    };
    let mirror = MontesinosHit {
        o: MontesinosExpr::new(vec![frac(1, 3), frac(-1, 2)]),
        r: int(1),
    };
    let want: BTreeSet<MontesinosHit> = [base.clone(), mirror.clone()].into_iter().collect();
    let darcy = MontesinosHit {
        o: MontesinosExpr::new(vec![frac(1, 2), frac(2, 3), int(-1)]).star(-2),
        r: int(1),
    };
    let darcy_found = hits.contains(&darcy);
    let mut oracle_checked = 0;
    let mut oracle_skipped = 0;
    let mut oracle_ok = true;
    for h in &hits {
        let norm = normalize_montesinos_hit(h).unwrap();
        let rep = if norm.r == base.r && norm.o.summands.len() == 2 && classes.contains(&norm) && norm == base {
            &base
        } else {
            &mirror
        };
        let d = closure_diagram(&Tangle::from(h.o.clone()), h.r);
        let Ok(d) = d else {
            oracle_skipped += 1;
            continue;
        };
        let e = closure_diagram(&Tangle::from(rep.o.clone()), rep.r).unwrap();
        let target = if rep == &base { FourPlat::torus(5) } else { FourPlat::torus(-5) };
        match (jones_equivalent(&d, &e), jones_equivalent(&d, &reference_diagram(target).unwrap())) {
            (Ok(a), Ok(b)) => {
                oracle_ok &= a && b;
                oracle_checked += 1;
            }
            _ => oracle_skipped += 1,
        }
    }
    let pass = classes == want && darcy_found && oracle_ok && oracle_skipped == 0;
    Outcome::new(
        pass,
        format!(
            "{} hits in {} classes; corrected Darcy variant found: {darcy_found}; oracle {oracle_checked} equal, {oracle_skipped} skipped",
            hits.len(),
            classes.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut pairs = 0;
    let mut disagreements = Vec::new();
    for p in 2..=9i64 {
        let qs: Vec<i64> = (1..p).filter(|q| num_gcd(p, *q) == 1).collect();
        let diagrams: BTreeMap<i64, PlanarDiagram> = qs
            .iter()
            .map(|&q| (q, numerator_close(&diagram_of_fraction(frac(p, q)).unwrap()).unwrap()))
            .collect();
        for &q in &qs {
            for &q2 in &qs {
                pairs += 1;
                let alg = canonicalize(p, q).unwrap() == canonicalize(p, q2).unwrap();
                let dia = jones_equivalent(&diagrams[&q], &diagrams[&q2]).unwrap();
                if alg != dia {
                    disagreements.push((p, q, q2));
                }
            }
        }
    }
    Outcome::new(
        disagreements.is_empty(),
        format!("{pairs} pairs, disagreements {disagreements:?}"),
    )
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}

fn random_fraction(rng: &mut ChaCha8Rng, max: i64) -> TangleFraction {
    loop {
        let n = rng.gen_range(-max..=max);
        let d = rng.gen_range(0..=max);
        if let Ok(f) = TangleFraction::new(n, d) {
            return f;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut agree = 0;
    let mut total = 0;
    while total < 200 {
        let a = random_fraction(&mut rng, 13);
        let c = random_fraction(&mut rng, 13);
        if a.crossing_count() + c.crossing_count() > 14 {
            continue;
        }
        total += 1;
        let b = closure_of_sum(a, c);
        let d = closure_diagram(&Tangle::Rational(a), c).unwrap();
        let same = jones_equivalent(&d, &reference_diagram(b).unwrap()).unwrap();
        if same && determinant(&d).unwrap() == b.p() {
            agree += 1;
        }
    }
    Outcome::new(agree == total, format!("{agree}/{total} pairs agree"))
}

fn starred(d: &PlanarDiagram, n: i64) -> PlanarDiagram {
    if n == 0 {
        d.clone()
    } else {
        PlanarDiagram::vertical_sum(d, &PlanarDiagram::vertical_twists(n)).unwrap()
    }
}

fn closed_sum(a: &PlanarDiagram, b: &PlanarDiagram) -> PlanarDiagram {
    numerator_close(&PlanarDiagram::tangle_sum(a, b).unwrap()).unwrap()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut algebraic = 0;
    let mut diagrammatic = 0;
    let mut oracle_runs = 0;
    for _ in 0..500 {
        let a = random_fraction(&mut rng, 9);
        let b = random_fraction(&mut rng, 9);
        let n = rng.gen_range(-4..=4i64);
        let transfer = closure_of_sum(star_vertical(a, n), b) == closure_of_sum(a, star_vertical(b, n));
        let compensate = closure_of_sum(star_vertical(a, n), star_vertical(b, -n)) == closure_of_sum(a, b);
        if transfer && compensate {
            algebraic += 1;
        }
        if a.crossing_count() + b.crossing_count() + 2 * n.unsigned_abs() <= 14 {
            oracle_runs += 1;
            let (da, db) = (diagram_of_fraction(a).unwrap(), diagram_of_fraction(b).unwrap());
            let left = closed_sum(&starred(&da, n), &db);
            let right = closed_sum(&da, &starred(&db, n));
            let comp = closed_sum(&starred(&da, n), &starred(&db, -n));
            let plain = closed_sum(&da, &db);
            if jones_equivalent(&left, &right).unwrap() && jones_equivalent(&comp, &plain).unwrap() {
                diagrammatic += 1;
            }
        }
    }
    Outcome::new(
        algebraic == 500 && diagrammatic == oracle_runs,
        format!("algebraic {algebraic}/500, oracle {diagrammatic}/{oracle_runs}"),
    )
}

fn criterion_9() -> Outcome {
    let hits = xer_demo(12);
    let vertical_hits: BTreeSet<(TangleFraction, TangleFraction)> = hits
        .iter()
        .copied()
        .filter(|(o, r)| o.classify() == TangleClass::Vertical && (r.is_integral() || r.is_infinity()))
        .collect();
    let want: BTreeSet<(TangleFraction, TangleFraction)> = [
        (frac(-1, 3), int(-1)),
        (frac(-1, 5), int(1)),
        (frac(-1, 4), TangleFraction::INFINITY),
    ]
    .into_iter()
    .collect();
    let outside: Vec<String> = hits
        .iter()
        .filter(|(_, r)| darcy_family(*r).is_none())
        .map(|(o, r)| format!("({o}, {r})"))
        .collect();
    Outcome::new(
        vertical_hits == want && outside.is_empty(),
        format!(
            "{} hits; vertical O with integral or infinite R: {}; R outside the four families: {outside:?}",
            hits.len(),
            vertical_hits.len()
        ),
    )
}

fn class2_instances() -> Vec<Solution> {
    let mut out = Vec::new();
    for kind in [SystemKind::Direct, SystemKind::Inverted] {
        for branch in Branch::both() {
            for n in -4..=4 {
                let fam = parametric_family(&SystemSpec::new(kind).with_branch(branch), int(n));
                for t in -5..=5 {
                    if let Ok(sols) = fam.instantiate(t) {
                        out.extend(sols);
                    }
                }
            }
        }
    }
    out
}

fn constraint_fixtures() -> [(Solution, &'static str); 3] {
    [
        (
            Solution::new(SystemKind::Inverted, 2, int(3), int(2)).with_o(0, TangleFraction::INFINITY),
            "r_vertical_or_unit",
        ),
        (
            Solution::new(SystemKind::Inverted, 2, int(3), int(1))
                .with_o(0, TangleFraction::INFINITY)
                .with_o(1, int(-2)),
            "p_in_zero_or_two",
        ),
        (
            Solution::new(SystemKind::Direct, 2, int(2), int(1)).with_o(1, TangleFraction::INFINITY),
            "infinite_index_zero",
        ),
    ]
}

/// Integral `R` verifying the inverted product for a strictly rational `O`, if any.
fn integral_partner(o: TangleFraction) -> Option<(i64, u32)> {
    (-60..=60i64).find_map(|r| {
        (0..=3u32)
            .find(|&k| Chirality::Any.accepts(SystemKind::Inverted.product_index(k), closure_of_sum(o, int(r))))
            .map(|k| (r, k))
    })
}

fn criterion_10() -> Outcome {
    let instances = class2_instances();
    let flagged: Vec<String> = instances
        .iter()
        .filter(|s| !class2_constraints_check(s).unwrap().ok())
        .map(|s| format!("{} P={} R={}", s.system, s.p, s.r))
        .collect();
    let fixtures_flagged = constraint_fixtures()
        .iter()
        .filter(|(s, clause)| {
            let rep = class2_constraints_check(s).unwrap();
            let hit = match *clause {
                "r_vertical_or_unit" => rep.r_vertical_or_unit,
                "p_in_zero_or_two" => rep.p_in_zero_or_two,
                _ => rep.infinite_index_zero,
            };
            hit == Some(false)
        })
        .count();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut sampled = 0;
    let mut strict_hits = Vec::new();
    let mut nontrivial = 0;
    while sampled < 100 {
        let o = random_fraction(&mut rng, 30);
        if o.classify() != TangleClass::StrictlyRational {
            continue;
        }
        sampled += 1;
        if let Some((r, k)) = integral_partner(o) {
            if k > 0 {
                nontrivial += 1;
            }
            strict_hits.push(format!("O={o} R={r} k={k}"));
        }
    }
    let pass = flagged.is_empty() && fixtures_flagged == 3 && strict_hits.is_empty();
    Outcome::new(
        pass,
        format!(
            "{} of {} emitted class-2 instances flagged; fixtures flagged {fixtures_flagged}/3; \
             {} of 100 strictly rational O have an integral R, {nontrivial} with k > 0 (first: {:?})",
            flagged.len(),
            instances.len(),
            strict_hits.len(),
            strict_hits.first()
        ),
    )
}

/// Counterexamples that explain the expected failure of criterion 10.
fn documented_counterexamples() -> Vec<String> {
    let mut broken = Vec::new();
    // an emitted class-2 solution with O^0 = (inf) and R = (2)
    let fam = parametric_family(&SystemSpec::inverted(), int(3));
    let sol = fam.instantiate(-1).unwrap().remove(0);
    let ok = sol.r == int(2)
        && sol.o(0).unwrap() == Tangle::Rational(TangleFraction::INFINITY)
        && verify_solution(&sol, &SystemSpec::inverted(), false).unwrap().pass
        && class2_constraints_check(&sol).unwrap().r_vertical_or_unit == Some(false);
    if !ok {
        broken.push("P=3 R=2 O^0=inf".to_string());
    }
    // a direct one with an infinite O_f at k = 1 and P != 0
    let fam = parametric_family(&SystemSpec::direct(), int(2));
    let sol = fam.instantiate(-2).unwrap().remove(0);
    let ok = sol.o(1).unwrap() == Tangle::Rational(TangleFraction::INFINITY)
        && verify_solution(&sol, &SystemSpec::direct(), false).unwrap().pass
        && class2_constraints_check(&sol).unwrap().infinite_index_zero == Some(false);
    if !ok {
        broken.push("direct P=2 O^1=inf".to_string());
    }
    // a strictly rational O with an integral R: N(3/4 + 0) = b(3,1)
    let o = frac(3, 4);
    let ok = closure_of_sum(o, TangleFraction::ZERO) == FourPlat::torus(3)
        && tangle_core::oracle::confirms(&Tangle::Rational(o), TangleFraction::ZERO, FourPlat::torus(3)).unwrap();
    if !ok {
        broken.push("O=3/4 R=0".to_string());
    }
    // and a whole class-3 solution with integral R: P = 1/2, R = 0
    let fam = parametric_family(&SystemSpec::inverted(), frac(1, 2));
    let sol = fam.instantiate(0).unwrap().remove(0);
    let strict = sol.o(1).unwrap().as_rational().map(|f| f.classify()) == Some(TangleClass::StrictlyRational);
    let ok = sol.r == TangleFraction::ZERO && strict && verify_solution(&sol, &SystemSpec::inverted(), false).unwrap().pass;
    if !ok {
        broken.push("P=1/2 R=0".to_string());
    }
    broken
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    // libtest flags such as --list or --format are not supported; listing prints nothing
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let criteria: [Criterion; 10] = [
        (1, "fourth solution", criterion_1),
        (2, "class tables", criterion_2),
        (3, "parametric family", criterion_3),
        (4, "rational completeness", criterion_4),
        (5, "Montesinos uniqueness", criterion_5),
        (6, "4-plat equivalence", criterion_6),
        (7, "closure formula vs oracle", criterion_7),
        (8, "twist identities", criterion_8),
        (9, "Xer demo", criterion_9),
        (10, "constraint suite", criterion_10),
    ];
    let mut failing = Vec::new();
    for (n, name, run) in criteria {
        let out = run();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {verdict} {name}: {}", out.detail);
        if !out.pass {
            failing.push(n);
        }
    }
    let broken = documented_counterexamples();
    println!("documented counterexamples reproducing: {}", broken.is_empty());
    if failing != EXPECTED_FAILURES || !broken.is_empty() {
        eprintln!("failing {failing:?}, expected {EXPECTED_FAILURES:?}; broken counterexamples {broken:?}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
