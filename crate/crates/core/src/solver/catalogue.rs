use serde::{Deserialize, Serialize};

use super::{fourth_solution, parametric_family, Branch, SolutionFamily, SystemKind, SystemSpec};
use crate::fraction::TangleFraction;

/// One solution class with a short description and representative families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDescriptor {
    pub class: u8,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "O")]
    pub o: String,
    #[serde(rename = "R")]
    pub r: String,
    pub constraints: Vec<String>,
    pub examples: Vec<SolutionFamily>,
}

fn rational_examples(system: SystemKind, p: TangleFraction) -> Vec<SolutionFamily> {
    Branch::both()
        .into_iter()
        .map(|b| parametric_family(&SystemSpec::new(system).with_branch(b), p))
        .collect()
}

/// The four classes for `system`. Class 4 only exists for inverted sites.
pub fn catalogue(system: SystemKind) -> Vec<ClassDescriptor> {
    let mut out = vec![
        ClassDescriptor {
            class: 1,
            p: "(∞)".into(),
            o: "integral (±n), n = 2k + c + t".into(),
            r: "integral (∓t)".into(),
            constraints: vec!["O^k and R are integral".into()],
            examples: rational_examples(system, TangleFraction::INFINITY),
        },
        ClassDescriptor {
            class: 2,
            p: "integral (p)".into(),
            o: "(1 ± p·n)/(∓n), n = 2k + c + t".into(),
            r: "(p) + (1/(±t)): integral, ∞, or vertical plus integral".into(),
            constraints: vec![
                "an infinite O_f forces R vertical or (±1)".into(),
                "infinite and integral O_f together force P ∈ {0, ±2}".into(),
                "with P ≠ 0 an infinite O_f sits at k = 0 and an integral one at k = 1".into(),
            ],
            examples: rational_examples(system, TangleFraction::integer(2)),
        },
        ClassDescriptor {
            class: 3,
            p: "rational p/q, q ≥ 2".into(),
            o: "(r ± p·n)/(s ∓ q·n), n = 2k + c + t, with r·q + p·s = 1".into(),
            r: "(r ± p·t)/(−s ± q·t)".into(),
            constraints: vec!["canonical Bezout pair: minimal |s|, then minimal |r|".into()],
            examples: rational_examples(system, TangleFraction::new(11, 7).expect("valid")),
        },
    ];
    if system == SystemKind::Inverted {
        out.push(ClassDescriptor {
            class: 4,
            p: "(±p), p ∈ {0, 1}".into(),
            o: "O^2 = ∓(1/2, 2/3, p − 1), other O^k rational".into(),
            r: "(±(1 + p))".into(),
            constraints: vec![
                "O^2 is a Montesinos tangle".into(),
                "only defined for k ≤ 3".into(),
            ],
            examples: [0, 1]
                .into_iter()
                .flat_map(|p| Branch::both().map(|b| fourth_solution(p, b).expect("p in {0, 1}")))
                .collect(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::verify_solution;

    #[test]
    fn every_example_verifies() {
        for system in [SystemKind::Direct, SystemKind::Inverted] {
            let cat = catalogue(system);
            assert_eq!(cat.len(), if system == SystemKind::Inverted { 4 } else { 3 });
            for d in &cat {
                for fam in &d.examples {
                    assert_eq!(fam.class, d.class);
                    for t in -2..=2 {
                        let Ok(sols) = fam.instantiate(t) else { continue };
                        for sol in sols {
                            let spec = SystemSpec::new(system).with_branch(fam.branch);
                            let rep = verify_solution(&sol, &spec, false).unwrap();
                            assert!(rep.pass, "class {} t={t}: {sol}", d.class);
                        }
                    }
                }
            }
        }
    }
}
