mod common;

use rand::Rng;
use sqfpow_core::axioms::{check_splf_axioms, Axiom, DropLastGenerator, PowerFunction};
use sqfpow_core::{Hypergraph, PowerKind, SqfIdeal};

fn samples(seed: u64, count: usize) -> Vec<Hypergraph> {
    let mut r = common::rng(seed);
    (0..count)
        .map(|_| {
            let (n, m) = (r.gen_range(2..=5), r.gen_range(1..=4));
            common::random_hypergraph(&mut r, n, m)
        })
        .collect()
}

#[test]
fn both_kinds_satisfy_the_axioms_on_random_hypergraphs() {
    let s = samples(51, 30);
    for kind in PowerKind::ALL {
        let rep = check_splf_axioms(&s, &kind);
        assert!(rep.passed(), "{:?}", rep.violations.first());
        assert!(rep.checks.iter().all(|&c| c > 0));
    }
}

/// `F(H, k) = I(H)^[k+1]` for `k >= 1`, so `F(H, 1)` is not `I(H)`.
struct Shifted;

impl PowerFunction for Shifted {
    fn name(&self) -> String {
        "shifted".into()
    }

    fn power(&self, h: &Hypergraph, k: usize) -> SqfIdeal {
        if k == 0 {
            SqfIdeal::unit(h.n_vertices())
        } else {
            PowerKind::SquarefreeOrdinary.power(h, k + 1)
        }
    }
}

#[test]
fn negative_controls_are_caught() {
    let s = samples(52, 20);
    let rep = check_splf_axioms(&s, &Shifted);
    assert!(rep
        .violations
        .iter()
        .any(|v| v.axiom == Axiom::Normalization));

    let rep = check_splf_axioms(
        &s,
        &DropLastGenerator {
            kind: PowerKind::SquarefreeOrdinary,
            k: 1,
        },
    );
    assert!(!rep.passed());
    for v in &rep.violations {
        assert!(v.witness.is_some(), "{v:?}");
    }
}
