//! Build a spiral from a hand-written rational cocharacter, verify the six
//! defining checks over its window, and refine it by an integral secondary
//! cocharacter (which keeps the nilradical and cuts the splitting).
//!
//! Run with: cargo run --example spiral_axioms

use spirals::cochar::RationalCocharacter;
use spirals::graded::GradedSpace;
use spirals::rat::Rat;
use spirals::spiral::{refine_spiral, verify_spiral_axioms, Spiral};

fn main() {
    let space = GradedSpace::new(2, vec![2, 1]);
    let mu = RationalCocharacter::diagonal(
        space.clone(),
        vec![vec![Rat::new(-1, 2), Rat::new(1, 2)], vec![Rat::new(0, 1)]],
    );
    let s = Spiral::new(mu, 1);

    println!(
        "spiral for weights V_0 (-1/2, 1/2), V_1 (0); window B = {}\n",
        s.window()
    );
    let report = verify_spiral_axioms(&s);
    for check in &report.checks {
        println!(
            "{} {:<26} {}",
            if check.pass { "ok  " } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    assert!(report.pass());

    // refine by an integral secondary cocharacter supported on V_0
    let secondary = RationalCocharacter::diagonal(
        space,
        vec![vec![Rat::one(), Rat::zero()], vec![Rat::zero()]],
    );
    let refined = refine_spiral(&s, &secondary).unwrap();
    println!("\nafter refinement:");
    for n in -2..=2 {
        println!(
            "  N={n}: dim p {} -> {}, dim l {} -> {}",
            s.p(n).dim(),
            refined.p(n).dim(),
            s.split(n).dim(),
            refined.split(n).dim()
        );
        // the refined spiral keeps every nilradical layer
        let span = refined.p(n).span();
        assert!(s.u(n).members().iter().all(|e| span.contains(&e.flatten())));
    }
    assert!(verify_spiral_axioms(&refined).pass());
    println!("\nrefined spiral passes the same six checks");
}
