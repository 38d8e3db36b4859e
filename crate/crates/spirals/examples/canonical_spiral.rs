//! The canonical spiral of a nilpotent element: half the sl2 weight
//! cocharacter, materialized as the nested layers p_N ⊇ u_N with splitting
//! l̃_N, reported as a dimension table and chain quiver.
//!
//! Run with: cargo run --example canonical_spiral

use spirals::nilpotent::ChainType;
use spirals::spiral::canonical_spiral;

fn main() {
    let x = ChainType::new(vec![(0, 3), (1, 1)]).standard_element(2);
    println!(
        "nilpotent of chain type 0:3,1:1 on dims {:?}",
        x.space().dims()
    );

    let s = canonical_spiral(&x).unwrap();
    println!(
        "cocharacter weights: V_0 {:?}, V_1 {:?}",
        s.mu().weights(0),
        s.mu().weights(1)
    );
    println!("epsilon {}, window B = {}\n", s.epsilon(), s.window());

    println!("{:>4} {:>6} {:>6} {:>6}", "N", "dim p", "dim u", "dim l");
    for row in s.report().table {
        if row.dim_p + row.dim_u + row.dim_l > 0 {
            println!(
                "{:>4} {:>6} {:>6} {:>6}",
                row.n, row.dim_p, row.dim_u, row.dim_l
            );
        }
    }

    // the defining membership: x sits in its own splitting layer at N = 1
    assert!(s.split(1).contains(&x));
    println!("\nx lies in the splitting layer l_1 of its canonical spiral");

    let json = serde_json::to_string_pretty(&s.quiver()).unwrap();
    println!("\nchain quiver:\n{json}");
}
