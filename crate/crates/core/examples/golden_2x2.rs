//! Rowmotion on the 2×2 rectangle with rational labels, step by step.
//!
//! With `a=12, w=5, y=7, x=−2, z=10, b=14` the orbit returns after four steps
//! (the ring is commutative, so the twist `a·inv(b)·_·inv(a)·b` is trivial).

use ncrowmotion::poset::{rectangle, ExtendedPoset};
use ncrowmotion::rowmotion::{iterate, toggle, Labeling};
use ncrowmotion::{RingDescriptor, RingElement};

fn main() {
    let poset = ExtendedPoset::new(rectangle(2, 2).unwrap());
    let values = [("BOT", 12), ("(1,1)", 5), ("(1,2)", 7), ("(2,1)", -2), ("(2,2)", 10), ("TOP", 14)];
    let f = Labeling::from_fn(&poset, RingDescriptor::Rational, |v| {
        let name = poset.name(v);
        RingElement::from_i64(values.iter().find(|(n, _)| *n == name).unwrap().1)
    })
    .unwrap();

    let top_cell = poset.at(2, 2).unwrap();
    let toggled = toggle(&poset, &f, top_cell).unwrap().unwrap();
    println!("toggle at (2,2): {}", toggled.get(top_cell));

    let orbit = iterate(&poset, &f, 4);
    for ell in 0..=4 {
        let g = orbit.get(ell).expect("defined");
        let row: Vec<String> =
            poset.hat_order().into_iter().map(|v| format!("{}={}", poset.name(v), g.get(v))).collect();
        println!("R^{ell} f: {}", row.join("  "));
    }
    assert_eq!(orbit.get(4), Some(&f));
}
