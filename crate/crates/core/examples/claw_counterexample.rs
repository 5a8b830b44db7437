//! The claw with 2×2 matrix labels: the orbit never returns, and every sixth
//! iterate moves the two unipotent corners `(y, z)` by `Φ(y,z) = ((5y+4z)/9, (4y+5z)/9)`.

use ncrowmotion::poset::{claw, ExtendedPoset};
use ncrowmotion::rowmotion::iterate;
use ncrowmotion::verify::{claw_counterexample, claw_labeling, claw_parameters};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn main() {
    let poset = ExtendedPoset::new(claw());
    let f = claw_labeling(&poset, &BigRational::zero(), &BigRational::one());
    let orbit = iterate(&poset, &f, 30);
    for i in 0..=5 {
        let (y, z) = claw_parameters(&poset, orbit.get(6 * i).unwrap()).unwrap();
        println!("R^{:<2} f = f at (y,z) = ({y}, {z})", 6 * i);
    }
    let verdict = claw_counterexample();
    println!("{}", verdict.summary());
    verdict.notes.iter().for_each(|n| println!("  {n}"));
    assert!(!verdict.is_fail());
}
