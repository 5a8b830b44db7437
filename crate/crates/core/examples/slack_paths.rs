//! Down and up slacks along an orbit on the 3×3 rectangle, their path sums,
//! and the identities relating them.

use ncrowmotion::check::Outcome;
use ncrowmotion::poset::{rectangle, ExtendedPoset};
use ncrowmotion::rowmotion::{iterate, Labeling};
use ncrowmotion::slacks::{
    check_matrix_conversion, check_path_formulas, check_path_sums_agree, check_transition, SlackTable,
};
use ncrowmotion::RingDescriptor;

fn main() {
    let poset = ExtendedPoset::new(rectangle(3, 3).unwrap());
    let f = Labeling::random(&poset, RingDescriptor::Matrix(2), 11, 9).unwrap();
    let orbit = iterate(&poset, &f, 6);
    let table = SlackTable::new(&poset, &orbit);

    let (c11, c33) = (poset.at(1, 1).unwrap(), poset.at(3, 3).unwrap());
    println!("down slack at (2,2), ℓ=1: {:?}", table.down_slack(poset.at(2, 2).unwrap(), 1).map(|x| x.to_string()));
    println!("down path sum (3,3)→(1,1), ℓ=0: {:?}", table.down_path_sum(c33, c11, 0).map(|x| x.to_string()));

    for ell in 0..5 {
        let outcome = Outcome::all([
            check_path_sums_agree(&table, ell).unwrap(),
            check_transition(&table, ell),
            check_path_formulas(&table, ell),
            check_matrix_conversion(&table, ell, 2),
        ]);
        println!("ℓ={ell}: {}", if outcome.is_fail() { "FAIL" } else { "ok" });
        assert!(!outcome.is_fail());
    }
}
