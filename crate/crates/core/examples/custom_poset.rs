//! A poset given by its cover relations, the canonical linear extension,
//! and the identities that hold on every finite poset.

use ncrowmotion::check::Outcome;
use ncrowmotion::poset::{all_linear_extensions, ExtendedPoset, Poset};
use ncrowmotion::rowmotion::{rowmotion, rowmotion_via_extension, Labeling};
use ncrowmotion::verify::{bottom_top_trial, invariant_trial, TrialResult};
use ncrowmotion::RingDescriptor;

fn main() {
    // A diamond with a pendant element.
    let names = ["lo", "left", "right", "hi", "side"];
    let covers = [("lo", "left"), ("lo", "right"), ("left", "hi"), ("right", "hi"), ("lo", "side")];
    let poset = ExtendedPoset::new(Poset::from_covers(&names, &covers).unwrap());
    let order: Vec<&str> = poset.extension().iter().map(|&v| poset.name(v)).collect();
    println!("canonical extension: {order:?}");

    let f = Labeling::random(&poset, RingDescriptor::Matrix(2), 3, 9).unwrap();
    let rf = rowmotion(&poset, &f);
    let extensions = all_linear_extensions(poset.base(), 1000);
    for ext in &extensions.extensions {
        assert_eq!(rowmotion_via_extension(&poset, &f, ext).unwrap(), rf);
    }
    println!("Rf agrees across all {} linear extensions", extensions.extensions.len());

    let ones = RingDescriptor::Matrix(2).one();
    let unit = f.with_label(poset.bot(), ones.clone()).with_label(poset.top(), ones);
    for (name, result) in
        [("bottom_top", bottom_top_trial(&poset, &f)), ("invariant_sum", invariant_trial(&poset, &unit, 6))]
    {
        println!("{name}: {result:?}");
        assert!(!matches!(result, TrialResult::Checked(Outcome::Fail(_))));
    }
}
