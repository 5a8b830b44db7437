//! Labelings and ring elements round-trip through JSON exactly.

use ncrowmotion::poset::{rectangle, ExtendedPoset};
use ncrowmotion::rowmotion::Labeling;
use ncrowmotion::RingDescriptor;

fn main() {
    let poset = ExtendedPoset::new(rectangle(2, 2).unwrap());
    for ring in [RingDescriptor::Rational, RingDescriptor::Matrix(2), RingDescriptor::Tropical] {
        let f = Labeling::random(&poset, ring, 9, 5).unwrap();
        let json = f.to_json(&poset);
        println!("{}", serde_json::to_string(&json).unwrap());
        assert_eq!(Labeling::from_json(&poset, &json).unwrap(), f);
    }
    let broken = serde_json::json!({"ring": {"kind": "exact_rational"}, "labels": {"BOT": "1/0"}});
    println!("error: {}", Labeling::from_json(&poset, &broken).unwrap_err());
}
