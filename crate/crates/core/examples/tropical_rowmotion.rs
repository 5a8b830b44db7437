//! Max-plus rowmotion: piecewise-linear and, on rectangles, exactly periodic.

use ncrowmotion::poset::{rectangle, ExtendedPoset};
use ncrowmotion::rowmotion::{iterate, Labeling};
use ncrowmotion::verify::{tropical_periodicity, TrialConfig};
use ncrowmotion::RingDescriptor;

fn main() {
    let poset = ExtendedPoset::new(rectangle(2, 3).unwrap());
    let f = Labeling::random(&poset, RingDescriptor::Tropical, 5, 6).unwrap();
    let orbit = iterate(&poset, &f, 5);
    println!("{}", serde_json::to_string(&orbit.to_json(&poset)).unwrap());
    assert_eq!(orbit.get(5), Some(&f));

    let cfg = TrialConfig::new("rect:3x3".parse().unwrap(), RingDescriptor::Tropical).trials(20);
    let verdict = tropical_periodicity(&cfg).unwrap();
    println!("{}", verdict.summary());
}
