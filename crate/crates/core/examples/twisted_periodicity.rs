//! Twisted periodicity on rectangles over 2×2 rational matrices:
//! `R^{p+q} f = a·inv(b)·f·inv(a)·b` at every element.

use ncrowmotion::verify::{verify_periodicity, TrialConfig};

fn main() {
    for shape in ["rect:1x3", "rect:2x2", "rect:2x3", "rect:3x3"] {
        let cfg = TrialConfig::new(shape.parse().unwrap(), "mat:2".parse().unwrap()).trials(10).seed(42);
        let verdict = verify_periodicity(&cfg).unwrap();
        println!("{shape:<10} {}", verdict.summary());
        assert!(!verdict.is_fail());
    }
}
