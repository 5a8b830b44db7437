//! Reciprocity on a rectangle: each iterate at `(i,j)` is determined by an
//! earlier iterate at the antipodal cell. Also runs the cross-check that
//! recovers periodicity from two applications of reciprocity.

use ncrowmotion::verify::{verify_reciprocity, verify_reciprocity_implies_periodicity, TrialConfig};

fn main() {
    let cfg = TrialConfig::new("rect:3x2".parse().unwrap(), "mat:3".parse().unwrap()).trials(5).seed(1);
    for verdict in [verify_reciprocity(&cfg).unwrap(), verify_reciprocity_implies_periodicity(&cfg).unwrap()] {
        println!("{:<34} {}", verdict.check, verdict.summary());
        assert!(!verdict.is_fail());
    }
}
