//! Periodicity probes on triangles and a trapezoid over 2×2 matrices.
//! Passing trials are evidence, not proof.

use ncrowmotion::verify::{probe_conjecture, TrialConfig};

fn main() {
    for family in ["delta:3", "nabla:3", "tria:3", "trap:4,3"] {
        let cfg = TrialConfig::new(family.parse().unwrap(), "mat:2".parse().unwrap()).trials(5).seed(100);
        let verdict = probe_conjecture(&cfg).unwrap();
        println!("{family:<9} {} [{}]", verdict.summary(), verdict.notes.join("; "));
        for witness in &verdict.failures {
            println!("{}", serde_json::to_string_pretty(&witness.to_json()).unwrap());
        }
    }
}
