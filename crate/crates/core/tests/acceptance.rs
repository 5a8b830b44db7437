//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use ncrowmotion::algebra::{check_sum_inverse_identity, random_invertible, seeded_rng, RatMatrix};
use ncrowmotion::check::Outcome;
use ncrowmotion::poset::{claw, rectangle, ExtendedPoset, Poset};
use ncrowmotion::rowmotion::{
    check_definedness_ladder, check_normalize_bottom, iterate, rowmotion, toggle, toggle_commutes, Labeling, Orbit,
};
use ncrowmotion::slacks::{
    check_conversion, check_four_neighbors, check_matrix_conversion, check_path_formulas, check_path_sums_agree,
    check_pathjump_sums, check_slack_recursions, check_transition, SlackTable,
};
use ncrowmotion::verify::{
    bottom_top_trial, claw_counterexample, invariant_trial, probe_conjecture, tropical_periodicity, verify_bottom_top,
    verify_invariant_sum, verify_periodicity, verify_reciprocity, Status, TrialConfig, TrialResult, Verdict,
};
use ncrowmotion::{RingDescriptor, RingElement};
use rand::Rng;

type Check = Result<String, String>;

/// Id, title, time budget in seconds, and the check itself.
type Criterion = (&'static str, &'static str, u64, fn() -> Check);

/// Tally of per-item outcomes; any failure is kept with its first witness.
#[derive(Default)]
struct Tally {
    passed: usize,
    skipped: usize,
    failure: Option<String>,
}

impl Tally {
    fn add(&mut self, outcome: Outcome, context: impl FnOnce() -> String) {
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::NotApplicable(_) => self.skipped += 1,
            Outcome::Fail(m) => {
                if self.failure.is_none() {
                    self.failure = Some(format!(
                        "{}: {} at {} ({:?} vs {:?})",
                        context(),
                        m.identity,
                        m.location,
                        m.left.map(|x| x.to_string()),
                        m.right.map(|x| x.to_string())
                    ));
                }
            }
        }
    }

    fn finish(self, what: &str) -> Check {
        match self.failure {
            Some(f) => Err(f),
            None if self.passed == 0 => Err(format!("no {what} was checkable")),
            None => Ok(format!("{} {what} passed, {} not applicable", self.passed, self.skipped)),
        }
    }
}

fn config(poset: &str, ring: &str, trials: usize) -> TrialConfig {
    TrialConfig::new(poset.parse().unwrap(), ring.parse().unwrap()).trials(trials)
}

/// A verdict counts when nothing failed and at least one trial was checked.
fn require(verdict: &Verdict, label: &str) -> Result<(usize, usize), String> {
    if verdict.is_fail() {
        let w = &verdict.failures[0];
        return Err(format!("{label}: {} at {} (seed {:?})", w.mismatch.identity, w.mismatch.location, w.seed));
    }
    if verdict.passed == 0 {
        return Err(format!("{label}: {}", verdict.summary()));
    }
    Ok((verdict.passed, verdict.undefined + verdict.blowup))
}

fn rectangle_sweep(check: fn(&TrialConfig) -> Result<Verdict, ncrowmotion::verify::VerifyError>) -> Check {
    let (mut passed, mut undefined, mut shapes) = (0, 0, 0);
    for ring in ["mat:2", "mat:3"] {
        for p in 1..=7 {
            for q in 1..=8 - p {
                let label = format!("rect:{p}x{q} {ring}");
                let verdict = check(&config(&format!("rect:{p}x{q}"), ring, 20)).map_err(|e| e.to_string())?;
                let (ok, skip) = require(&verdict, &label)?;
                passed += ok;
                undefined += skip;
                shapes += 1;
            }
        }
    }
    Ok(format!("{shapes} shape/ring pairs, {passed} trials passed, {undefined} undefined"))
}

fn c1_periodicity() -> Check {
    rectangle_sweep(verify_periodicity)
}

fn c2_reciprocity() -> Check {
    rectangle_sweep(verify_reciprocity)
}

/// The displayed closed forms for `R f, …, R⁴ f` on the 2×2 rectangle,
/// evaluated directly from the six generic labels.
fn c3_golden() -> Check {
    let poset = ExtendedPoset::new(rectangle(2, 2).unwrap());
    let ring = RingDescriptor::Matrix(2);
    let cell = |i, j| poset.at(i, j).unwrap();
    let mut checked = 0;
    for seed in 0..40u64 {
        let draw = |k: u64| random_invertible(ring, 6 * seed + k, 9).unwrap();
        let (a, w, y, x, z, b) = (draw(0), draw(1), draw(2), draw(3), draw(4), draw(5));
        let f = Labeling::from_fn(&poset, ring, |v| {
            if v == poset.bot() {
                a.clone()
            } else if v == poset.top() {
                b.clone()
            } else {
                match poset.coord(v).map(|c| (c.i, c.j)).unwrap() {
                    (1, 1) => w.clone(),
                    (1, 2) => y.clone(),
                    (2, 1) => x.clone(),
                    _ => z.clone(),
                }
            }
        })
        .unwrap();
        let orbit = iterate(&poset, &f, 4);
        if orbit.undefined_from().is_some() {
            continue;
        }
        let inv = |e: &RingElement| e.try_inverse();
        let expected = (|| {
            let m = |items: &[&RingElement]| items.iter().skip(1).fold(items[0].clone(), |acc, e| &acc * e);
            let (ai, bi, wi, xi, yi, zi) = (inv(&a)?, inv(&b)?, inv(&w)?, inv(&x)?, inv(&y)?, inv(&z)?);
            let xy = &x + &y;
            let xy_inv = inv(&xy)?;
            let xiyi_inv = inv(&(&xi + &yi))?;
            let r1 = [
                (cell(2, 2), m(&[&xy, &zi, &b])),
                (cell(2, 1), m(&[&w, &xi, &xy, &zi, &b])),
                (cell(1, 2), m(&[&w, &yi, &xy, &zi, &b])),
                (cell(1, 1), m(&[&a, &zi, &b])),
            ];
            let r2 = [
                (cell(2, 2), m(&[&w, &(&xi + &yi), &b])),
                (cell(2, 1), m(&[&a, &yi, &b])),
                (cell(1, 2), m(&[&a, &xi, &b])),
                (cell(1, 1), m(&[&a, &bi, &z, &xy_inv, &b])),
            ];
            let r3 = [
                (cell(2, 2), m(&[&a, &wi, &b])),
                (cell(2, 1), m(&[&a, &bi, &z, &xy_inv, &y, &wi, &b])),
                (cell(1, 2), m(&[&a, &bi, &z, &xy_inv, &x, &wi, &b])),
                (cell(1, 1), m(&[&a, &bi, &xiyi_inv, &wi, &b])),
            ];
            let r4 = [&w, &y, &x, &z].map(|e| m(&[&a, &bi, e, &ai, &b]));
            let r4 = [
                (cell(1, 1), r4[0].clone()),
                (cell(1, 2), r4[1].clone()),
                (cell(2, 1), r4[2].clone()),
                (cell(2, 2), r4[3].clone()),
            ];
            Some([r1, r2, r3, r4])
        })();
        let Some(expected) = expected else { continue };
        for (ell, table) in expected.iter().enumerate() {
            let g = orbit.get(ell + 1).unwrap();
            if g.bottom() != &a || g.top() != &b {
                return Err(format!("seed {seed}: R^{} f moved a sentinel", ell + 1));
            }
            for (v, want) in table {
                if g.get(*v) != want {
                    return Err(format!(
                        "seed {seed}: R^{} f at {} is {} but the closed form gives {}",
                        ell + 1,
                        poset.name(*v),
                        g.get(*v),
                        want
                    ));
                }
            }
        }
        checked += 1;
        if checked == 10 {
            break;
        }
    }
    if checked == 0 {
        return Err("no seed produced a defined orbit".into());
    }
    Ok(format!("{checked} random 2x2-matrix realizations match R^1..R^4 closed forms"))
}

fn rect_orbit(p: usize, q: usize, ring: RingDescriptor, seed: u64, steps: usize) -> Option<(ExtendedPoset, Orbit)> {
    let poset = ExtendedPoset::new(rectangle(p, q).unwrap());
    let f = Labeling::random(&poset, ring, seed, 9).unwrap();
    let orbit = iterate(&poset, &f, steps);
    orbit.undefined_from().is_none().then_some((poset, orbit))
}

fn c4_conversion() -> Check {
    let mut tally = Tally::default();
    for p in 2..=4 {
        for q in 1..=4 {
            for seed in 0..2 {
                let Some((poset, orbit)) = rect_orbit(p, q, RingDescriptor::Matrix(2), seed, p + q + 1) else {
                    continue;
                };
                let table = SlackTable::new(&poset, &orbit);
                let ctx = || format!("rect:{p}x{q} seed {seed}");
                for ell in 1..=p + q {
                    for k in 2..=p {
                        for i in 2..=p {
                            tally.add(check_conversion(&table, k, i, ell), ctx);
                            tally.add(check_pathjump_sums(&table, k, i, ell).map_err(|e| e.to_string())?, ctx);
                        }
                    }
                    for k in 0..=p + q {
                        tally.add(check_matrix_conversion(&table, ell, k), ctx);
                    }
                }
            }
        }
    }
    tally.finish("conversion/path-jump/matrix checks")
}

fn c5_path_formulas() -> Check {
    let mut tally = Tally::default();
    let mut cases: Vec<(String, ExtendedPoset, RingDescriptor, u64)> = Vec::new();
    for p in 1..=4 {
        for q in 1..=4 {
            for seed in 0..2 {
                cases.push((
                    format!("rect:{p}x{q}"),
                    ExtendedPoset::new(rectangle(p, q).unwrap()),
                    RingDescriptor::Matrix(2),
                    seed,
                ));
            }
        }
    }
    for seed in 0..3 {
        cases.push(("claw".into(), ExtendedPoset::new(claw()), RingDescriptor::Matrix(2), seed));
    }
    for (name, poset, ring, seed) in &cases {
        let steps = poset.rectangle_shape().map_or(4, |(p, q)| p + q + 1);
        let f = Labeling::random(poset, *ring, *seed, 9).unwrap();
        let orbit = iterate(poset, &f, steps);
        let table = SlackTable::new(poset, &orbit);
        let ctx = || format!("{name} seed {seed}");
        let last = orbit.undefined_from().map_or(steps, |u| u - 1);
        for ell in 0..=last {
            tally.add(check_path_sums_agree(&table, ell).map_err(|e| e.to_string())?, ctx);
            tally.add(check_path_formulas(&table, ell), ctx);
            tally.add(check_transition(&table, ell), ctx);
            for s in 0..poset.hat_len() {
                for t in 0..poset.hat_len() {
                    tally.add(check_slack_recursions(&table, s, t, ell).map_err(|e| e.to_string())?, ctx);
                }
            }
            if let Some((p, q)) = poset.rectangle_shape() {
                for i in 1..p {
                    for j in 1..q {
                        tally.add(check_four_neighbors(&table, i, j, ell), ctx);
                    }
                }
            }
        }
    }
    tally.finish("path/slack checks")
}

fn c6_claw() -> Check {
    let verdict = claw_counterexample();
    require(&verdict, "claw")?;
    let note = "R^6 f carries (y,z) = (4/9, 5/9)";
    if !verdict.notes.iter().any(|n| n == note) {
        return Err(format!("missing witness note: {:?}", verdict.notes));
    }
    Ok(format!("R^m f new and defined for m=1..60, R^(6i) f = f at Φ^i(0,1) for i=1..10; {note}"))
}

/// Random naturally labeled poset: `i < j` with probability `density` for `i < j`.
fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Poset::from_covers(&names, &pairs).unwrap()
}

fn c7_general_identities() -> Check {
    let mut summary = Vec::new();
    for poset in ["claw", "rect:3x3"] {
        for verdict in
            [verify_bottom_top(&config(poset, "mat:2", 10)), verify_invariant_sum(&config(poset, "mat:2", 10))]
        {
            let verdict = verdict.map_err(|e| e.to_string())?;
            let (ok, _) = require(&verdict, &format!("{poset} {}", verdict.check))?;
            summary.push(format!("{poset}/{}: {ok}", verdict.check));
        }
    }
    let mut rng = seeded_rng(7);
    let ring = RingDescriptor::Matrix(2);
    let (mut checked, mut skipped) = (0, 0);
    for index in 0..10 {
        let n = rng.gen_range(1..=7);
        let poset = ExtendedPoset::new(random_poset(&mut rng, n, 0.4));
        for seed in 0..10 {
            let f = Labeling::random(&poset, ring, 1000 * index + seed, 9).unwrap();
            let one = ring.one();
            let unit = f.with_label(poset.bot(), one.clone()).with_label(poset.top(), one);
            for (name, result) in [
                ("bottom_top", bottom_top_trial(&poset, &f)),
                ("invariant_sum", invariant_trial(&poset, &unit, poset.len() + 2)),
            ] {
                match result {
                    TrialResult::Checked(Outcome::Pass) => checked += 1,
                    TrialResult::Checked(Outcome::Fail(m)) => {
                        return Err(format!(
                            "random poset {index} (n={n}) seed {seed} {name}: {} at {}",
                            m.identity, m.location
                        ))
                    }
                    _ => skipped += 1,
                }
            }
        }
    }
    if checked == 0 {
        return Err("no random-poset trial was checkable".into());
    }
    Ok(format!("{}; random posets: {checked} passed, {skipped} undefined", summary.join(", ")))
}

/// Strict down-sets as bitmasks: `below[j]` has bit `i` iff `i < j`.
#[derive(Clone)]
struct SmallPoset {
    below: Vec<u8>,
}

impl SmallPoset {
    fn len(&self) -> usize {
        self.below.len()
    }

    fn canonical_key(&self) -> (Vec<u64>, u64) {
        let n = self.len();
        let above = |i: usize| (0..n).filter(|&j| self.below[j] >> i & 1 == 1).fold(0u8, |m, j| m | 1 << j);
        let mut inv: Vec<u64> =
            (0..n).map(|i| (self.below[i].count_ones() as u64) << 8 | above(i).count_ones() as u64).collect();
        for _ in 0..3 {
            let next: Vec<u64> = (0..n)
                .map(|i| {
                    let mut lower: Vec<u64> = (0..n).filter(|&k| self.below[i] >> k & 1 == 1).map(|k| inv[k]).collect();
                    let mut upper: Vec<u64> = (0..n).filter(|&k| above(i) >> k & 1 == 1).map(|k| inv[k]).collect();
                    lower.sort_unstable();
                    upper.sort_unstable();
                    let mut h = std::collections::hash_map::DefaultHasher::new();
                    std::hash::Hash::hash(&(inv[i], lower, upper), &mut h);
                    std::hash::Hasher::finish(&h)
                })
                .collect();
            inv = next;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| inv[i]);
        let classes: Vec<u64> = order.iter().map(|&i| inv[i]).collect();
        let mut best = u64::MAX;
        let mut perm = Vec::with_capacity(n);
        let mut used = 0u8;
        self.search(&classes, &inv, &mut perm, &mut used, &mut best);
        (classes, best)
    }

    fn search(&self, classes: &[u64], inv: &[u64], perm: &mut Vec<usize>, used: &mut u8, best: &mut u64) {
        let n = self.len();
        if perm.len() == n {
            let mut code = 0u64;
            for a in 0..n {
                for b in 0..n {
                    if self.below[perm[b]] >> perm[a] & 1 == 1 {
                        code |= 1 << (a * 8 + b);
                    }
                }
            }
            *best = (*best).min(code);
            return;
        }
        let class = classes[perm.len()];
        for v in 0..n {
            if *used >> v & 1 == 0 && inv[v] == class {
                *used |= 1 << v;
                perm.push(v);
                self.search(classes, inv, perm, used, best);
                perm.pop();
                *used &= !(1 << v);
            }
        }
    }

    fn to_poset(&self) -> Poset {
        let names: Vec<String> = (0..self.len()).map(|i| format!("e{i}")).collect();
        let pairs: Vec<(String, String)> = (0..self.len())
            .flat_map(|j| (0..self.len()).filter(move |&i| self.below[j] >> i & 1 == 1).map(move |i| (i, j)))
            .map(|(i, j)| (names[i].clone(), names[j].clone()))
            .collect();
        Poset::from_covers(&names, &pairs).unwrap()
    }
}

/// All posets with at most `max` elements up to isomorphism: each one is a
/// smaller poset plus a new maximal element above an order ideal.
fn all_small_posets(max: usize) -> Vec<Vec<SmallPoset>> {
    let mut levels = vec![vec![SmallPoset { below: Vec::new() }]];
    for n in 1..=max {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for base in &levels[n - 1] {
            for ideal in 0u16..1 << (n - 1) {
                let ideal = ideal as u8;
                if (0..n - 1).any(|i| ideal >> i & 1 == 1 && base.below[i] & !ideal != 0) {
                    continue;
                }
                let mut below = base.below.clone();
                below.push(ideal);
                let candidate = SmallPoset { below };
                if seen.insert(candidate.canonical_key()) {
                    level.push(candidate);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Rowmotion along every linear extension, organized by toggled sets: every
/// reversed extension toggles a growing up-set, so all extensions agree iff at
/// each up-set every possible last toggle yields the same labeling. Returns
/// the number of linear extensions covered.
fn check_all_extensions(
    poset: &ExtendedPoset,
    below: &[u8],
    f: &Labeling,
    reference: &Option<Labeling>,
) -> Result<u64, String> {
    let n = below.len();
    let full = ((1u16 << n) - 1) as u8;
    let mut states: Vec<Option<(Option<Labeling>, u64)>> = vec![None; 1 << n];
    states[0] = Some((Some(f.clone()), 1));
    let mut masks: Vec<u8> = (0..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let taken = if mask == full { states[mask as usize].clone() } else { states[mask as usize].take() };
        let Some((state, paths)) = taken else { continue };
        for v in 0..n {
            let above_done = (0..n).all(|w| below[w] >> v & 1 == 0 || mask >> w & 1 == 1);
            if mask >> v & 1 == 1 || !above_done {
                continue;
            }
            let next = match &state {
                Some(g) => toggle(poset, g, v).map_err(|e| e.to_string())?,
                None => None,
            };
            let slot = &mut states[(mask | 1 << v) as usize];
            match slot {
                None => *slot = Some((next, paths)),
                Some((existing, count)) if *existing == next => *count += paths,
                Some(_) => return Err(format!("toggle orders disagree after toggling set {:#010b}", mask | 1 << v)),
            }
        }
    }
    let (result, extensions) = states[full as usize].clone().expect("full set reached");
    if result != *reference {
        return Err("toggling every element differs from the canonical rowmotion".into());
    }
    Ok(extensions)
}

fn c8_structural() -> Check {
    const EXPECTED_COUNTS: [usize; 9] = [1, 1, 2, 5, 16, 63, 318, 2045, 16999];
    let levels = all_small_posets(8);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    if counts != EXPECTED_COUNTS {
        return Err(format!("poset enumeration produced {counts:?}"));
    }
    let ring = RingDescriptor::Matrix(2);
    let mut leaves = 0u64;
    for (n, level) in levels.iter().enumerate() {
        for (index, small) in level.iter().enumerate() {
            let poset = ExtendedPoset::new(small.to_poset());
            let labelings = if n <= 6 { 3 } else { 1 };
            for k in 0..labelings {
                let seed = (n as u64) << 40 | (index as u64) << 8 | k;
                let f = Labeling::random(&poset, ring, seed, 3).unwrap();
                let reference = rowmotion(&poset, &f);
                leaves += check_all_extensions(&poset, &small.below, &f, &reference)
                    .map_err(|e| format!("{n}-element poset #{index} seed {seed}: {e}"))?;
            }
        }
    }

    let mut rng = seeded_rng(8);
    let mut pairs = 0;
    while pairs < 200 {
        let n = rng.gen_range(2..=8);
        let small = &levels[n][rng.gen_range(0..levels[n].len())];
        let (v, w) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if v == w || small.below[v] >> w & 1 == 1 || small.below[w] >> v & 1 == 1 {
            continue;
        }
        let poset = ExtendedPoset::new(small.to_poset());
        let f = Labeling::random(&poset, ring, rng.gen(), 9).unwrap();
        match toggle_commutes(&poset, &f, v, w).map_err(|e| e.to_string())? {
            Outcome::Pass => pairs += 1,
            other => return Err(format!("toggles at e{v}, e{w} of {n}-element poset: {other:?}")),
        }
    }

    let mut ladder = Tally::default();
    let mut normalize = Tally::default();
    for (n, level) in levels.iter().enumerate().take(6) {
        for (index, small) in level.iter().enumerate() {
            let poset = ExtendedPoset::new(small.to_poset());
            let ctx = || format!("{n}-element poset #{index}");
            for _ in 0..4 {
                let sparse = Labeling::from_fn(&poset, ring, |_| {
                    RingElement::Matrix(RatMatrix::from_i64(2, &[0; 4].map(|_| rng.gen_range(-1..=1))))
                })
                .unwrap();
                ladder.add(check_definedness_ladder(&poset, &sparse), ctx);
                normalize.add(check_normalize_bottom(&poset, &sparse), ctx);
                let generic = Labeling::random(&poset, ring, rng.gen(), 9).unwrap();
                ladder.add(check_definedness_ladder(&poset, &generic), ctx);
                normalize.add(check_normalize_bottom(&poset, &generic), ctx);
            }
        }
    }
    let ladder = ladder.finish("definedness-ladder checks")?;
    let normalize = normalize.finish("bottom-normalization checks")?;

    for seed in 0..1000u64 {
        let a = random_invertible(ring, 2 * seed, 9).unwrap();
        let b = random_invertible(ring, 2 * seed + 1, 9).unwrap();
        if check_sum_inverse_identity(&a, &b).is_fail() {
            return Err(format!("a+b inverse identity fails for matrix pair {seed}"));
        }
    }
    Ok(format!(
        "all {} posets with ≤8 elements, {leaves} extension orders agree; {pairs} incomparable toggle pairs commute; {ladder}; {normalize}; 1000 matrix pairs satisfy the a+b identity",
        counts.iter().sum::<usize>()
    ))
}

fn c9_conjectures() -> Check {
    let mut parts = Vec::new();
    for (family, ring) in [("delta:3", "mat:2"), ("nabla:3", "mat:2"), ("tria:3", "mat:3"), ("trap:4,3", "mat:3")] {
        let verdict = probe_conjecture(&config(family, ring, 10)).map_err(|e| e.to_string())?;
        if verdict.status != Status::Pass {
            let witness = verdict.failures.first().map(|w| w.to_json().to_string()).unwrap_or_default();
            return Err(format!("{family}: {} {witness}", verdict.summary()));
        }
        parts.push(format!("{family}/{ring} {} [{}]", verdict.summary(), verdict.notes.join("")));
    }
    Ok(parts.join("; "))
}

fn c10_tropical() -> Check {
    let mut passed = 0;
    for p in 1..=3 {
        for q in 1..=3 {
            let verdict =
                tropical_periodicity(&config(&format!("rect:{p}x{q}"), "trop", 20)).map_err(|e| e.to_string())?;
            let (ok, skipped) = require(&verdict, &format!("rect:{p}x{q}"))?;
            if skipped > 0 {
                return Err(format!("rect:{p}x{q}: finite tropical labels gave {skipped} undefined trials"));
            }
            passed += ok;
        }
    }
    Ok(format!("9 rectangles, {passed} trials with R^(p+q) f = f"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("C1", "twisted periodicity on rectangles", 30, c1_periodicity),
        ("C2", "reciprocity on rectangles", 60, c2_reciprocity),
        ("C3", "2x2 closed forms", 1, c3_golden),
        ("C4", "conversion identity and path jumps", 60, c4_conversion),
        ("C5", "path formulas and slack recursions", 60, c5_path_formulas),
        ("C6", "claw counterexample", 5, c6_claw),
        ("C7", "general-poset identities", 30, c7_general_identities),
        ("C8", "structural properties", 60, c8_structural),
        ("C9", "conjecture probes", 60, c9_conjectures),
        ("C10", "tropical periodicity", 5, c10_tropical),
    ];
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    let mut ran = 0;
    for (id, name, budget, run) in criteria {
        if !only.is_empty() && !only.iter().any(|o| o == id) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (status, detail) = match (&result, over) {
            (Ok(detail), false) => ("PASS", detail.clone()),
            (Ok(detail), true) => ("FAIL", format!("over the {budget} s budget; {detail}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{id:<4} {status}  {name} [{:.2} s / {budget} s]  {detail}", elapsed.as_secs_f64());
    }
    println!("acceptance: {} of {ran} criteria passed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
